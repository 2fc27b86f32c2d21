// specirr command line: principal-ratio and irregularity reports (ratio),
// exhaustive extremal search (search), best kite decomposition per order
// (kiteopt), self-check suites (verify), and single-edge perturbation
// analysis (perturb). Exit codes: 0 ok, 1 failed check / internal
// inconsistency, 2 bad usage or malformed input.

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "specirr/closed_form.hpp"
#include "specirr/errors.hpp"
#include "specirr/graph.hpp"
#include "specirr/irregularity.hpp"
#include "specirr/search.hpp"
#include "specirr/spectral.hpp"
#include "specirr/verify.hpp"

namespace {

using namespace specirr;

struct Options {
  std::string format = "plain";
  std::string output;  // empty = stdout
  double tol = 1e-12;
  int threads = 0;  // 0 = hardware_concurrency
  std::uint64_t seed = 12345;
};

// ====================== report model ======================
// Every subcommand fills one Report; the three emitters below are the only
// place output text is produced, so plain/csv/json always carry the same
// values. Doubles go out with 17 significant digits (csv/plain) or nlohmann's
// shortest round-trip form (json); both parse back to the identical double.

using Val = std::variant<long long, double, bool, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> cols;
  std::vector<std::vector<Val>> rows;
};

struct Report {
  std::vector<std::pair<std::string, Val>> fields;
  std::vector<Table> tables;
  void add(std::string k, Val v) {
    fields.emplace_back(std::move(k), std::move(v));
  }
};

std::string fmt_val(const Val& v) {
  if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&v)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", *d);
    return buf;
  }
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::get<std::string>(v);
}

void emit_plain(const Report& r, std::ostream& os) {
  for (const auto& [k, v] : r.fields) os << k << " = " << fmt_val(v) << '\n';
  for (const auto& t : r.tables) {
    os << '\n' << t.name << ":\n";
    std::vector<std::size_t> w(t.cols.size());
    for (std::size_t c = 0; c < t.cols.size(); ++c) w[c] = t.cols[c].size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : t.rows) {
      std::vector<std::string> line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line.push_back(fmt_val(row[c]));
        w[c] = std::max(w[c], line.back().size());
      }
      cells.push_back(std::move(line));
    }
    auto pad = [&](const std::string& s, std::size_t width, bool last) {
      os << s;
      if (!last)
        for (std::size_t i = s.size(); i < width + 2; ++i) os << ' ';
    };
    os << "  ";
    for (std::size_t c = 0; c < t.cols.size(); ++c)
      pad(t.cols[c], w[c], c + 1 == t.cols.size());
    os << '\n';
    for (const auto& line : cells) {
      os << "  ";
      for (std::size_t c = 0; c < line.size(); ++c)
        pad(line[c], w[c], c + 1 == line.size());
      os << '\n';
    }
  }
}

void emit_csv(const Report& r, std::ostream& os) {
  os << "field,value\n";
  for (const auto& [k, v] : r.fields) os << k << ',' << fmt_val(v) << '\n';
  for (const auto& t : r.tables) {
    os << "\ntable," << t.name << '\n';
    for (std::size_t c = 0; c < t.cols.size(); ++c)
      os << t.cols[c] << (c + 1 == t.cols.size() ? '\n' : ',');
    for (const auto& row : t.rows)
      for (std::size_t c = 0; c < row.size(); ++c)
        os << fmt_val(row[c]) << (c + 1 == row.size() ? '\n' : ',');
  }
}

void emit_json(const Report& r, std::ostream& os) {
  nlohmann::ordered_json j;
  auto jval = [](const Val& v) -> nlohmann::ordered_json {
    if (const auto* i = std::get_if<long long>(&v)) return *i;
    if (const auto* d = std::get_if<double>(&v)) return *d;
    if (const auto* b = std::get_if<bool>(&v)) return *b;
    return std::get<std::string>(v);
  };
  for (const auto& [k, v] : r.fields) j[k] = jval(v);
  for (const auto& t : r.tables) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json o;
      for (std::size_t c = 0; c < row.size(); ++c) o[t.cols[c]] = jval(row[c]);
      arr.push_back(std::move(o));
    }
    j[t.name] = std::move(arr);
  }
  os << j.dump(2) << '\n';
}

void emit(const Report& r, const Options& opt) {
  std::ofstream fout;
  std::ostream* os = &std::cout;
  if (!opt.output.empty()) {
    fout.open(opt.output);
    if (!fout) throw input_error("cannot open output file '" + opt.output + "'");
    os = &fout;
  }
  if (opt.format == "csv")
    emit_csv(r, *os);
  else if (opt.format == "json")
    emit_json(r, *os);
  else
    emit_plain(r, *os);
}

// ====================== input parsing ======================

long long strict_int(std::string_view t) {
  long long v = 0;
  const auto* end = t.data() + t.size();
  auto [p, ec] = std::from_chars(t.data(), end, v);
  if (ec != std::errc{} || p != end)
    throw input_error("bad integer '" + std::string(t) + "'");
  return v;
}

int family_param(std::string_view t) {
  const long long v = strict_int(t);
  if (v < 0 || v > 1000000)
    throw input_error("family parameter out of range: " + std::string(t));
  return int(v);
}

Graph make_family(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::vector<int> a;
  std::string_view rest = std::string_view(spec).substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    a.push_back(family_param(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  auto arity = [&](std::size_t k) {
    if (a.size() != k)
      throw input_error("family '" + name + "' takes " + std::to_string(k) +
                        (k == 1 ? " parameter" : " parameters"));
  };
  if (name == "kite") {
    arity(2);
    return make_kite({a[0], a[1]});
  }
  if (name == "pineapple") {
    arity(2);
    return make_pineapple(a[0], a[1]);
  }
  if (name == "path") {
    arity(1);
    return make_path(a[0]);
  }
  if (name == "complete") {
    arity(1);
    return make_complete(a[0]);
  }
  if (name == "cycle") {
    arity(1);
    return make_cycle(a[0]);
  }
  if (name == "star") {
    arity(1);
    return make_star(a[0]);
  }
  throw input_error("unknown family '" + name +
                    "' (expected kite:r,s pineapple:c,p path:n complete:n "
                    "cycle:n star:m)");
}

// Family spec if it has a colon, else an edge-list file if it opens (or looks
// like a path), else a graph6 string.
Graph load_graph(const std::string& in) {
  if (in.find(':') != std::string::npos) return make_family(in);
  std::ifstream f(in);
  if (f) return parse_edge_list(f);
  if (in.find('/') != std::string::npos || in.find('.') != std::string::npos)
    throw input_error("cannot open input file '" + in + "'");
  return graph6_decode(in);
}

void require_connected(const Graph& g) {
  if (is_connected(g)) return;
  // name one separated pair for the diagnostic
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0, fr = frontier;
    while (fr) {
      const int u = std::countr_zero(fr);
      fr &= fr - 1;
      next |= g.adj[u];
    }
    frontier = next & ~seen;
    seen |= frontier;
  }
  int w = 0;
  for (int v = 0; v < g.n; ++v)
    if (!((seen >> v) & 1)) {
      w = v;
      break;
    }
  throw input_error("graph is disconnected: no path joins vertex 0 and vertex " +
                    std::to_string(w));
}

// ====================== subcommands ======================

int cmd_ratio(const Options& opt, const std::string& input) {
  const Graph g = load_graph(input);
  require_connected(g);
  const SpectralData sd = principal_eigenpair(g, opt.tol);
  int vmin = 0, vmax = 0;
  for (int v = 1; v < g.n; ++v) {
    if (sd.v[v] < sd.v[vmin]) vmin = v;
    if (sd.v[v] > sd.v[vmax]) vmax = v;
  }
  const long m = g.edge_count();
  Report r;
  r.add("n", (long long)g.n);
  r.add("edges", (long long)m);
  r.add("lambda1", sd.lambda1);
  r.add("gamma", sd.gamma);
  r.add("log_gamma", std::log(sd.gamma));
  r.add("epsilon", sd.lambda1 - 2.0 * double(m) / g.n);
  r.add("variance", variance(g));
  r.add("albertson", (long long)albertson(g));
  r.add("s_measure", s_irregularity(g));
  r.add("residual", sd.residual);
  r.add("min_entry_vertex", (long long)vmin);
  r.add("max_entry_vertex", (long long)vmax);
  r.add("min_entry", sd.v[vmin]);
  emit(r, opt);
  return 0;
}

int cmd_search(const Options& opt, int n, const std::string& input_path) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  SearchResult res;
  ScanStats ingest{};
  const bool from_file = !input_path.empty();
  if (from_file) {
    std::ifstream f(input_path);
    if (!f) throw input_error("cannot open input file '" + input_path + "'");
    // first pass validates and reports bad lines; the reduction then replays
    // only the accepted graphs, so each graph is solved exactly once
    std::ostringstream valid;
    ingest = ingest_graph6(
        f, [&](const Graph& g) { valid << graph6_encode(g) << '\n'; },
        &std::cerr);
    std::istringstream replay(valid.str());
    res = find_extremal(replay, opt.tol);
  } else {
    res = find_extremal(n, opt.tol, opt.threads);
  }
  // redo the audit under the requested seed
  const SpectralData sd = principal_eigenpair(res.best, opt.tol);
  res.audit = structure_check(res.best, sd, opt.seed);
  const double wall =
      std::chrono::duration<double>(clock::now() - t0).count();

  Report r;
  r.add("n", (long long)res.n);
  r.add("witness", graph6_encode(res.best));
  r.add("log_gamma", res.log_gamma);
  if (res.kite) {
    r.add("kite", "P_" + std::to_string(res.kite->r) + ".K_" +
                      std::to_string(res.kite->s));
    r.add("kite_r", (long long)res.kite->r);
    r.add("kite_s", (long long)res.kite->s);
  } else {
    r.add("kite", "not a kite");
    r.add("kite_r", (long long)0);
    r.add("kite_s", (long long)0);
  }
  const StructureReport& a = res.audit;
  r.add("k", (long long)a.k);
  r.add("c_size", (long long)a.c_size);
  r.add("lambda_gt_nk", a.lambda_gt_nk);
  r.add("pendant_prefix_len", (long long)a.pendant_prefix_len);
  r.add("xk_dominates", a.xk_dominates);
  r.add("deg_xk2", (long long)a.deg_xk2);
  r.add("deg_xk1", (long long)a.deg_xk1);
  r.add("nbhd_sum_ok", a.nbhd_sum_ok);
  r.add("xk1_degree_bound", a.xk1_degree_bound);
  r.add("xk1_below_bound", a.xk1_below_bound);
  std::string path;
  for (std::size_t i = 0; i < a.path.size(); ++i) {
    if (i) path += ' ';
    path += std::to_string(a.path[i]);
  }
  r.add("path", path);
  r.add("graphs_scanned", (long long)res.graphs_scanned);
  if (from_file) {
    r.add("lines_read", (long long)ingest.visited);
    r.add("lines_rejected", (long long)ingest.malformed);
  }
  r.add("residual_violations", (long long)res.residual_violations);
  r.add("tie_ambiguous", res.tie_ambiguous);
  r.add("wall_time_s", wall);
  Table t{"near_ties", {"graph6", "log_gamma"}, {}};
  for (const auto& e : res.near_ties) t.rows.push_back({e.g6, e.log_gamma});
  r.tables.push_back(std::move(t));
  emit(r, opt);
  return 0;
}

int cmd_kiteopt(const Options& opt, const std::vector<long long>& ns,
                bool full_table) {
  if (ns.empty()) throw input_error("kiteopt: pass --n n1,n2,...");
  Report r;
  Table results{"results", {"n", "r", "s", "log_gamma", "s_log_n_over_n"}, {}};
  std::vector<Table> extras;
  for (const long long n : ns) {
    const KiteOptResult k = kite_optimize(n, opt.tol);
    results.rows.push_back({n, k.best_r, (long long)k.best_s, k.log_gamma,
                            double(k.best_s) * std::log(double(n)) / double(n)});
    if (full_table) {
      Table t{"table_n" + std::to_string(n), {"s", "r", "log_gamma"}, {}};
      for (const auto& row : k.table)
        t.rows.push_back({(long long)row.s, row.r, row.log_gamma});
      extras.push_back(std::move(t));
    }
  }
  r.tables.push_back(std::move(results));
  for (auto& t : extras) r.tables.push_back(std::move(t));
  emit(r, opt);
  return 0;
}

int cmd_verify(const Options& opt, const std::string& suite) {
  std::vector<CheckResult> rows;
  auto run_one = [&](const std::string& s) {
    std::vector<CheckResult> part;
    if (s == "lemma1")
      part = verify_lemma1(opt.tol);
    else if (s == "lemma2")
      part = verify_lemma2(opt.tol);
    else if (s == "lemma7")
      part = verify_lemma7(opt.tol);
    else if (s == "sigma-series")
      part = verify_sigma_series();
    else
      throw input_error("unknown suite '" + s +
                        "' (expected lemma1, lemma2, lemma7, sigma-series, "
                        "all)");
    rows.insert(rows.end(), part.begin(), part.end());
  };
  if (suite == "all")
    for (const char* s : {"lemma1", "lemma2", "lemma7", "sigma-series"})
      run_one(s);
  else
    run_one(suite);

  long long failed = 0;
  Table t{"checks", {"suite", "check", "status", "margin", "detail"}, {}};
  for (const auto& c : rows) {
    if (!c.pass) ++failed;
    t.rows.push_back({c.suite, c.check, std::string(c.pass ? "pass" : "FAIL"),
                      c.margin, c.detail});
  }
  Report r;
  r.add("suite", suite);
  r.add("checks_run", (long long)rows.size());
  r.add("checks_failed", failed);
  r.tables.push_back(std::move(t));
  emit(r, opt);
  return failed ? 1 : 0;
}

int cmd_perturb(const Options& opt, const std::string& input,
                const std::string& edge, long long tracked, double n_cond) {
  const Graph g = load_graph(input);
  require_connected(g);
  const auto comma = edge.find(',');
  if (comma == std::string::npos)
    throw input_error("--edge expects 'u,v' with integer endpoints");
  const int u = int(strict_int(std::string_view(edge).substr(0, comma)));
  const int v = int(strict_int(std::string_view(edge).substr(comma + 1)));
  if (tracked < 0) {
    // default: the min-entry vertex, the one gamma is about
    const SpectralData sd = principal_eigenpair(g, opt.tol);
    tracked = 0;
    for (int w = 1; w < g.n; ++w)
      if (sd.v[w] < sd.v[tracked]) tracked = w;
  }
  if (n_cond <= 0) n_cond = double(g.n);
  const PerturbationReport p =
      perturb_analysis(g, u, v, int(tracked), n_cond, opt.tol);
  Report r;
  r.add("n", (long long)g.n);
  r.add("edge_u", (long long)u);
  r.add("edge_v", (long long)v);
  r.add("tracked_vertex", tracked);
  r.add("n_for_condition", n_cond);
  r.add("delta1", p.delta1);
  r.add("delta2", p.delta2);
  r.add("log_gamma_before", p.gamma_before);
  r.add("log_gamma_after", p.gamma_after);
  r.add("increase_condition", p.increase_condition);
  r.add("decrease_condition", p.decrease_condition);
  r.add("observed_increase", p.observed_increase);
  emit(r, opt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{
      "spectral irregularity toolkit: principal ratio, extremal search, "
      "kite optimization"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", opt.output, "write the report to a file");
  app.add_option("--tol", opt.tol,
                 "residual tolerance for the eigensolver, in (0, 1e-3]")
      ->capture_default_str();
  app.add_option("--threads", opt.threads,
                 "worker threads for the labeled scan (0 = all cores)");
  app.add_option("--seed", opt.seed, "seed for randomized sub-checks")
      ->capture_default_str();

  std::string ratio_input;
  auto* ratio = app.add_subcommand(
      "ratio",
      "eigenvalue, principal ratio, and irregularity measures of one graph");
  ratio->fallthrough();
  ratio->add_option("input", ratio_input,
                    "family (kite:r,s pineapple:c,p path:n complete:n "
                    "cycle:n star:m), edge-list file, or graph6 string")
      ->required();

  int search_n = 0;
  std::string search_input;
  auto* search = app.add_subcommand(
      "search", "gamma maximizer over all connected graphs");
  search->fallthrough();
  auto* search_n_opt =
      search->add_option("--n", search_n, "scan every labeled graph on n vertices (3..8)");
  auto* search_in_opt =
      search->add_option("--input", search_input, "graph6 file, one graph per line");
  search_n_opt->excludes(search_in_opt);

  std::vector<long long> kiteopt_ns;
  bool kiteopt_table = false;
  auto* kiteopt = app.add_subcommand(
      "kiteopt", "best kite P_r.K_s with r + s - 1 = n, per n");
  kiteopt->fallthrough();
  kiteopt->add_option("--n", kiteopt_ns, "orders to optimize, comma separated")
      ->delimiter(',');
  kiteopt->add_flag("--table", kiteopt_table, "also emit the full per-s table");

  std::string verify_suite;
  auto* verify = app.add_subcommand("verify", "run a self-check suite");
  verify->fallthrough();
  verify
      ->add_option("suite", verify_suite,
                   "lemma1 | lemma2 | lemma7 | sigma-series | all")
      ->required();

  std::string perturb_input, perturb_edge;
  long long perturb_tracked = -1;
  double perturb_ncond = 0;
  auto* perturb = app.add_subcommand(
      "perturb", "effect of adding one edge on lambda1 and gamma");
  perturb->fallthrough();
  perturb
      ->add_option("input", perturb_input,
                   "family, edge-list file, or graph6 string")
      ->required();
  perturb->add_option("--edge", perturb_edge, "edge to add, as 'u,v'")
      ->required();
  perturb->add_option("--tracked", perturb_tracked,
                      "eigenvector entry to track (default: min-entry vertex)");
  perturb->add_option("--n-cond", perturb_ncond,
                      "n used in the directional conditions (default: |V|)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!(opt.tol > 0 && opt.tol <= 1e-3))
      throw input_error("--tol must be in (0, 1e-3]");
    if (opt.threads < 0) throw input_error("--threads must be >= 0");
    if (opt.threads == 0) {
      const unsigned hc = std::thread::hardware_concurrency();
      opt.threads = hc ? int(hc) : 1;
    }
    if (app.got_subcommand(ratio)) return cmd_ratio(opt, ratio_input);
    if (app.got_subcommand(search)) {
      if (!*search_n_opt && !*search_in_opt)
        throw input_error("search: pass --n or --input");
      return cmd_search(opt, search_n, search_input);
    }
    if (app.got_subcommand(kiteopt))
      return cmd_kiteopt(opt, kiteopt_ns, kiteopt_table);
    if (app.got_subcommand(verify)) return cmd_verify(opt, verify_suite);
    if (app.got_subcommand(perturb))
      return cmd_perturb(opt, perturb_input, perturb_edge, perturb_tracked,
                         perturb_ncond);
    throw input_error("no subcommand");
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const check_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
