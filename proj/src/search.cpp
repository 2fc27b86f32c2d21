#include "specirr/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <thread>

#include "specirr/closed_form.hpp"
#include "specirr/kernels.hpp"

namespace specirr {

namespace {

constexpr double tie_window = 1e-9;  // log-gamma units

// ====================== fingerprint ======================
// Exact isomorphism invariants, cheap enough for the rare near-tie
// candidates: degree sequence, sorted (degree, neighbor-degree multiset)
// rows, sorted per-vertex triangle counts, edge count. Isomorphic graphs
// always collide; distinct graphs colliding would merge two audit entries,
// which the canonical codes at finalization would still keep honest for the
// winner itself.
std::string fingerprint(const Graph& g) {
  const int n = g.n;
  std::string fp;
  fp.push_back(char(n));
  std::vector<std::string> rows(n);
  std::vector<char> tri(n);
  std::vector<char> degs(n);
  for (int v = 0; v < n; ++v) {
    degs[v] = char(g.degree(v));
    std::string row;
    std::uint64_t nb = g.adj[v];
    int t = 0;
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      row.push_back(char(g.degree(u)));
      t += std::popcount(g.adj[v] & g.adj[u]);
    }
    std::sort(row.begin(), row.end());
    rows[v] = char(g.degree(v)) + row;
    tri[v] = char(t / 2);
  }
  std::sort(degs.begin(), degs.end());
  std::sort(rows.begin(), rows.end());
  std::sort(tri.begin(), tri.end());
  fp.append(degs.begin(), degs.end());
  fp.push_back('|');
  for (const auto& r : rows) {
    fp.append(r);
    fp.push_back(';');
  }
  fp.append(tri.begin(), tri.end());
  const long m = g.edge_count();
  fp.push_back(char(m >> 8));
  fp.push_back(char(m & 255));
  return fp;
}

// ====================== near-tie reducer ======================
struct Candidate {
  Graph g;
  double lg = 0;
  std::string fp;
};

struct Reducer {
  double best = -HUGE_VAL;
  std::vector<Candidate> pool;  // everything within tie_window of best

  void offer(const Graph& g, double lg) {
    if (lg <= best - tie_window) return;
    const bool advanced = lg > best;
    if (advanced) best = lg;
    std::string fp = fingerprint(g);
    bool found = false;
    for (auto& c : pool)
      if (c.fp == fp) {
        found = true;
        if (lg > c.lg) {
          c.lg = lg;
          c.g = g;
        }
        break;
      }
    if (!found) pool.push_back({g, lg, std::move(fp)});
    if (advanced)
      std::erase_if(pool,
                    [&](const Candidate& c) { return c.lg <= best - tie_window; });
  }

  void merge(const Reducer& o) {
    for (const auto& c : o.pool) {
      if (c.lg <= best - tie_window) continue;
      if (c.lg > best) best = c.lg;
      bool found = false;
      for (auto& mine : pool)
        if (mine.fp == c.fp) {
          found = true;
          if (c.lg > mine.lg) {
            mine.lg = c.lg;
            mine.g = c.g;
          }
          break;
        }
      if (!found) pool.push_back(c);
    }
    std::erase_if(pool,
                  [&](const Candidate& c) { return c.lg <= best - tie_window; });
  }
};

// ====================== labeled enumeration ======================
struct EdgeTable {
  int n = 0, ne = 0;
  int eu[64 * 63 / 2], ev[64 * 63 / 2];
  std::uint64_t inc[8]{};  // edge-mask incident to each vertex, n <= 8
};

EdgeTable edge_table(int n) {
  EdgeTable t;
  t.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      t.eu[t.ne] = u;
      t.ev[t.ne] = v;
      t.inc[u] |= 1ull << t.ne;
      t.inc[v] |= 1ull << t.ne;
      ++t.ne;
    }
  return t;
}

template <typename F>
void scan_range(const EdgeTable& t, std::uint64_t lo, std::uint64_t hi,
                std::uint64_t& connected, F&& fn) {
  const int n = t.n;
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    bool isolated = false;
    for (int v = 0; v < n; ++v)
      if (!(mask & t.inc[v])) {
        isolated = true;
        break;
      }
    if (isolated) continue;
    Graph g;
    g.n = n;
    std::uint64_t m = mask;
    while (m) {
      const int e = std::countr_zero(m);
      m &= m - 1;
      g.adj[t.eu[e]] |= 1ull << t.ev[e];
      g.adj[t.ev[e]] |= 1ull << t.eu[e];
    }
    if (!is_connected(g)) continue;
    ++connected;
    fn(g);
  }
}

int clamp_threads(int threads, std::uint64_t work) {
  if (threads < 1) throw input_error("threads must be >= 1");
  return int(std::min<std::uint64_t>(std::uint64_t(std::min(threads, 64)),
                                     std::max<std::uint64_t>(work, 1)));
}

// sound pruning bound: gamma <= ub^diam with ub = max over edges of
// sqrt(d_u d_v) >= lambda1
double log_gamma_upper(const Graph& g) {
  const int n = g.n;
  if (n == 1) return 0.0;
  int degs[8];
  for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
  int best_dd = 1;
  for (int v = 0; v < n; ++v) {
    std::uint64_t row = g.adj[v] >> (v + 1) << (v + 1);
    while (row) {
      const int u = std::countr_zero(row);
      row &= row - 1;
      best_dd = std::max(best_dd, degs[v] * degs[u]);
    }
  }
  const std::uint64_t full = (n == 64) ? ~0ull : (1ull << n) - 1;
  int diam = 0;
  for (int v = 0; v < n; ++v) {
    std::uint64_t seen = 1ull << v, frontier = seen;
    int depth = 0;
    while (seen != full) {
      std::uint64_t next = 0, f = frontier;
      while (f) {
        const int u = std::countr_zero(f);
        f &= f - 1;
        next |= g.adj[u];
      }
      frontier = next & ~seen;
      seen |= frontier;
      ++depth;
    }
    diam = std::max(diam, depth);
  }
  return 0.5 * diam * std::log(double(best_dd));
}

SearchResult finalize(Reducer red, int fallback_n, std::uint64_t scanned,
                      std::uint64_t violations, double tol) {
  if (red.pool.empty()) throw input_error("find_extremal: empty source");
  std::erase_if(red.pool, [&](const Candidate& c) {
    return c.lg <= red.best - tie_window;
  });
  // one entry per isomorphism class, keyed by canonical code (graph6 text
  // beyond the factorial-scan range)
  struct Final {
    std::string key;
    Candidate c;
  };
  std::vector<Final> finals;
  for (auto& c : red.pool) {
    std::string key =
        c.g.n <= 10 ? canonical_code(c.g) : graph6_encode(c.g);
    bool found = false;
    for (auto& f : finals)
      if (f.key == key) {
        found = true;
        if (c.lg > f.c.lg) f.c = c;
        break;
      }
    if (!found) finals.push_back({std::move(key), c});
  }
  // winner: largest log gamma, then smallest canonical key
  std::sort(finals.begin(), finals.end(), [](const Final& a, const Final& b) {
    if (a.c.lg != b.c.lg) return a.c.lg > b.c.lg;
    return a.key < b.key;
  });

  SearchResult out;
  out.best = finals.front().c.g;
  out.n = out.best.n > 0 ? out.best.n : fallback_n;
  out.log_gamma = finals.front().c.lg;
  out.graphs_scanned = scanned;
  out.residual_violations = violations;
  out.tie_ambiguous = finals.size() > 1;
  for (const auto& f : finals)
    out.near_ties.push_back({graph6_encode(f.c.g), f.c.lg});
  out.kite = is_kite(out.best);
  const SpectralData sd = principal_eigenpair(out.best, tol);
  out.audit = structure_check(out.best, sd);
  return out;
}

}  // namespace

// ====================== public enumeration ======================

ScanStats scan_labeled(int n,
                       const std::function<void(const Graph&)>& consumer,
                       int threads) {
  if (n < 3 || n > 8) throw input_error("scan_labeled: need 3 <= n <= 8");
  const EdgeTable t = edge_table(n);
  const std::uint64_t total = 1ull << t.ne;
  const int nt = clamp_threads(threads, total);

  ScanStats stats;
  stats.visited = total;
  if (nt == 1) {
    scan_range(t, 0, total, stats.connected, consumer);
    return stats;
  }
  std::vector<std::uint64_t> counts(nt, 0);
  std::vector<std::thread> pool;
  for (int i = 0; i < nt; ++i) {
    const std::uint64_t lo = total / nt * i;
    const std::uint64_t hi = (i + 1 == nt) ? total : total / nt * (i + 1);
    pool.emplace_back([&, i, lo, hi] {
      scan_range(t, lo, hi, counts[i], consumer);
    });
  }
  for (auto& th : pool) th.join();
  for (auto c : counts) stats.connected += c;
  return stats;
}

ScanStats ingest_graph6(std::istream& in,
                        const std::function<void(const Graph&)>& consumer,
                        std::ostream* diagnostics) {
  ScanStats stats;
  std::string line;
  std::uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++stats.visited;
    try {
      const Graph g = graph6_decode(line);
      if (!is_connected(g)) throw input_error("disconnected graph");
      consumer(g);
      ++stats.connected;
    } catch (const input_error& e) {
      ++stats.malformed;
      if (diagnostics) *diagnostics << "line " << lineno << ": " << e.what() << '\n';
    }
  }
  return stats;
}

// ====================== extremal search ======================

SearchResult find_extremal(int n, double tol, int threads) {
  if (n < 3 || n > 8) throw input_error("find_extremal: need 3 <= n <= 8");
  const EdgeTable t = edge_table(n);
  const std::uint64_t total = 1ull << t.ne;
  const int nt = clamp_threads(threads, total);

  // Seed every kite decomposition of n up front: the scan revisits them, but
  // starting at the true maximum makes the pruning bound bite immediately and
  // keeps the near-tie pool partition-invariant.
  Reducer seed;
  std::uint64_t seed_violations = 0;
  for (int r = 1; r <= n - 1; ++r) {
    const Graph g = make_kite({r, n + 1 - r});
    const SpectralData sd = principal_eigenpair(g, tol);
    if (!(sd.residual <= tol)) ++seed_violations;
    seed.offer(g, std::log(sd.gamma));
  }

  std::vector<Reducer> reds(nt, seed);
  std::vector<std::uint64_t> counts(nt, 0), violations(nt, 0);
  auto worker = [&](int i, std::uint64_t lo, std::uint64_t hi) {
    Reducer& red = reds[i];
    scan_range(t, lo, hi, counts[i], [&](const Graph& g) {
      if (log_gamma_upper(g) < red.best - tie_window) return;
      const SpectralData sd = principal_eigenpair(g, tol);
      if (!(sd.residual <= tol)) ++violations[i];
      red.offer(g, std::log(sd.gamma));
    });
  };
  if (nt == 1) {
    worker(0, 0, total);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nt; ++i) {
      const std::uint64_t lo = total / nt * i;
      const std::uint64_t hi = (i + 1 == nt) ? total : total / nt * (i + 1);
      pool.emplace_back(worker, i, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  Reducer red = std::move(reds[0]);
  std::uint64_t connected = counts[0], viol = violations[0] + seed_violations;
  for (int i = 1; i < nt; ++i) {
    red.merge(reds[i]);
    connected += counts[i];
    viol += violations[i];
  }
  return finalize(std::move(red), n, connected, viol, tol);
}

SearchResult find_extremal(std::istream& graph6_stream, double tol) {
  Reducer red;
  std::uint64_t violations = 0;
  const ScanStats stats =
      ingest_graph6(graph6_stream, [&](const Graph& g) {
        const SpectralData sd = principal_eigenpair(g, tol);
        if (!(sd.residual <= tol)) ++violations;
        red.offer(g, std::log(sd.gamma));
      });
  return finalize(std::move(red), 0, stats.connected, violations, tol);
}

// ====================== kite recognition ======================

std::optional<KiteParams> is_kite(const Graph& g) {
  const int n = g.n;
  if (n < 2 || !is_connected(g)) return std::nullopt;
  if (2 * g.edge_count() == long(n) * (n - 1)) return KiteParams{1, n};

  int start = -1, ones = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 1) {
      if (start < 0) start = v;
      ++ones;
    }
  if (ones == 0 || ones > 2) return std::nullopt;

  // follow the pendant chain until a vertex that is not chain-interior
  std::uint64_t on = 1ull << start;
  int prev = -1, cur = start, r = 1;
  while (true) {
    const int d = g.degree(cur);
    if (r == 1 ? d != 1 : d != 2) break;
    const std::uint64_t nb =
        g.adj[cur] & ~(prev >= 0 ? 1ull << prev : 0ull);
    if (!nb) break;  // other endpoint of a pure path
    const int nxt = std::countr_zero(nb);
    if ((on >> nxt) & 1) return std::nullopt;  // chain loops back
    prev = cur;
    cur = nxt;
    ++r;
    on |= 1ull << cur;
  }

  if (g.degree(cur) == 1)  // pure path P_n = P_{n-1}.K_2
    return r == n ? std::optional<KiteParams>(KiteParams{n - 1, 2})
                  : std::nullopt;

  // cur is the attachment; the clique must be cur plus everything off-chain
  const std::uint64_t full = (n == 64) ? ~0ull : (1ull << n) - 1;
  const std::uint64_t off = full & ~on;
  const int s = std::popcount(off) + 1;
  if (s < 3) return std::nullopt;
  const std::uint64_t clique = off | (1ull << cur);
  std::uint64_t cm = clique;
  while (cm) {
    const int v = std::countr_zero(cm);
    cm &= cm - 1;
    std::uint64_t need = clique & ~(1ull << v);
    if (v == cur && prev >= 0) need |= 1ull << prev;
    if (g.adj[v] != need) return std::nullopt;
  }
  return KiteParams{r, s};
}

// ====================== structural audit ======================

StructureReport structure_check(const Graph& g, const SpectralData& sd,
                                std::uint64_t seed) {
  const int n = g.n;
  if (int(sd.v.size()) != n)
    throw input_error("structure_check: eigenpair size mismatch");
  {
    std::vector<double> y(sd.v.size());
    matvec_scalar(g, sd.v.data(), y.data());
    double res = 0;
    for (int v = 0; v < n; ++v)
      res = std::max(res, std::abs(y[v] - (sd.lambda1 + 1.0) * sd.v[v]));
    if (res > std::max(10.0 * sd.residual, 1e-9))
      throw input_error("structure_check: stale spectral data");
  }

  StructureReport rep;

  // regular graphs (or coincident extremes): k = 1, flags vacuous-true
  bool regular = true;
  for (int v = 1; v < n && regular; ++v)
    regular = g.degree(v) == g.degree(0);
  int vmin = 0, vmax = 0;
  for (int v = 1; v < n; ++v) {
    if (sd.v[v] < sd.v[vmin] - 1e-12) vmin = v;
    if (sd.v[v] > sd.v[vmax] + 1e-12) vmax = v;
  }
  if (regular || vmin == vmax) {
    rep.k = 1;
    rep.c_size = n - 1;
    rep.lambda_gt_nk = true;
    rep.xk_dominates = true;
    rep.nbhd_sum_ok = true;
    rep.pendant_prefix_len = 0;
    rep.path = {vmin};
    rep.xk1_degree_bound = 0;
    rep.xk1_below_bound = true;
    return rep;
  }

  // BFS from vmin, lowest-index predecessor per layer
  std::array<int, max_vertices> pred;
  pred.fill(-1);
  const std::uint64_t full = (n == 64) ? ~0ull : (1ull << n) - 1;
  std::uint64_t seen = 1ull << vmin, frontier = seen;
  while (!((seen >> vmax) & 1) && frontier) {
    std::uint64_t nextf = 0, cand = full & ~seen;
    while (cand) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      const std::uint64_t hit = g.adj[w] & frontier;
      if (hit) {
        pred[w] = std::countr_zero(hit);
        nextf |= 1ull << w;
      }
    }
    frontier = nextf;
    seen |= nextf;
  }
  for (int v = vmax; v >= 0; v = pred[v]) rep.path.push_back(v);
  std::reverse(rep.path.begin(), rep.path.end());

  const int k = int(rep.path.size());
  rep.k = k;
  rep.c_size = n - k;
  rep.lambda_gt_nk = sd.lambda1 > double(n - k);

  if (g.degree(rep.path[0]) == 1) {
    rep.pendant_prefix_len = std::min(k, 2);
    for (int i = 3; i <= k; ++i) {
      if (g.degree(rep.path[i - 2]) == 2)
        rep.pendant_prefix_len = i;
      else
        break;
    }
  }

  std::uint64_t pathmask = 0;
  for (int v : rep.path) pathmask |= 1ull << v;
  rep.xk_dominates = (full & ~pathmask & ~g.adj[vmax] & ~(1ull << vmax)) == 0;

  rep.deg_xk1 = k >= 2 ? g.degree(rep.path[k - 2]) : 0;
  rep.deg_xk2 = k >= 3 ? g.degree(rep.path[k - 3]) : 0;

  // subset sums over N(x_k): exhaustive when small, sampled otherwise
  {
    std::vector<double> nbvals;
    std::uint64_t nb = g.adj[vmax];
    while (nb) {
      const int u = std::countr_zero(nb);
      nb &= nb - 1;
      nbvals.push_back(sd.v[u]);
    }
    const int d = int(nbvals.size());
    const auto check = [&](std::uint64_t mask) {
      double sum = 0;
      int cnt = 0;
      for (int i = 0; i < d; ++i)
        if ((mask >> i) & 1) {
          sum += nbvals[i];
          ++cnt;
        }
      return sum > double(cnt) - 1.0 - 1e-9 && sum <= double(cnt) + 1e-9;
    };
    rep.nbhd_sum_ok = true;
    if (d <= 15) {
      for (std::uint64_t mask = 0; mask < (1ull << d); ++mask)
        if (!check(mask)) {
          rep.nbhd_sum_ok = false;
          break;
        }
    } else {
      std::mt19937_64 rng(seed);
      for (int trial = 0; trial < 1000; ++trial)
        if (!check(rng() & ((1ull << d) - 1))) {
          rep.nbhd_sum_ok = false;
          break;
        }
    }
  }

  if (n >= 2 && rep.c_size > 0) {
    rep.xk1_degree_bound = 11.0 * rep.c_size / std::sqrt(std::log(double(n)));
    rep.xk1_below_bound = rep.deg_xk1 < rep.xk1_degree_bound;
  }
  return rep;
}

// ====================== kite optimizer ======================

KiteOptResult kite_optimize(long long n, double tol) {
  if (n < 5) throw input_error("kite_optimize: need n >= 5");
  if (n > 1000000) throw input_error("kite_optimize: n too large");
  KiteOptResult out;
  out.log_gamma = -HUGE_VAL;
  for (long long s = 3; s <= n - 1; ++s) {
    const long long r = n + 1 - s;
    const double lg = kite_gamma(r, int(s), tol);
    out.table.push_back({int(s), r, lg});
    if (lg > out.log_gamma) {
      out.log_gamma = lg;
      out.best_r = r;
      out.best_s = int(s);
    }
  }
  return out;
}

// ====================== edge perturbation ======================

PerturbationReport perturb_analysis(const Graph& g, int u, int v, int tracked,
                                    double n_for_condition, double tol) {
  if (u < 0 || v < 0 || u >= g.n || v >= g.n || u == v)
    throw input_error("perturb_analysis: bad edge");
  if (g.has_edge(u, v)) throw input_error("perturb_analysis: edge present");
  if (tracked < 0 || tracked >= g.n)
    throw input_error("perturb_analysis: tracked vertex out of range");
  if (!(n_for_condition >= 2))
    throw input_error("perturb_analysis: need n_for_condition >= 2");
  if (!is_connected(g)) throw input_error("perturb_analysis: disconnected");

  const SpectralData before = principal_eigenpair(g, tol);
  Graph g2 = g;
  g2.add_edge(u, v);
  const SpectralData after = principal_eigenpair(g2, tol);

  PerturbationReport rep;
  rep.delta1 = after.lambda1 / before.lambda1 - 1.0;
  rep.delta2 = after.v[tracked] / before.v[tracked] - 1.0;
  rep.gamma_before = std::log(before.gamma);
  rep.gamma_after = std::log(after.gamma);
  const double nn = n_for_condition;
  rep.increase_condition = rep.delta1 > 4.0 * rep.delta2 / nn;
  rep.decrease_condition =
      rep.delta1 * std::exp(2.0 * rep.delta1 * before.lambda1 * std::log(nn)) <
      rep.delta2 / (3.0 * nn);
  rep.observed_increase = rep.gamma_after > rep.gamma_before;
  return rep;
}

}  // namespace specirr
