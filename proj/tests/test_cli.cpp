// End-to-end contract tests: run the built binary, check output and exit
// codes. The binary path arrives as the first non-flag argument.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

std::string g_cli;

struct RunResult {
  int rc = -1;
  std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = "'" + g_cli + "' " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int st = pclose(p);
  r.rc = WEXITSTATUS(st);
  return r;
}

double plain_field(const std::string& out, const std::string& key) {
  const std::string needle = key + " = ";
  const auto pos = out.find(needle);
  REQUIRE(pos != std::string::npos);
  return std::strtod(out.c_str() + pos + needle.size(), nullptr);
}

nlohmann::json as_json(const std::string& text) {
  return nlohmann::json::parse(text);
}

// scratch file removed when the test case ends, pass or fail
struct TempFile {
  std::string path;
  explicit TempFile(std::string p, const std::string& contents = "")
      : path(std::move(p)) {
    if (!contents.empty()) {
      std::ofstream f(path);
      f << contents;
    }
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("ratio: families and plain output") {
  const RunResult r = run("ratio kite:2,3");
  CHECK(r.rc == 0);
  // for P_2.K_s, gamma equals lambda1 exactly
  CHECK(plain_field(r.out, "gamma") == doctest::Approx(2.1700864866260337).epsilon(1e-12));
  CHECK(plain_field(r.out, "lambda1") == doctest::Approx(2.1700864866260337).epsilon(1e-12));
  CHECK(plain_field(r.out, "n") == 4);
  CHECK(plain_field(r.out, "albertson") == 4);

  const RunResult k6 = run("ratio complete:6");
  CHECK(k6.rc == 0);
  CHECK(plain_field(k6.out, "gamma") == 1.0);
  CHECK(plain_field(k6.out, "epsilon") == 0.0);

  const RunResult st = run("ratio star:9 --format json");
  CHECK(st.rc == 0);
  const auto j = as_json(st.out);
  CHECK(j["lambda1"].get<double>() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(j["gamma"].get<double>() == doctest::Approx(3.0).epsilon(1e-12));

  CHECK(run("ratio path:2").rc == 0);
}

TEST_CASE("ratio: graph6 and edge-list inputs") {
  const RunResult g6 = run("ratio DhC --format json");  // P_5 as graph6
  CHECK(g6.rc == 0);
  const auto j = as_json(g6.out);
  CHECK(j["lambda1"].get<double>() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(j["min_entry_vertex"].get<int>() == 0);
  CHECK(j["max_entry_vertex"].get<int>() == 2);

  const TempFile tmp("cli_tmp_p5.txt", "5 4\n0 1\n1 2\n2 3\n3 4\n");
  const RunResult el = run("ratio cli_tmp_p5.txt --format json");
  CHECK(el.rc == 0);
  CHECK(as_json(el.out)["lambda1"].get<double>() ==
        j["lambda1"].get<double>());  // same graph, same number
}

TEST_CASE("csv and json carry bitwise-identical numbers") {
  const RunResult c = run("ratio kite:3,4 --format csv");
  const RunResult d = run("ratio kite:3,4 --format json");
  REQUIRE(c.rc == 0);
  REQUIRE(d.rc == 0);
  const auto j = as_json(d.out);
  // parse the csv field,value block
  std::size_t checked = 0;
  std::istringstream lines(c.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "field,value");
  while (std::getline(lines, line) && !line.empty()) {
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    const std::string key = line.substr(0, comma);
    if (!j.contains(key) || !j[key].is_number_float()) continue;
    const double csv_val = std::strtod(line.c_str() + comma + 1, nullptr);
    CHECK(csv_val == j[key].get<double>());  // exact, not approximate
    ++checked;
  }
  CHECK(checked >= 7);
}

TEST_CASE("search: exhaustive scan via the binary") {
  const RunResult r = run("search --n 5 --format json");
  REQUIRE(r.rc == 0);
  const auto j = as_json(r.out);
  CHECK(j["graphs_scanned"].get<long long>() == 728);
  CHECK(j["kite"].get<std::string>() == "P_3.K_3");
  CHECK(j["log_gamma"].get<double>() ==
        doctest::Approx(std::log(3.9032119259121)).epsilon(1e-10));
  CHECK(j["near_ties"].size() == 1);
  CHECK_FALSE(j["tie_ambiguous"].get<bool>());
  CHECK(j["residual_violations"].get<long long>() == 0);
  CHECK(j["k"].get<int>() == 3);
}

TEST_CASE("search: graph6 catalog file with diagnostics") {
  const TempFile cat("cli_tmp_cat.g6", "Cj\nC!\nBw\n");
  const TempFile out("cli_tmp_out.json");
  const RunResult r = run(
      "search --input cli_tmp_cat.g6 --format json --output cli_tmp_out.json",
      true);
  CHECK(r.rc == 0);
  CHECK(r.out.find("line 2") != std::string::npos);  // the corrupt line
  std::ifstream in("cli_tmp_out.json");
  std::stringstream ss;
  ss << in.rdbuf();
  const auto j = as_json(ss.str());
  CHECK(j["lines_read"].get<int>() == 3);
  CHECK(j["lines_rejected"].get<int>() == 1);
  CHECK(j["graphs_scanned"].get<int>() == 2);
  CHECK(j["kite"].get<std::string>() == "P_2.K_3");
}

TEST_CASE("search: reproducibility and thread invariance") {
  RunResult a = run("search --n 4 --seed 7 --format json");
  RunResult b = run("search --n 4 --seed 7 --format json");
  REQUIRE(a.rc == 0);
  REQUIRE(b.rc == 0);
  auto ja = as_json(a.out), jb = as_json(b.out);
  ja.erase("wall_time_s");
  jb.erase("wall_time_s");
  CHECK(ja.dump() == jb.dump());

  const RunResult t1 = run("search --n 5 --threads 1 --format json");
  const RunResult t2 = run("search --n 5 --threads 2 --format json");
  const auto j1 = as_json(t1.out), j2 = as_json(t2.out);
  CHECK(j1["log_gamma"].get<double>() == j2["log_gamma"].get<double>());
  CHECK(j1["graphs_scanned"] == j2["graphs_scanned"]);
  CHECK(j1["kite"] == j2["kite"]);
}

TEST_CASE("kiteopt table output") {
  const RunResult r = run("kiteopt --n 5,6 --table --format json");
  REQUIRE(r.rc == 0);
  const auto j = as_json(r.out);
  REQUIRE(j["results"].size() == 2);
  CHECK(j["results"][0]["n"].get<int>() == 5);
  CHECK(j["results"][0]["s"].get<int>() == 3);
  CHECK(j["results"][1]["s"].get<int>() == 4);
  CHECK(j["table_n5"].size() == 2);
  CHECK(j["table_n6"].size() == 3);
  for (const auto& row : j["results"])
    CHECK(std::isfinite(row["s_log_n_over_n"].get<double>()));
}

TEST_CASE("verify suites pass through the binary") {
  const RunResult r = run("verify lemma2 --format json");
  CHECK(r.rc == 0);
  const auto j = as_json(r.out);
  CHECK(j["checks_failed"].get<int>() == 0);
  CHECK(run("verify sigma-series").rc == 0);
}

TEST_CASE("exit code contract") {
  CHECK(run("verify lemma99").rc == 2);             // unknown suite
  CHECK(run("ratio kite:2").rc == 2);               // bad arity
  CHECK(run("ratio bogus:3").rc == 2);              // unknown family
  CHECK(run("ratio 'C!'").rc == 2);                 // corrupt graph6
  CHECK(run("ratio 'A?'").rc == 2);                 // disconnected
  CHECK(run("perturb path:5 --edge a-b").rc == 2);  // malformed edge
  CHECK(run("perturb path:5 --edge 0,1").rc == 2);  // edge already present
  CHECK(run("ratio path:5 --tol 0.1").rc == 2);     // tol out of range
  CHECK(run("ratio path:5 --tol 0").rc == 2);
  CHECK(run("search").rc == 2);                     // neither --n nor --input
  CHECK(run("kiteopt").rc == 2);                    // missing --n
  CHECK(run("").rc == 2);                           // no subcommand
  CHECK(run("ratio path:5 --bogus-flag").rc == 2);
  CHECK(run("--help").rc == 0);

  const RunResult d = run("ratio 'A?'", true);
  CHECK(d.out.find("disconnected") != std::string::npos);
}

TEST_CASE("perturb through the binary") {
  const RunResult r = run("perturb path:5 --edge 0,4 --format json");
  REQUIRE(r.rc == 0);
  const auto j = as_json(r.out);
  CHECK(j["delta1"].get<double>() > 0);
  CHECK(j["log_gamma_after"].get<double>() == doctest::Approx(0.0).epsilon(1e-9));
  CHECK_FALSE(j["observed_increase"].get<bool>());
  CHECK(j["tracked_vertex"].get<int>() == 0);  // defaults to the min entry
}

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i)
    if (argv[i][0] != '-') g_cli = argv[i];
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: test_cli <path-to-specirr-binary> [doctest args]\n");
    return 2;
  }
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
