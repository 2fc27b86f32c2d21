#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "specirr/irregularity.hpp"
#include "specirr/search.hpp"
#include "support/testutil.hpp"

using namespace specirr;

TEST_CASE("regular graph: every measure is exactly zero") {
  for (const Graph& g : {make_complete(5), make_cycle(6)}) {
    const IrregularityReport r = report_all(g);
    CHECK(r.gamma == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::fabs(r.epsilon) <= 1e-12);
    CHECK(r.variance == 0.0);  // integer-exact
    CHECK(r.albertson == 0);
    CHECK(r.s_measure == 0.0);
  }
}

TEST_CASE("star K_{1,3}: hand-computed values") {
  const IrregularityReport r = report_all(make_star(3));
  CHECK(r.gamma == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(r.epsilon == doctest::Approx(std::sqrt(3.0) - 1.5).epsilon(1e-12));
  CHECK(r.variance == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(r.albertson == 6);
  CHECK(r.s_measure == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("path P_3 and paw: hand-computed values") {
  const IrregularityReport p3 = report_all(make_path(3));
  CHECK(p3.variance == doctest::Approx(2.0 / 9).epsilon(1e-15));
  CHECK(p3.albertson == 2);
  CHECK(p3.s_measure == doctest::Approx(4.0 / 3).epsilon(1e-15));
  CHECK(p3.gamma == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(p3.epsilon == doctest::Approx(std::sqrt(2.0) - 4.0 / 3).epsilon(1e-12));

  const IrregularityReport paw = report_all(make_kite({2, 3}));
  CHECK(paw.variance == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(paw.albertson == 4);
  CHECK(paw.s_measure == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(paw.epsilon == doctest::Approx(0.17008648662603374).epsilon(1e-10));
}

TEST_CASE("standalone functions match the batched report") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 30; ++it) {
    const Graph g = random_connected_graph(rng, 4 + int(rng() % 10), 0.4);
    const IrregularityReport r = report_all(g);
    CHECK(epsilon_irregularity(g) == doctest::Approx(r.epsilon).epsilon(1e-12));
    CHECK(variance(g) == r.variance);
    CHECK(albertson(g) == r.albertson);
    CHECK(s_irregularity(g) == r.s_measure);
  }
}

TEST_CASE("all measures vanish together, exhaustively to n = 6") {
  // gamma = 1, epsilon = 0, variance = 0, albertson = 0, s = 0 pick out the
  // same graphs: the regular ones
  long regular = 0, checked = 0;
  for (int n = 3; n <= 6; ++n) {
    scan_labeled(n, [&](const Graph& g) {
      const IrregularityReport r = report_all(g);
      const bool reg_exact = r.variance == 0.0;  // integer arithmetic
      if (reg_exact) {
        CHECK(r.gamma - 1.0 <= 1e-9);
        CHECK(std::fabs(r.epsilon) <= 1e-9);
        CHECK(r.albertson == 0);
        CHECK(r.s_measure == 0.0);
        ++regular;
      } else {
        CHECK(r.gamma > 1.0 + 1e-10);
        CHECK(r.epsilon > 1e-9);
        CHECK(r.albertson >= 1);
        CHECK(r.s_measure > 0.0);
      }
      ++checked;
    });
  }
  CHECK(checked == 4 + 38 + 728 + 26704);
  CHECK(regular > 0);
}

TEST_CASE("invariance under relabeling") {
  std::mt19937_64 rng(42);
  const Graph g = random_connected_graph(rng, 9, 0.4);
  const IrregularityReport base = report_all(g);
  for (int it = 0; it < 100; ++it) {
    const Graph h = permute(g, random_permutation(rng, g.n));
    const IrregularityReport r = report_all(h);
    CHECK(r.gamma == doctest::Approx(base.gamma).epsilon(1e-11));
    CHECK(r.epsilon == doctest::Approx(base.epsilon).epsilon(1e-11));
    CHECK(r.variance == base.variance);
    CHECK(r.albertson == base.albertson);
    CHECK(r.s_measure == base.s_measure);
  }
}
