#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <random>
#include <vector>

#include "specirr/kernels.hpp"
#include "support/testutil.hpp"

using namespace specirr;

namespace {

// direct transcription of the contract: y[v] = x[v] + sum over neighbors u of
// x[u], u ascending
std::vector<double> reference_matvec(const Graph& g, const std::vector<double>& x) {
  std::vector<double> y(g.n);
  for (int v = 0; v < g.n; ++v) {
    double acc = x[v];
    for (int u = 0; u < g.n; ++u)
      if (g.has_edge(v, u)) acc += x[u];
    y[v] = acc;
  }
  return y;
}

std::vector<double> random_positive_vector(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> mag(-18.0, 0.0);
  std::vector<double> x(n);
  for (auto& e : x) e = std::exp(mag(rng));  // spans 16 orders of magnitude
  return x;
}

}  // namespace

TEST_CASE("scalar kernel matches the contract transcription exactly") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const int n = 1 + int(rng() % 64);
    Graph g;
    g.n = n;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    const auto x = random_positive_vector(rng, n);
    std::vector<double> y(n);
    matvec_scalar(g, x.data(), y.data());
    const auto ref = reference_matvec(g, x);
    CHECK(std::memcmp(y.data(), ref.data(), n * sizeof(double)) == 0);
  }
}

TEST_CASE("avx2 kernel is bitwise identical to scalar") {
  if (!have_avx2()) {
    MESSAGE("AVX2 unavailable on this host, kernel equivalence not exercised");
    return;
  }
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int it = 0; it < 400; ++it) {
    const int n = 1 + int(rng() % 64);
    Graph g;
    g.n = n;
    const int den = 1 + int(rng() % 4);  // sweep sparse to dense
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (int(rng() % 4) < den) g.add_edge(u, v);
    const auto x = random_positive_vector(rng, n);
    std::vector<double> ys(n), yv(n, -1.0);
    matvec_scalar(g, x.data(), ys.data());
    matvec_avx2(g, x.data(), yv.data());
    REQUIRE(std::memcmp(ys.data(), yv.data(), n * sizeof(double)) == 0);
    ++checked;
  }
  CHECK(checked == 400);

  // structured shapes, full width
  for (const Graph& g : {make_kite({40, 25}), make_complete(64), make_path(64),
                         make_cycle(63), make_star(63)}) {
    const auto x = random_positive_vector(rng, g.n);
    std::vector<double> ys(g.n), yv(g.n);
    matvec_scalar(g, x.data(), ys.data());
    matvec_avx2(g, x.data(), yv.data());
    CHECK(std::memcmp(ys.data(), yv.data(), g.n * sizeof(double)) == 0);
  }
}

TEST_CASE("kernel dispatch prefers avx2 only for large dense graphs") {
  const Graph small = make_path(8);
  CHECK(select_matvec(small) == &matvec_scalar);  // n < 16
  const Graph sparse = make_cycle(64);
  CHECK(select_matvec(sparse) == &matvec_scalar);  // 6m << n^2
  const Graph dense = make_complete(32);
  if (have_avx2())
    CHECK(select_matvec(dense) == &matvec_avx2);
  else
    CHECK(select_matvec(dense) == &matvec_scalar);
  // whichever was selected, it must agree with scalar bitwise
  std::mt19937_64 rng(13);
  const auto x = random_positive_vector(rng, dense.n);
  std::vector<double> ys(dense.n), yd(dense.n);
  matvec_scalar(dense, x.data(), ys.data());
  select_matvec(dense)(dense, x.data(), yd.data());
  CHECK(std::memcmp(ys.data(), yd.data(), dense.n * sizeof(double)) == 0);
}
