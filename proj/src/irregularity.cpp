#include "specirr/irregularity.hpp"

#include <cmath>
#include <cstdlib>

namespace specirr {

// Degree sums are kept in integers as long as possible: with d_bar = 2m/n,
// n*(d_v - d_bar) = n*d_v - 2m is exact, so the absolute sums below only
// round once at the final division.

double epsilon_irregularity(const Graph& g, double tol) {
  const SpectralData sd = principal_eigenpair(g, tol);
  return sd.lambda1 - 2.0 * double(g.edge_count()) / double(g.n);
}

double variance(const Graph& g) {
  const long n = g.n, m2 = 2 * g.edge_count();
  long num = 0;
  for (int v = 0; v < g.n; ++v) {
    const long d = n * long(g.degree(v)) - m2;
    num += d * d;
  }
  return double(num) / (double(n) * double(n) * double(n));
}

long albertson(const Graph& g) {
  long sum = 0;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.has_edge(u, v)) sum += std::labs(long(g.degree(u) - g.degree(v)));
  return sum;
}

double s_irregularity(const Graph& g) {
  const long n = g.n, m2 = 2 * g.edge_count();
  long num = 0;
  for (int v = 0; v < g.n; ++v) num += std::labs(n * long(g.degree(v)) - m2);
  return double(num) / double(n);
}

IrregularityReport report_all(const Graph& g, double tol) {
  const SpectralData sd = principal_eigenpair(g, tol);
  IrregularityReport rep;
  rep.gamma = sd.gamma;
  rep.epsilon = sd.lambda1 - 2.0 * double(g.edge_count()) / double(g.n);
  rep.variance = variance(g);
  rep.albertson = albertson(g);
  rep.s_measure = s_irregularity(g);
  return rep;
}

}  // namespace specirr
