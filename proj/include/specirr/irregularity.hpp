#pragma once

#include "specirr/graph.hpp"
#include "specirr/spectral.hpp"

namespace specirr {

// The classical irregularity measures reported side by side with gamma.
// All are zero exactly when the graph is regular (gamma = 1 there).
struct IrregularityReport {
  double gamma = 1;      // principal ratio
  double epsilon = 0;    // lambda1 - average degree
  double variance = 0;   // population variance of the degree sequence
  long albertson = 0;    // sum over edges of |d(u) - d(v)|
  double s_measure = 0;  // sum over vertices of |d(v) - average degree|
};

double epsilon_irregularity(const Graph& g, double tol = 1e-12);
double variance(const Graph& g);
long albertson(const Graph& g);
double s_irregularity(const Graph& g);

// All five measures with a single shared spectral solve.
IrregularityReport report_all(const Graph& g, double tol = 1e-12);

}  // namespace specirr
