#pragma once

#include <span>
#include <vector>

#include "specirr/graph.hpp"

namespace specirr {

// Certified Perron eigenpair of the adjacency matrix: lambda1 is the largest
// eigenvalue, v the strictly positive eigenvector scaled so its maximum entry
// is exactly 1, residual the max-norm of A v - lambda1 v, and gamma the ratio
// max entry / min entry (= 1 / min entry under this normalization).
struct SpectralData {
  double lambda1 = 0;
  std::vector<double> v;
  double residual = 0;
  double gamma = 1;
};

// Power iteration on A + I (strictly dominant eigenvalue even for bipartite
// graphs), all-ones start, max-entry normalization. Convergence requires both
// the absolute residual <= tol and an entrywise-relative residual <= 1e-11;
// the second is what certifies gamma when eigenvector entries span many
// orders of magnitude. Throws input_error on disconnected input or bad tol,
// check_error if the iteration cap is hit.
SpectralData principal_eigenpair(const Graph& g, double tol = 1e-12);

// x.Ax / x.x; throws input_error on a zero vector or size mismatch.
double rayleigh_quotient(const Graph& g, std::span<const double> x);

double principal_ratio(const Graph& g, double tol = 1e-12);

}  // namespace specirr
