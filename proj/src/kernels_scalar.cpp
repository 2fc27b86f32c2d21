#include "specirr/kernels.hpp"

#include <bit>

namespace specirr {

void matvec_scalar(const Graph& g, const double* x, double* y) {
  for (int v = 0; v < g.n; ++v) {
    double acc = x[v];
    std::uint64_t row = g.adj[v];
    while (row) {
      int u = std::countr_zero(row);
      row &= row - 1;
      acc += x[u];
    }
    y[v] = acc;
  }
}

}  // namespace specirr
