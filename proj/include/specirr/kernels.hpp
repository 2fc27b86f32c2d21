#pragma once

#include "specirr/graph.hpp"

namespace specirr {

// y = (A + I) x over the bitset adjacency:
//   y[v] = x[v] + sum of x[u] over u in adj[v], u ascending.
//
// Every kernel must produce bitwise-identical output: per output element the
// additions happen in exactly the order above, no FMA, no reassociation.
// Inputs must not contain -0.0 entries (a masked lane adds +0.0, which would
// flip -0.0 accumulators); power iteration only ever feeds positive vectors.
using matvec_fn = void (*)(const Graph&, const double*, double*);

void matvec_scalar(const Graph& g, const double* x, double* y);

// column-broadcast AVX2 variant; call only when have_avx2() is true
void matvec_avx2(const Graph& g, const double* x, double* y);

bool avx2_kernel_compiled();  // this binary carries real AVX2 code
bool have_avx2();             // compiled in and supported by the CPU

// scalar for small or sparse graphs, AVX2 for larger dense ones
matvec_fn select_matvec(const Graph& g);

}  // namespace specirr
