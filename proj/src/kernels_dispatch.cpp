#include "specirr/kernels.hpp"

namespace specirr {

bool have_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return avx2_kernel_compiled() && __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

matvec_fn select_matvec(const Graph& g) {
  // The broadcast kernel touches every 4-block per source vertex, so it only
  // pays off when rows are reasonably full and there are enough of them.
  if (have_avx2() && g.n >= 16 && 2 * g.edge_count() * 3 >= long(g.n) * g.n)
    return matvec_avx2;
  return matvec_scalar;
}

}  // namespace specirr
