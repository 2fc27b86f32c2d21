#pragma once

#include <vector>

#include "specirr/errors.hpp"

namespace specirr {

// sigma is the larger root of x^2 - lambda1 x + 1 = 0, so sigma + 1/sigma =
// lambda1 and sigma = 1 exactly when lambda1 = 2.
struct SigmaValue {
  double lambda1 = 2;
  double sigma = 1;
};

// u[0] = 1, u[1] = lambda1, u[i+1] = lambda1 u[i] - u[i-1]. Extended
// precision because u grows like sigma^i: u[200] at lambda1 = 100 is ~1e401,
// past double range but comfortably inside long double.
struct ChebSequence {
  double lambda1 = 2;
  std::vector<long double> u;
};

SigmaValue sigma_of_lambda(double lambda1);  // errors: lambda1 < 2

// u_i by forward recurrence (benign for a dominant solution); errors on
// lambda1 < 2 or i < 0.
long double cheb_u(int i, double lambda1);
ChebSequence cheb_sequence(int imax, double lambda1);

// log of f(sigma, j) = (sigma^j - sigma^-j)/(sigma - sigma^-1) = u_{j-1},
// evaluated fully in log space so j up to 1e6 cannot overflow. The lambda1 =
// 2 degenerate limit (sigma = 1, f = j) is taken when sigma - 1 < 1e-9.
// f(sigma, 1) = 1, f(sigma, 2) = lambda1. Errors: j < 1, lambda1 < 2.
double pendant_path_gamma(long long j, double lambda1);

// Open interval (s-1 + 1/(s(s-1)), s-1 + 1/(s-1)^2) that brackets
// lambda1(P_r.K_s) for every r >= 2; errors: s < 3.
struct LambdaBounds {
  double low = 0;
  double high = 0;
};
LambdaBounds kite_lambda_bounds(int s);

// Truncated expansion lambda1 - lambda1^-1 [- lambda1^-3 [- 2 lambda1^-5]].
// The exact expression shape is pinned (see the .cpp) so results are
// bit-reproducible. Errors: lambda1 < 3 or order not in {1,2,3}.
double sigma_series(double lambda1, int order);

// log gamma of P_r.K_s: lambda1 via the spectral module when r+s-1 <= 64,
// otherwise via bisection of the kite's scalar secular equation inside the
// Lemma-2-style bracket; then pendant_path_gamma(r, lambda1). Errors: r < 2
// or s < 3 (input), computed lambda1 outside the bracket (solver bug).
double kite_gamma(long long r, int s, double tol = 1e-12);

// lambda1(P_r.K_s) for any r >= 2, s >= 3, without building a Graph:
// the clique's non-attachment vertices share one eigenvector value and path
// entries follow the u_i recurrence, which reduces the eigenproblem to a
// scalar root-find. Exposed for cross-checks.
double kite_lambda(long long r, int s);

}  // namespace specirr
