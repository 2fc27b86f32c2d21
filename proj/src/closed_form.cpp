#include "specirr/closed_form.hpp"

#include <cmath>

#include "specirr/graph.hpp"
#include "specirr/spectral.hpp"

namespace specirr {

SigmaValue sigma_of_lambda(double lambda1) {
  if (!(lambda1 >= 2))
    throw input_error("sigma_of_lambda: need lambda1 >= 2");
  // expression shape pinned: 0.5*(lam + sqrt(lam*lam - 4))
  return {lambda1, 0.5 * (lambda1 + std::sqrt(lambda1 * lambda1 - 4.0))};
}

long double cheb_u(int i, double lambda1) {
  if (i < 0) throw input_error("cheb_u: need i >= 0");
  if (!(lambda1 >= 2)) throw input_error("cheb_u: need lambda1 >= 2");
  if (i == 0) return 1.0L;
  long double prev = 1.0L, cur = lambda1;
  for (int k = 1; k < i; ++k) {
    const long double next = (long double)lambda1 * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

ChebSequence cheb_sequence(int imax, double lambda1) {
  if (imax < 0) throw input_error("cheb_sequence: need imax >= 0");
  if (!(lambda1 >= 2)) throw input_error("cheb_sequence: need lambda1 >= 2");
  ChebSequence seq;
  seq.lambda1 = lambda1;
  seq.u.resize(std::size_t(imax) + 1);
  seq.u[0] = 1.0L;
  if (imax >= 1) seq.u[1] = lambda1;
  for (int i = 2; i <= imax; ++i)
    seq.u[i] = (long double)lambda1 * seq.u[i - 1] - seq.u[i - 2];
  return seq;
}

double pendant_path_gamma(long long j, double lambda1) {
  if (j < 1) throw input_error("pendant_path_gamma: need j >= 1");
  if (!(lambda1 >= 2))
    throw input_error("pendant_path_gamma: need lambda1 >= 2");
  const double sigma = sigma_of_lambda(lambda1).sigma;
  if (sigma - 1.0 < 1e-9) return std::log(double(j));  // f -> j as sigma -> 1
  // log f(sigma, j) = (j-1) log sigma + log(1 - sigma^-2j) - log(1 - sigma^-2)
  const double t = std::log(sigma);
  const auto log1m_exp = [](double a) {  // log(1 - e^-2a), a > 0
    return std::log(-std::expm1(-2.0 * a));
  };
  return double(j - 1) * t + log1m_exp(double(j) * t) - log1m_exp(t);
}

LambdaBounds kite_lambda_bounds(int s) {
  if (s < 3) throw input_error("kite_lambda_bounds: need s >= 3");
  return {double(s - 1) + 1.0 / (double(s) * (s - 1)),
          double(s - 1) + 1.0 / (double(s - 1) * (s - 1))};
}

double sigma_series(double lambda1, int order) {
  if (!(lambda1 >= 3)) throw input_error("sigma_series: need lambda1 >= 3");
  if (order < 1 || order > 3)
    throw input_error("sigma_series: order must be in {1,2,3}");
  // expression shape pinned so the documented gaps are bit-reproducible
  double x = lambda1 - 1.0 / lambda1;
  if (order >= 2) x -= 1.0 / (lambda1 * lambda1 * lambda1);
  if (order >= 3) x -= 2.0 / (lambda1 * lambda1 * lambda1 * lambda1 * lambda1);
  return x;
}

double kite_lambda(long long r, int s) {
  if (r < 2 || s < 3) throw input_error("kite_lambda: need r >= 2, s >= 3");
  const LambdaBounds b = kite_lambda_bounds(s);
  // Secular equation h(lam) = (lam - s + 2) t_r(lam) - (s - 1) with
  // t_1 = lam, t_{i+1} = lam - 1/t_i (the eigenvector ratio u_i/u_{i-1});
  // t decreases monotonically toward sigma, so the recurrence early-exits at
  // its fixed point, and h is increasing in lam across the bracket.
  const auto h = [&](double lam) {
    double t = lam;
    for (long long i = 1; i < r; ++i) {
      const double nt = lam - 1.0 / t;
      if (nt == t) break;
      t = nt;
    }
    return (lam - double(s) + 2.0) * t - double(s - 1);
  };
  double lo = b.low, hi = b.high;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (h(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double kite_gamma(long long r, int s, double tol) {
  if (r < 2 || s < 3) throw input_error("kite_gamma: need r >= 2, s >= 3");
  const long long n = r + s - 1;
  double lam;
  if (n <= max_vertices)
    lam = principal_eigenpair(make_kite({int(r), s}), tol).lambda1;
  else
    lam = kite_lambda(r, s);
  const LambdaBounds b = kite_lambda_bounds(s);
  // True margins shrink like s^-4 and sink below double ulp near s ~ 2000,
  // so the bug check carries a small rounding allowance.
  const double slack = 1e-9 * double(s);
  if (!(lam >= b.low - slack && lam <= b.high + slack))
    throw check_error("kite_gamma: lambda1 escaped its bracket (solver bug)");
  return pendant_path_gamma(r, lam);
}

}  // namespace specirr
