#pragma once

#include <string>
#include <vector>

namespace specirr {

// One row of a verification suite: named check, pass/fail, and the worst
// margin observed (positive = slack remaining, negative = violation size).
struct CheckResult {
  std::string suite;
  std::string check;
  bool pass = false;
  double margin = 0;
  std::string detail;
};

// Pendant-path bound as equality on kites: eigensolver gamma vs the closed
// form, all kites on up to 40 vertices, 1e-6 relative. Also the inequality
// form on every connected graph with n <= 6 and lambda1 >= 2, slack 1e-8,
// checked on every prefix of a shortest min-to-max path.
std::vector<CheckResult> verify_lemma1(double tol = 1e-12);

// Clique-attachment eigenvalue interval: lambda1(P_r.K_s) strictly inside
// (s-1 + 1/(s(s-1)), s-1 + 1/(s-1)^2) with margin > 1e-9, r in 2..10,
// s in 3..30.
std::vector<CheckResult> verify_lemma2(double tol = 1e-12);

// Neighborhood subset sums at the max-entry vertex of kites, r in 2..10,
// s in 3..15, every subset U: |U| - 1 < sum <= |U| with 1e-9 slack.
std::vector<CheckResult> verify_lemma7(double tol = 1e-12);

// Truncated sigma expansion against the closed form on a lambda grid, using
// the mathematically correct remainder envelope: the first omitted term is
// C_o * lambda^-(2o+1) (Catalan coefficient), and the tail is bounded by
// that term divided by (1 - 4 lambda^-2), plus float slack. The tail bound
// is what the truncation can actually achieve; see the acceptance suite for
// the stricter literal bound and its analysis.
std::vector<CheckResult> verify_sigma_series();

}  // namespace specirr
