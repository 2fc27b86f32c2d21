#pragma once

#include <stdexcept>
#include <string>

namespace specirr {

// Bad parameters or malformed input: the caller's fault. The CLI maps these
// to exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation that ran but could not meet its contract (non-convergence,
// failed internal cross-check). The CLI maps these to exit code 1.
struct check_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// graph6 parse failure, one kind per failure mode so callers can tell a
// truncated string from a corrupt byte from extra input.
struct graph6_error : input_error {
  enum class kind { bad_length, bad_byte, trailing_garbage };
  kind k;
  graph6_error(kind k_, const std::string& msg) : input_error(msg), k(k_) {}
};

}  // namespace specirr
