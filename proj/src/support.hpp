#pragma once

#include <stdexcept>
#include <string>

namespace erdos {

// Error taxonomy shared by the C++ core and the C API (which maps these
// onto numeric status codes).
enum class Errc {
  invalid_argument,
  invalid_modulus,
  singular_argument,
  parity_mismatch,
  parity_violation,
  not_coprime,
  bound_vacuous,
  size_mismatch,
  length_mismatch,
  empty_population,
  population_too_large,
  precision_exhausted,
  reconstruction_failure,
  tail_bound_unavailable,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

// Worker count for parallel scans, from ERDOS_THREADS (default 1, clamped to
// [1, 64]).  All parallel reductions in this library combine partial results
// in rank order, so the thread count never changes any output byte.
int thread_budget();

}  // namespace erdos
