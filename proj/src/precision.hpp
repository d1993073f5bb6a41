#pragma once

#include "support.hpp"

namespace erdos {

// Working-precision knobs threaded through every certified computation.
// precision_bits is the mantissa size of result midpoints; max_terms caps
// the length of any series the evaluators are allowed to sum.
struct PrecisionContext {
  long precision_bits = 128;
  long max_terms = 40000000;

  PrecisionContext() = default;
  explicit PrecisionContext(long bits, long terms = 40000000)
      : precision_bits(bits), max_terms(terms) {
    if (bits < 53) fail(Errc::invalid_argument, "precision_bits must be >= 53");
    if (terms < 1) fail(Errc::invalid_argument, "max_terms must be positive");
  }
};

}  // namespace erdos
