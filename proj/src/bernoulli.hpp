#pragma once

#include <gmpxx.h>

#include <string>

#include "ball.hpp"

namespace erdos {

// B_m from the generating function z/(e^z - 1); B_1 = -1/2.  Memoized and
// safe for concurrent callers.
mpq_class bernoulli(unsigned m);

// Exact value of the form coeff * pi^pi_exponent.
struct PiPowerRational {
  mpq_class coeff;
  unsigned pi_exponent = 0;

  Ball to_ball(mpfr_prec_t prec) const;
  std::string to_string() const;
  bool operator==(const PiPowerRational& o) const {
    return pi_exponent == o.pi_exponent && coeff == o.coeff;
  }
};

// zeta(2m) = (-1)^{m+1} B_{2m} 2^{2m} / (2 (2m)!) * pi^{2m}.
PiPowerRational zeta_even(unsigned m);

}  // namespace erdos
