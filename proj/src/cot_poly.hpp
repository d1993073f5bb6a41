#pragma once

#include <gmpxx.h>

#include <vector>

#include "ball.hpp"

namespace erdos {

// d^m/dz^m cot z expressed as a polynomial P_m in c = cot z, generated by
// P_0 = c and P_{m+1} = -(1 + c^2) P_m'.  Degree m+1; parity alternates
// (even m gives an odd polynomial in c and vice versa).
class CotDerivPolynomial {
 public:
  CotDerivPolynomial(unsigned order, std::vector<mpz_class> coeffs)
      : order_(order), coeffs_(std::move(coeffs)) {}

  unsigned order() const { return order_; }
  // coeffs()[i] multiplies c^i; size is order+2.
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  Ball evaluate(const Ball& c) const;

 private:
  unsigned order_;
  std::vector<mpz_class> coeffs_;
};

const CotDerivPolynomial& cot_derivative_poly(unsigned m);  // memoized

// P_m(cot(pi a/q)); singular when q | a.
Ball cot_derivative_at(unsigned m, long a, unsigned long q, mpfr_prec_t prec);

}  // namespace erdos
