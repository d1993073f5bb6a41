#pragma once

#include "ball.hpp"

namespace erdos {

// Certified enclosures of the constants and elementary functions the rest of
// the library needs.  Arguments are exact rationals or balls; results always
// enclose the true value.

Ball pi_ball(mpfr_prec_t prec);
Ball euler_gamma_ball(mpfr_prec_t prec);
Ball zeta_int_ball(unsigned k, mpfr_prec_t prec);  // Riemann zeta at integer k >= 2

// Monotone functions evaluated by directed rounding at the interval endpoints.
Ball log_ball(const Ball& x);   // requires x certified positive
Ball exp_ball(const Ball& x);
Ball sqrt_ball(const Ball& x);  // requires x certified >= 0

// cot(pi a / q); argument reduced mod q, singular when q | a.
Ball cot_pi(long a, unsigned long q, mpfr_prec_t prec);

// log sin(pi j / q) for 0 < j < q/2 (argument strictly inside (0, pi/2)).
Ball ln_sin_pi(unsigned long j, unsigned long q, mpfr_prec_t prec);

// cos(2 pi x) for exact rational x.
Ball cos_two_pi(const mpq_class& x, mpfr_prec_t prec);

}  // namespace erdos
