#include "digamma.hpp"

#include "functions.hpp"
#include "rational_util.hpp"
#include "support.hpp"

namespace erdos {

Ball digamma_rational(unsigned long a, unsigned long q, const PrecisionContext& ctx) {
  if (q == 0 || a == 0 || a > q) fail(Errc::invalid_argument, "digamma_rational needs 1 <= a <= q");
  mpfr_prec_t prec = ctx.precision_bits;
  mpfr_prec_t wp = prec + 32;
  Ball gamma = euler_gamma_ball(wp);
  if (a == q) return (-gamma).rounded(prec);  // Psi(1)

  Ball acc = -gamma;
  acc -= log_ball(Ball::from_long(static_cast<long>(2 * q), wp));
  acc -= pi_ball(wp).mul_mpq(mpq_class(1, 2)) * cot_pi(static_cast<long>(a), q, wp);
  mpz_class qz(static_cast<long>(q));
  for (unsigned long j = 1; 2 * j < q; ++j) {
    mpq_class phase = make_mpq(mpz_class(static_cast<long>(j)) * static_cast<long>(a), qz);
    Ball term = cos_two_pi(phase, wp) * ln_sin_pi(j, q, wp);
    acc += term.mul_mpq(mpq_class(2));
  }
  return acc.rounded(prec);
}

}  // namespace erdos
