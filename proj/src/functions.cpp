#include "functions.hpp"

#include <algorithm>

#include "rational_util.hpp"
#include "support.hpp"

namespace erdos {

namespace {

struct MpfrTemp {
  mpfr_t x;
  explicit MpfrTemp(mpfr_prec_t prec) { mpfr_init2(x, prec); }
  ~MpfrTemp() { mpfr_clear(x); }
  MpfrTemp(const MpfrTemp&) = delete;
  MpfrTemp& operator=(const MpfrTemp&) = delete;
};

// [lo, hi] endpoints of a ball, directed outward, at the ball's precision.
void ball_endpoints(const Ball& b, mpfr_t lo, mpfr_t hi) {
  mpfr_sub(lo, b.mid(), b.rad(), MPFR_RNDD);
  mpfr_add(hi, b.mid(), b.rad(), MPFR_RNDU);
}

}  // namespace

Ball pi_ball(mpfr_prec_t prec) {
  Ball r(prec);
  mpfr_const_pi(r.mid_mut(), MPFR_RNDN);
  r.bump_ulp();
  return r;
}

Ball euler_gamma_ball(mpfr_prec_t prec) {
  Ball r(prec);
  mpfr_const_euler(r.mid_mut(), MPFR_RNDN);
  r.bump_ulp();
  return r;
}

Ball zeta_int_ball(unsigned k, mpfr_prec_t prec) {
  if (k < 2) fail(Errc::invalid_argument, "zeta enclosure requires k >= 2");
  MpfrTemp lo(prec), hi(prec);
  mpfr_zeta_ui(lo.x, k, MPFR_RNDD);
  mpfr_zeta_ui(hi.x, k, MPFR_RNDU);
  return Ball::from_interval(lo.x, hi.x, prec);
}

Ball log_ball(const Ball& x) {
  mpfr_prec_t prec = x.precision();
  MpfrTemp lo(prec), hi(prec);
  ball_endpoints(x, lo.x, hi.x);
  if (mpfr_sgn(lo.x) <= 0) fail(Errc::invalid_argument, "log of interval touching zero");
  mpfr_log(lo.x, lo.x, MPFR_RNDD);
  mpfr_log(hi.x, hi.x, MPFR_RNDU);
  return Ball::from_interval(lo.x, hi.x, prec);
}

Ball exp_ball(const Ball& x) {
  mpfr_prec_t prec = x.precision();
  MpfrTemp lo(prec), hi(prec);
  ball_endpoints(x, lo.x, hi.x);
  mpfr_exp(lo.x, lo.x, MPFR_RNDD);
  mpfr_exp(hi.x, hi.x, MPFR_RNDU);
  return Ball::from_interval(lo.x, hi.x, prec);
}

Ball sqrt_ball(const Ball& x) {
  mpfr_prec_t prec = x.precision();
  MpfrTemp lo(prec), hi(prec);
  ball_endpoints(x, lo.x, hi.x);
  if (mpfr_sgn(lo.x) < 0) fail(Errc::invalid_argument, "sqrt of interval below zero");
  mpfr_sqrt(lo.x, lo.x, MPFR_RNDD);
  mpfr_sqrt(hi.x, hi.x, MPFR_RNDU);
  return Ball::from_interval(lo.x, hi.x, prec);
}

Ball cot_pi(long a, unsigned long q, mpfr_prec_t prec) {
  if (q == 0) fail(Errc::invalid_argument, "zero modulus");
  long r = a % static_cast<long>(q);
  if (r < 0) r += static_cast<long>(q);
  if (r == 0) fail(Errc::singular_argument, "cot(pi a/q) with q | a");
  unsigned long ru = static_cast<unsigned long>(r);
  if (2 * ru == q) return Ball::exact_zero(prec);  // cot(pi/2) = 0

  // z = pi * r/q enclosed by directed rounding; cot is strictly decreasing
  // on (0, pi), and [zlo, zhi] stays inside because r/q <= 1 - 1/q.
  mpfr_prec_t wp = prec + 16;
  MpfrTemp plo(wp), phi(wp), zlo(wp), zhi(wp), clo(prec), chi(prec);
  mpfr_const_pi(plo.x, MPFR_RNDD);
  mpfr_const_pi(phi.x, MPFR_RNDU);
  mpq_class frac = make_mpq(mpz_class(static_cast<long>(ru)), mpz_class(static_cast<long>(q)));
  mpfr_mul_q(zlo.x, plo.x, frac.get_mpq_t(), MPFR_RNDD);
  mpfr_mul_q(zhi.x, phi.x, frac.get_mpq_t(), MPFR_RNDU);
  mpfr_cot(clo.x, zhi.x, MPFR_RNDD);
  mpfr_cot(chi.x, zlo.x, MPFR_RNDU);
  return Ball::from_interval(clo.x, chi.x, prec);
}

Ball ln_sin_pi(unsigned long j, unsigned long q, mpfr_prec_t prec) {
  if (j == 0 || 2 * j >= q) fail(Errc::invalid_argument, "ln_sin_pi requires 0 < j < q/2");
  mpfr_prec_t wp = prec + 16;
  MpfrTemp plo(wp), phi(wp), zlo(wp), zhi(wp), slo(wp), shi(wp), llo(prec), lhi(prec);
  mpfr_const_pi(plo.x, MPFR_RNDD);
  mpfr_const_pi(phi.x, MPFR_RNDU);
  mpq_class frac = make_mpq(mpz_class(static_cast<long>(j)), mpz_class(static_cast<long>(q)));
  mpfr_mul_q(zlo.x, plo.x, frac.get_mpq_t(), MPFR_RNDD);
  mpfr_mul_q(zhi.x, phi.x, frac.get_mpq_t(), MPFR_RNDU);
  // sin increasing on (0, pi/2); both endpoints stay inside for j < q/2.
  mpfr_sin(slo.x, zlo.x, MPFR_RNDD);
  mpfr_sin(shi.x, zhi.x, MPFR_RNDU);
  if (mpfr_sgn(slo.x) <= 0) fail(Errc::internal, "sin enclosure touched zero");
  mpfr_log(llo.x, slo.x, MPFR_RNDD);
  mpfr_log(lhi.x, shi.x, MPFR_RNDU);
  return Ball::from_interval(llo.x, lhi.x, prec);
}

Ball cos_two_pi(const mpq_class& x_in, mpfr_prec_t prec) {
  // Reduce to [0, 1); cos is 1-Lipschitz so the tiny enclosure width of
  // 2*pi*x transfers directly onto the radius.
  mpq_class x = x_in;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  x -= mpq_class(fl);

  Ball z = pi_ball(prec + 16).mul_mpq(2 * x);
  Ball r(prec);
  int t = mpfr_cos(r.mid_mut(), z.mid(), MPFR_RNDN);
  mpfr_set(r.rad_mut(), z.rad(), MPFR_RNDU);
  if (t != 0) r.bump_ulp();
  return r;
}

}  // namespace erdos
