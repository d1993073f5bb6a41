#include "ball.hpp"

#include <algorithm>

#include "support.hpp"

namespace erdos {

namespace {

constexpr mpfr_prec_t kRadPrec = 64;

// rad += 2^(exp(x) - prec(x)), one ulp of x.  Safe overestimate of the
// half-ulp round-off of an MPFR_RNDN operation that reported inexact.
void add_ulp_of(mpfr_t rad, const mpfr_t x) {
  if (!mpfr_regular_p(x)) {
    if (mpfr_zero_p(x)) fail(Errc::internal, "underflow while tracking rounding error");
    fail(Errc::internal, "non-finite midpoint");
  }
  mpfr_t t;
  mpfr_init2(t, 8);
  mpfr_set_ui_2exp(t, 1, mpfr_get_exp(x) - mpfr_get_prec(x), MPFR_RNDU);
  mpfr_add(rad, rad, t, MPFR_RNDU);
  mpfr_clear(t);
}

// 64-bit upper bound on |x| (a hair above, covering its own rounding).
void abs_upper(mpfr_t out, const mpfr_t x) {
  mpfr_abs(out, x, MPFR_RNDU);
  if (!mpfr_zero_p(out)) mpfr_nextabove(out);
}

}  // namespace

Ball::Ball(mpfr_prec_t prec) {
  mpfr_init2(mid_, std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN));
  mpfr_init2(rad_, kRadPrec);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

Ball::Ball(const Ball& other) {
  mpfr_init2(mid_, mpfr_get_prec(other.mid_));
  mpfr_init2(rad_, kRadPrec);
  mpfr_set(mid_, other.mid_, MPFR_RNDN);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& other) noexcept {
  mpfr_init2(mid_, mpfr_get_prec(other.mid_));
  mpfr_init2(rad_, kRadPrec);
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
}

Ball& Ball::operator=(const Ball& other) {
  if (this != &other) {
    mpfr_set_prec(mid_, mpfr_get_prec(other.mid_));
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
  }
  return *this;
}

Ball& Ball::operator=(Ball&& other) noexcept {
  if (this != &other) {
    mpfr_swap(mid_, other.mid_);
    mpfr_swap(rad_, other.rad_);
  }
  return *this;
}

Ball::~Ball() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

Ball Ball::exact_zero(mpfr_prec_t prec) { return Ball(prec); }

Ball Ball::from_long(long v, mpfr_prec_t prec) {
  Ball r(prec);
  int t = mpfr_set_si(r.mid_, v, MPFR_RNDN);
  if (t != 0) r.bump_ulp();
  return r;
}

Ball Ball::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
  Ball r(prec);
  int t = mpfr_set_z(r.mid_, v.get_mpz_t(), MPFR_RNDN);
  if (t != 0) r.bump_ulp();
  return r;
}

Ball Ball::from_mpq(const mpq_class& v, mpfr_prec_t prec) {
  Ball r(prec);
  int t = mpfr_set_q(r.mid_, v.get_mpq_t(), MPFR_RNDN);
  if (t != 0) r.bump_ulp();
  return r;
}

Ball Ball::from_interval(const mpfr_t lo, const mpfr_t hi, mpfr_prec_t prec) {
  if (mpfr_cmp(lo, hi) > 0) fail(Errc::internal, "inverted interval");
  Ball r(prec);
  mpfr_add(r.mid_, lo, hi, MPFR_RNDN);
  mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN);
  // mid lies in [lo, hi] (RNDN of the exact midpoint cannot escape it);
  // radius covers whichever side is farther.
  mpfr_t d1, d2;
  mpfr_init2(d1, kRadPrec);
  mpfr_init2(d2, kRadPrec);
  mpfr_sub(d1, r.mid_, lo, MPFR_RNDU);
  mpfr_sub(d2, hi, r.mid_, MPFR_RNDU);
  mpfr_max(r.rad_, d1, d2, MPFR_RNDU);
  mpfr_clear(d1);
  mpfr_clear(d2);
  return r;
}

Ball Ball::from_mpq_interval(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec) {
  mpfr_t l, h;
  mpfr_init2(l, std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN));
  mpfr_init2(h, std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN));
  mpfr_set_q(l, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(h, hi.get_mpq_t(), MPFR_RNDU);
  Ball r = from_interval(l, h, prec);
  mpfr_clear(l);
  mpfr_clear(h);
  return r;
}

void Ball::bump_ulp() { add_ulp_of(rad_, mid_); }

Ball Ball::operator-() const {
  Ball r(*this);
  mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);  // exact
  return r;
}

Ball operator+(const Ball& a, const Ball& b) {
  Ball r(std::max(a.precision(), b.precision()));
  int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
  if (t != 0) r.bump_ulp();
  return r;
}

Ball operator-(const Ball& a, const Ball& b) {
  Ball r(std::max(a.precision(), b.precision()));
  int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
  if (t != 0) r.bump_ulp();
  return r;
}

Ball operator*(const Ball& a, const Ball& b) {
  Ball r(std::max(a.precision(), b.precision()));
  int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  // rad = |a.mid|*b.rad + |b.mid|*a.rad + a.rad*b.rad
  mpfr_t am, bm, tmp;
  mpfr_init2(am, kRadPrec);
  mpfr_init2(bm, kRadPrec);
  mpfr_init2(tmp, kRadPrec);
  abs_upper(am, a.mid_);
  abs_upper(bm, b.mid_);
  mpfr_mul(r.rad_, am, b.rad_, MPFR_RNDU);
  mpfr_mul(tmp, bm, a.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, tmp, MPFR_RNDU);
  mpfr_mul(tmp, a.rad_, b.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, tmp, MPFR_RNDU);
  mpfr_clear(am);
  mpfr_clear(bm);
  mpfr_clear(tmp);
  if (t != 0) r.bump_ulp();
  return r;
}

Ball operator/(const Ball& a, const Ball& b) {
  if (b.contains_zero()) fail(Errc::singular_argument, "division by interval containing zero");
  Ball r(std::max(a.precision(), b.precision()));
  int t = mpfr_div(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  // |a/b - mid| <= (a.rad + |mid_true| * b.rad) / (|b.mid| - b.rad)
  mpfr_t blo, mhat, num;
  mpfr_init2(blo, kRadPrec);
  mpfr_init2(mhat, kRadPrec);
  mpfr_init2(num, kRadPrec);
  mpfr_abs(blo, b.mid_, MPFR_RNDD);
  mpfr_sub(blo, blo, b.rad_, MPFR_RNDD);
  if (mpfr_sgn(blo) <= 0) fail(Errc::singular_argument, "division by interval containing zero");
  abs_upper(mhat, r.mid_);
  add_ulp_of(mhat, r.mid_);  // covers |true quotient of midpoints| as well
  mpfr_mul(num, mhat, b.rad_, MPFR_RNDU);
  mpfr_add(num, num, a.rad_, MPFR_RNDU);
  mpfr_div(r.rad_, num, blo, MPFR_RNDU);
  mpfr_clear(blo);
  mpfr_clear(mhat);
  mpfr_clear(num);
  if (t != 0) r.bump_ulp();
  return r;
}

Ball& Ball::operator+=(const Ball& b) {
  *this = *this + b;
  return *this;
}

Ball& Ball::operator-=(const Ball& b) {
  *this = *this - b;
  return *this;
}

Ball& Ball::operator*=(const Ball& b) {
  *this = *this * b;
  return *this;
}

Ball Ball::mul_mpq(const mpq_class& s) const {
  Ball r(precision());
  int t = mpfr_mul_q(r.mid_, mid_, s.get_mpq_t(), MPFR_RNDN);
  mpfr_t sa;
  mpfr_init2(sa, kRadPrec);
  mpfr_set_q(sa, s.get_mpq_t(), MPFR_RNDU);
  mpfr_abs(sa, sa, MPFR_RNDU);
  mpfr_nextabove(sa);  // cover the RNDU conversion of |s| itself
  mpfr_mul(r.rad_, rad_, sa, MPFR_RNDU);
  mpfr_clear(sa);
  if (t != 0) r.bump_ulp();
  return r;
}

Ball Ball::pow_ui(unsigned long e) const {
  Ball acc = Ball::from_long(1, precision());
  Ball base(*this);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

Ball Ball::abs() const {
  // ||x| - |mid|| <= |x - mid| <= rad, so the same radius works.
  Ball r(*this);
  mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

Ball Ball::rounded(mpfr_prec_t prec) const {
  Ball r(prec);
  int t = mpfr_set(r.mid_, mid_, MPFR_RNDN);
  mpfr_set(r.rad_, rad_, MPFR_RNDU);
  if (t != 0) r.bump_ulp();
  return r;
}

bool Ball::contains_zero() const { return mpfr_cmpabs(mid_, rad_) <= 0; }

int Ball::certified_sign() const {
  if (mpfr_cmpabs(mid_, rad_) > 0) return mpfr_sgn(mid_) > 0 ? 1 : -1;
  return 0;
}

bool Ball::overlaps(const Ball& other) const {
  // Exact: |a.mid - b.mid| <= a.rad + b.rad over the rationals.
  mpq_class d = mid_mpq() - other.mid_mpq();
  if (d < 0) d = -d;
  return d <= rad_mpq() + other.rad_mpq();
}

bool Ball::contains_mpq(const mpq_class& v) const {
  mpq_class d = mid_mpq() - v;
  if (d < 0) d = -d;
  return d <= rad_mpq();
}

std::pair<mpq_class, mpq_class> Ball::to_exact_interval() const {
  mpq_class m = mid_mpq();
  mpq_class r = rad_mpq();
  return {m - r, m + r};
}

mpq_class Ball::mid_mpq() const {
  if (mpfr_zero_p(mid_)) return mpq_class(0);
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), mid_);
  return q;
}

mpq_class Ball::rad_mpq() const {
  if (mpfr_zero_p(rad_)) return mpq_class(0);
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), rad_);
  return q;
}

namespace {
std::string format_mpfr(const mpfr_t x, const char* fmt, int digits) {
  char* s = nullptr;
  if (digits >= 0) {
    mpfr_asprintf(&s, fmt, digits, x);
  } else {
    mpfr_asprintf(&s, fmt, x);
  }
  std::string out(s);
  mpfr_free_str(s);
  return out;
}
}  // namespace

std::string Ball::mid_decimal(int digits) const { return format_mpfr(mid_, "%.*Re", digits); }
std::string Ball::rad_decimal(int digits) const { return format_mpfr(rad_, "%.*Re", digits); }
std::string Ball::mid_hex() const { return format_mpfr(mid_, "%Ra", -1); }
std::string Ball::rad_hex() const { return format_mpfr(rad_, "%Ra", -1); }

}  // namespace erdos
