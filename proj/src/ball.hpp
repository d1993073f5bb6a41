#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "precision.hpp"

namespace erdos {

// Certified real number: binary midpoint at a chosen precision plus a
// rigorous radius bounding |true value - midpoint|.  Every operation
// propagates radii (rounding always outward), so the true value is enclosed
// at all times.  Radii are stored at a fixed small precision and rounded up.
//
// Sign queries are one-sided by construction: a ball can certify "nonzero
// with this sign" (|mid| > rad) but can never certify "zero".
class Ball {
 public:
  explicit Ball(mpfr_prec_t prec = 128);
  Ball(const Ball& other);
  Ball(Ball&& other) noexcept;
  Ball& operator=(const Ball& other);
  Ball& operator=(Ball&& other) noexcept;
  ~Ball();

  static Ball exact_zero(mpfr_prec_t prec = 128);
  static Ball from_long(long v, mpfr_prec_t prec);
  static Ball from_mpz(const mpz_class& v, mpfr_prec_t prec);
  static Ball from_mpq(const mpq_class& v, mpfr_prec_t prec);
  // Ball enclosing [lo, hi].
  static Ball from_interval(const mpfr_t lo, const mpfr_t hi, mpfr_prec_t prec);
  static Ball from_mpq_interval(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(mid_); }
  bool is_exact() const { return mpfr_zero_p(rad_); }

  Ball operator-() const;
  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, const Ball& b);
  friend Ball operator/(const Ball& a, const Ball& b);
  Ball& operator+=(const Ball& b);
  Ball& operator-=(const Ball& b);
  Ball& operator*=(const Ball& b);

  Ball mul_mpq(const mpq_class& s) const;  // exact scaling up to one rounding
  Ball pow_ui(unsigned long e) const;
  Ball abs() const;

  // Re-round the midpoint to a different precision (radius widened).
  Ball rounded(mpfr_prec_t prec) const;

  bool contains_zero() const;
  // -1, +1 when certified nonzero; 0 when undecided.
  int certified_sign() const;
  bool overlaps(const Ball& other) const;       // exact interval test
  bool contains_mpq(const mpq_class& v) const;  // exact
  int cmp_mid(const Ball& other) const { return mpfr_cmp(mid_, other.mid_); }

  // Exact rational endpoints of the enclosure (binary floats are rational).
  std::pair<mpq_class, mpq_class> to_exact_interval() const;
  mpq_class rad_mpq() const;
  mpq_class mid_mpq() const;

  double mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
  double rad_double_upper() const { return mpfr_get_d(rad_, MPFR_RNDU); }

  std::string mid_decimal(int digits = 32) const;
  std::string rad_decimal(int digits = 3) const;
  std::string mid_hex() const;
  std::string rad_hex() const;

  // Raw access for the function-evaluation layer.
  const mpfr_t& mid() const { return mid_; }
  const mpfr_t& rad() const { return rad_; }
  mpfr_t& mid_mut() { return mid_; }
  mpfr_t& rad_mut() { return rad_; }
  // Accounts for a rounded midpoint operation: grows rad by one ulp of mid.
  void bump_ulp();

 private:
  mpfr_t mid_;
  mpfr_t rad_;
};

}  // namespace erdos
