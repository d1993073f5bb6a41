#include "rational_util.hpp"

#include <numeric>

#include "support.hpp"

namespace erdos {

mpq_class make_mpq(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(Errc::invalid_argument, "rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class pow_ui(unsigned long base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

mpq_class mpq_pow_ui(const mpq_class& base, unsigned long exp) {
  mpq_class r(1);
  mpq_class b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

std::uint64_t binomial_u64(unsigned long n, unsigned long k) {
  mpz_class r = binomial(n, k);
  if (!r.fits_ulong_p()) fail(Errc::population_too_large, "binomial exceeds 64 bits");
  return static_cast<std::uint64_t>(r.get_ui());
}

unsigned long euler_totient(unsigned long q) {
  if (q == 0) fail(Errc::invalid_argument, "totient of 0");
  unsigned long result = q;
  unsigned long n = q;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Simplest rational in [lo, hi] for 0 < lo <= hi.
mpq_class simplest_positive(const mpq_class& lo, const mpq_class& hi) {
  mpz_class fl = lo.get_num() / lo.get_den();  // floor for positive lo
  if (fl * lo.get_den() == lo.get_num()) return mpq_class(fl);  // lo integral
  mpz_class ceil_lo = fl + 1;
  if (mpq_class(ceil_lo) <= hi) return mpq_class(ceil_lo);
  // No integer inside; recurse on the fractional parts, inverted.
  mpq_class lo_frac = lo - mpq_class(fl);
  mpq_class hi_frac = hi - mpq_class(fl);
  mpq_class inner = simplest_positive(1 / hi_frac, 1 / lo_frac);
  return mpq_class(fl) + 1 / inner;
}

}  // namespace

mpq_class simplest_in_interval(const mpq_class& lo_in, const mpq_class& hi_in) {
  mpq_class lo = lo_in, hi = hi_in;
  if (lo > hi) std::swap(lo, hi);
  if (lo <= 0 && 0 <= hi) return mpq_class(0);
  if (hi < 0) {
    mpq_class r = simplest_positive(-hi, -lo);
    return -r;
  }
  return simplest_positive(lo, hi);
}

std::string mpz_to_string(const mpz_class& z) { return z.get_str(); }

std::string mpq_to_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace erdos
