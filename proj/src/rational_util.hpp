#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace erdos {

// mpq_class(num, den) does not canonicalize; this does.
mpq_class make_mpq(const mpz_class& num, const mpz_class& den);

mpz_class binomial(unsigned long n, unsigned long k);
mpz_class factorial(unsigned long n);
mpz_class pow_ui(unsigned long base, unsigned long exp);
mpq_class mpq_pow_ui(const mpq_class& base, unsigned long exp);

// C(n, k) when it fits in 64 bits; throws otherwise.  Rank/unrank arithmetic
// for enumeration streams lives in this range by construction.
std::uint64_t binomial_u64(unsigned long n, unsigned long k);

unsigned long euler_totient(unsigned long q);

// The unique fraction of smallest denominator in the closed interval
// [lo, hi] (ties by smallest numerator).  Stern-Brocot / continued-fraction
// walk; used for certified rational reconstruction of Dedekind sums.
mpq_class simplest_in_interval(const mpq_class& lo, const mpq_class& hi);

std::string mpz_to_string(const mpz_class& z);
std::string mpq_to_string(const mpq_class& q);  // "num/den"

}  // namespace erdos
