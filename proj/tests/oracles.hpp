// Test-side oracles, deliberately low-tech and independent of the library's
// evaluation paths: plain partial sums with crude-but-rigorous tail bounds,
// and the Akiyama-Tanigawa triangle for Bernoulli numbers.  Everything is
// exact rational except where a constant (gamma) is pulled from MPFR with
// directed rounding.
#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <utility>
#include <vector>

#include "ball.hpp"
#include "erdos_function.hpp"
#include "rational_util.hpp"

namespace oracle {

using Interval = std::pair<mpq_class, mpq_class>;

// Partial sum of sum f(n)/n^k over n < N plus a crude tail bound:
//   k = 1: |tail| <= 2P/N with P = max |prefix sum of f|;
//   k >= 2: |tail| <= N^{1-k}/(k-1).
inline Interval direct_l_sum(const erdos::ErdosFunction& f, unsigned k, unsigned long N) {
  mpq_class head(0);
  for (unsigned long n = 1; n < N; ++n) {
    int v = f.value(n);
    if (v != 0) head += erdos::make_mpq(v, erdos::pow_ui(n, k));
  }
  mpq_class tail;
  if (k == 1) {
    long prefix = 0, peak = 0;
    for (unsigned long a = 1; a <= f.modulus(); ++a) {
      prefix += f.at(a);
      peak = std::max(peak, std::abs(prefix));
    }
    tail = erdos::make_mpq(2 * peak, mpz_class(static_cast<unsigned long>(N)));
  } else {
    tail = erdos::make_mpq(1, mpz_class(k - 1) * erdos::pow_ui(N, k - 1));
  }
  return {head - tail, head + tail};
}

// Enclosure of Euler's gamma, straight from MPFR with directed rounding.
inline Interval gamma_enclosure(mpfr_prec_t prec = 96) {
  mpfr_t lo, hi;
  mpfr_init2(lo, prec);
  mpfr_init2(hi, prec);
  mpfr_const_euler(lo, MPFR_RNDD);
  mpfr_const_euler(hi, MPFR_RNDU);
  mpq_class qlo, qhi;
  mpfr_get_q(qlo.get_mpq_t(), lo);
  mpfr_get_q(qhi.get_mpq_t(), hi);
  mpfr_clear(lo);
  mpfr_clear(hi);
  return {qlo, qhi};
}

// Psi(a/q) by the series Psi(x) = -gamma + sum_{n>=0} (1/(n+1) - 1/(n+x));
// for 0 < x <= 1 the terms are <= 0 with |term| <= 1/n^2, so the truncation
// error lies in [-1/N, 0].
inline Interval digamma_series(unsigned long a, unsigned long q, unsigned long N) {
  mpq_class x = erdos::make_mpq(a, q);
  mpq_class head(0);
  for (unsigned long n = 0; n < N; ++n) {
    head += erdos::make_mpq(1, n + 1) - 1 / (n + x);
  }
  Interval g = gamma_enclosure();
  mpq_class slack = erdos::make_mpq(1, N);
  return {head - g.second - slack, head - g.first};
}

// sum_{n<=N} n^{-s} + [0, N^{1-s}/(s-1)] for integer s >= 2.
inline Interval zeta_partial(unsigned s, unsigned long N) {
  mpq_class head(0);
  for (unsigned long n = 1; n <= N; ++n) head += erdos::make_mpq(1, erdos::pow_ui(n, s));
  mpq_class tail = erdos::make_mpq(1, mpz_class(s - 1) * erdos::pow_ui(N, s - 1));
  return {head, head + tail};
}

// B_m via the Akiyama-Tanigawa triangle (B_1 = +1/2 convention).
inline mpq_class bernoulli_akiyama_tanigawa(unsigned m) {
  std::vector<mpq_class> a(m + 1);
  for (unsigned j = 0; j <= m; ++j) a[j] = erdos::make_mpq(1, j + 1);
  for (unsigned i = 1; i <= m; ++i) {
    for (unsigned j = 0; j <= m - i; ++j) {
      a[j] = (a[j] - a[j + 1]) * static_cast<long>(j + 1);
    }
  }
  return a[0];
}

inline bool ball_inside(const erdos::Ball& b, const Interval& iv) {
  auto [lo, hi] = b.to_exact_interval();
  return iv.first <= lo && hi <= iv.second;
}

}  // namespace oracle
