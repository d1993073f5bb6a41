#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "bernoulli.hpp"
#include "cot_poly.hpp"
#include "digamma.hpp"
#include "doctest.h"
#include "functions.hpp"
#include "oracles.hpp"
#include "rational_util.hpp"
#include "support.hpp"

using namespace erdos;

namespace {
const PrecisionContext kCtx(128);

mpq_class q(long n, long d) { return make_mpq(n, d); }
}  // namespace

TEST_CASE("bernoulli numbers match the generating-function values") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == q(-1, 2));
  CHECK(bernoulli(2) == q(1, 6));
  CHECK(bernoulli(12) == q(-691, 2730));

  // Independent route: Akiyama-Tanigawa triangle (B_1 = +1/2 there).
  for (unsigned m = 0; m <= 30; ++m) {
    mpq_class at = oracle::bernoulli_akiyama_tanigawa(m);
    if (m == 1) at = -at;
    CHECK(bernoulli(m) == at);
  }
}

TEST_CASE("odd bernoulli numbers vanish and even ones alternate in sign") {
  for (unsigned m = 1; m <= 25; ++m) CHECK(bernoulli(2 * m + 1) == 0);
  for (unsigned m = 1; m <= 25; ++m) {
    int sign = sgn(bernoulli(2 * m));
    CHECK(sign == (m % 2 == 1 ? 1 : -1));
  }
}

TEST_CASE("scaled bernoulli magnitudes decrease (zeta(2m+2) < zeta(2m))") {
  for (unsigned m = 1; m <= 50; ++m) {
    mpq_class cur = abs(bernoulli(2 * m) / factorial(2 * m));
    mpq_class nxt = abs(bernoulli(2 * m + 2) / factorial(2 * m + 2));
    CHECK(nxt < cur);
  }
}

TEST_CASE("euler totient") {
  CHECK(euler_totient(1) == 1);
  CHECK(euler_totient(9) == 6);
  CHECK(euler_totient(15) == 8);
  for (unsigned long n = 1; n <= 120; ++n) {
    unsigned long count = 0;
    for (unsigned long a = 1; a <= n; ++a)
      if (std::gcd(a, n) == 1) ++count;
    CHECK(euler_totient(n) == count);
  }
}

TEST_CASE("even zeta values") {
  CHECK(zeta_even(1).coeff == q(1, 6));
  CHECK(zeta_even(1).pi_exponent == 2);
  CHECK(zeta_even(2).coeff == q(1, 90));
  CHECK(zeta_even(2).pi_exponent == 4);
  // Enclosure against direct summation with a tail bound.
  for (unsigned m = 1; m <= 5; ++m) {
    Ball z = zeta_even(m).to_ball(128);
    auto iv = oracle::zeta_partial(2 * m, 4000);
    auto [lo, hi] = z.to_exact_interval();
    CHECK(lo <= iv.second);
    CHECK(iv.first <= hi);
    CHECK(oracle::ball_inside(z, {iv.first - q(1, 1000000), iv.second + q(1, 1000000)}));
  }
}

TEST_CASE("cotangent derivative polynomials") {
  const auto& p0 = cot_derivative_poly(0);
  CHECK(p0.coeffs() == std::vector<mpz_class>{0, 1});  // c
  const auto& p1 = cot_derivative_poly(1);
  CHECK(p1.coeffs() == std::vector<mpz_class>{-1, 0, -1});  // -1 - c^2
  const auto& p2 = cot_derivative_poly(2);
  CHECK(p2.coeffs() == std::vector<mpz_class>{0, 2, 0, 2});  // 2c + 2c^3

  for (unsigned m = 0; m <= 20; ++m) {
    const auto& p = cot_derivative_poly(m);
    CHECK(p.coeffs().size() == m + 2);  // degree m+1
    // parity alternates: even m has only odd powers, odd m only even powers
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
      if ((i % 2 == 0) == (m % 2 == 0)) CHECK(p.coeffs()[i] == 0);
    }
  }
}

TEST_CASE("cotangent derivative evaluation at rational angles") {
  Ball v = cot_derivative_at(0, 1, 4, 128);
  CHECK(v.contains_mpq(mpq_class(1)));  // cot(pi/4) = 1
  CHECK(v.rad_mpq() < q(1, 1000000));

  // cot(pi/3) = 1/sqrt(3)
  Ball w = cot_derivative_at(0, 1, 3, 128);
  Ball ref = sqrt_ball(Ball::from_mpq(q(1, 3), 160));
  CHECK(w.overlaps(ref));
  CHECK(w.mid_decimal(8).substr(0, 10) == "5.77350269");

  // -(1 + cot^2(pi/2)) = -1, exactly (cot(pi/2) is an exact zero)
  Ball u = cot_derivative_at(1, 1, 2, 128);
  CHECK(u.contains_mpq(mpq_class(-1)));
  CHECK(u.is_exact());

  CHECK_THROWS_AS(cot_derivative_at(0, 4, 2, 128), Error);
  CHECK_THROWS_AS(cot_derivative_at(2, 0, 5, 128), Error);
}

TEST_CASE("digamma at rational arguments") {
  // Psi(1) = -gamma
  Ball p11 = digamma_rational(1, 1, kCtx);
  Ball gamma = euler_gamma_ball(160);
  CHECK(p11.overlaps(-gamma));
  CHECK(p11.mid_decimal(7).substr(0, 10) == "-5.7721566");

  // Psi(1/2) = -gamma - 2 log 2, cross-checked by the series oracle.
  Ball p12 = digamma_rational(1, 2, kCtx);
  Ball ref12 = -euler_gamma_ball(160) - log_ball(Ball::from_long(2, 160)).mul_mpq(mpq_class(2));
  CHECK(p12.overlaps(ref12));
  CHECK(oracle::ball_inside(p12, oracle::digamma_series(1, 2, 40000)));
  CHECK(p12.mid_decimal(7).substr(0, 10) == "-1.9635100");

  // Psi(1/4) = -gamma - pi/2 - 3 log 2
  Ball p14 = digamma_rational(1, 4, kCtx);
  Ball ref14 = -euler_gamma_ball(160) - pi_ball(160).mul_mpq(q(1, 2)) -
               log_ball(Ball::from_long(2, 160)).mul_mpq(mpq_class(3));
  CHECK(p14.overlaps(ref14));
  CHECK(oracle::ball_inside(p14, oracle::digamma_series(1, 4, 40000)));
  CHECK(p14.mid_decimal(7).substr(0, 10) == "-4.2274535");

  // Psi(a/q) = Psi(1) when a = q.
  CHECK(digamma_rational(7, 7, kCtx).overlaps(p11));
  CHECK_THROWS_AS(digamma_rational(8, 7, kCtx), Error);
  CHECK_THROWS_AS(digamma_rational(0, 7, kCtx), Error);
}

TEST_CASE("digamma series oracle encloses a spread of arguments") {
  for (auto [a, qq] : {std::pair<unsigned long, unsigned long>{1, 3},
                       {2, 3},
                       {3, 5},
                       {2, 7},
                       {5, 9},
                       {7, 15}}) {
    Ball v = digamma_rational(a, qq, kCtx);
    CHECK(oracle::ball_inside(v, oracle::digamma_series(a, qq, 60000)));
  }
}

TEST_CASE("digamma reflection: Psi(x) - Psi(1-x) = -pi cot(pi x)") {
  for (auto [a, qq] : {std::pair<unsigned long, unsigned long>{1, 3},
                       {1, 4},
                       {2, 5},
                       {3, 7},
                       {4, 9},
                       {5, 11}}) {
    Ball lhs = digamma_rational(a, qq, kCtx) - digamma_rational(qq - a, qq, kCtx);
    Ball rhs = -(pi_ball(160) * cot_pi(static_cast<long>(a), qq, 160));
    CHECK((lhs - rhs).contains_zero());
  }
}

TEST_CASE("ball arithmetic encloses exact rational results") {
  std::mt19937_64 gen(20240811);
  for (int i = 0; i < 200; ++i) {
    auto draw = [&]() {
      long num = static_cast<long>(gen() % 2001) - 1000;
      long den = 1 + static_cast<long>(gen() % 97);
      return q(num, den);
    };
    mpq_class x = draw(), y = draw();
    Ball bx = Ball::from_mpq(x, 96), by = Ball::from_mpq(y, 96);
    CHECK((bx + by).contains_mpq(x + y));
    CHECK((bx - by).contains_mpq(x - y));
    CHECK((bx * by).contains_mpq(x * y));
    if (y != 0 && !by.contains_zero()) CHECK((bx / by).contains_mpq(x / y));
    CHECK(bx.pow_ui(3).contains_mpq(x * x * x));
    CHECK(((bx + by) - by).contains_mpq(x));
  }
}

TEST_CASE("certified enclosures survive re-rounding to lower precision") {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 50; ++i) {
    unsigned long a = 1 + gen() % 20, qq = 21 + (gen() % 30) * 2;
    Ball fine = digamma_rational(a % qq == 0 ? 1 : a % qq, qq, PrecisionContext(256));
    Ball coarse = digamma_rational(a % qq == 0 ? 1 : a % qq, qq, PrecisionContext(64));
    CHECK(fine.overlaps(coarse));
    CHECK(fine.rad_mpq() < coarse.rad_mpq());
  }
}

TEST_CASE("precision context validates its bounds") {
  CHECK_THROWS_AS(PrecisionContext(52), Error);
  CHECK_THROWS_AS(PrecisionContext(128, 0), Error);
  CHECK(PrecisionContext(53).precision_bits == 53);
}
