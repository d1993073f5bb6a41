#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "bernoulli.hpp"
#include "dedekind.hpp"
#include "doctest.h"
#include "rational_util.hpp"
#include "support.hpp"

using namespace erdos;

namespace {
const PrecisionContext kCtx(128);

mpq_class q(long n, long d) { return make_mpq(n, d); }

Ball numeric(std::vector<unsigned long> a, std::vector<unsigned> m, unsigned i) {
  return dedekind_sum_numeric(DedekindSpec{std::move(a), std::move(m), i}, kCtx);
}
}  // namespace

TEST_CASE("degenerate and hand-checkable sums") {
  // a_i = 1 contributes exactly zero.
  Ball z = numeric({1, 3, 5}, {0, 0, 0}, 0);
  CHECK(z.is_exact());
  CHECK(z.contains_mpq(0));

  // C(3; 1,1 | 0; 0,0) = (1/3)(cot^2(pi/3) + cot^2(2pi/3)) = 2/9
  CHECK(numeric({3, 1, 1}, {0, 0, 0}, 0).contains_mpq(q(2, 9)));

  // C(3; 2 | 0; 1) = (1/3) sum_k -(1 + cot^2(2 pi k/3)) = -8/9
  CHECK(numeric({3, 2}, {0, 1}, 0).contains_mpq(q(-8, 9)));

  CHECK_THROWS_AS(numeric({4, 2}, {0, 0}, 0), Error);  // gcd(2,4) != 1
  CHECK_THROWS_AS(numeric({3, 2}, {0}, 0), Error);     // length mismatch
}

TEST_CASE("power sums S_{q,k}^{(u)}") {
  CHECK(s_qk(1, 3, 1, kCtx).contains_mpq(q(2, 3)));
  CHECK(s_qk(1, 5, 1, kCtx).contains_mpq(4));
  CHECK(s_qk(2, 5, 1, kCtx).contains_mpq(q(36, 5)));
  CHECK(s_qk(1, 1, 1, kCtx).contains_mpq(0));

  // S equals q times the displayed Dedekind sum specialization.
  for (auto [u, qq, k] : {std::tuple<unsigned, unsigned long, unsigned>{1, 5, 1},
                          {2, 5, 1},
                          {1, 7, 2}}) {
    std::vector<unsigned long> a(2 * u + 1, 1);
    a[0] = qq;
    std::vector<unsigned> m(2 * u + 1, k - 1);
    m[0] = 0;
    Ball via_c = dedekind_sum_numeric(DedekindSpec{a, m, 0}, kCtx)
                     .mul_mpq(mpq_class(static_cast<long>(qq)));
    CHECK(s_qk(u, qq, k, kCtx).overlaps(via_c));
  }
}

TEST_CASE("certified rational reconstruction of the power sums") {
  CHECK(s_qk_rational(2, 5, 1, kCtx) == q(36, 5));
  CHECK(s_qk_rational(1, 3, 1, kCtx) == q(2, 3));
  for (unsigned long qq = 3; qq <= 21; qq += 2) {
    for (unsigned u : {1u, 2u}) {
      for (unsigned k : {1u, 2u}) {
        mpq_class v = s_qk_rational(u, qq, k, kCtx);
        CHECK(v.get_den() <= pow_ui(qq, 2 * u));
        CHECK(s_qk(u, qq, k, kCtx).contains_mpq(v));
      }
    }
  }
}

TEST_CASE("reciprocity coefficient table") {
  CHECK(reciprocity_a_coefficient(2, 0) == 2);         // (-1)^m m! at j = 0
  CHECK(reciprocity_a_coefficient(1, 0) == -1);
  CHECK(reciprocity_a_coefficient(2, 1) == 0);         // 0 < j < (m+1)/2 window
  CHECK(reciprocity_a_coefficient(3, 1) == 0);
  CHECK(reciprocity_a_coefficient(0, 1) == q(1, 12));  // B_2 / (1! * 2)
  CHECK(reciprocity_a_coefficient(1, 1) == q(1, 12));  // B_2 / (0! * 2)
  CHECK(reciprocity_a_coefficient(0, 2) == q(-1, 720));
}

TEST_CASE("reciprocity residuals enclose zero under the calibrated signs") {
  using Spec = std::pair<std::vector<unsigned long>, std::vector<unsigned>>;
  const std::vector<Spec> specs = {
      // d = 1 (M = 1 + m_0 + m_1 must be even)
      {{2, 3}, {1, 0}},
      {{3, 4}, {0, 1}},
      {{4, 5}, {1, 0}},
      {{5, 7}, {2, 1}},
      {{3, 8}, {1, 2}},
      // d = 2
      {{2, 3, 5}, {0, 0, 0}},
      {{3, 4, 5}, {0, 0, 0}},
      {{2, 3, 5}, {0, 1, 1}},
      {{2, 5, 9}, {0, 0, 2}},
      {{4, 7, 9}, {0, 0, 0}},
  };
  for (const auto& [a, m] : specs) {
    Ball residual = reciprocity_check(a, m, kCtx);
    CAPTURE(a[0]);
    CHECK(residual.contains_zero());
    CHECK(residual.rad_mpq() < q(1, 1000000));
  }
  CHECK(dedekind_sign_convention().tag().find("R") != std::string::npos);
}

TEST_CASE("reciprocity input validation") {
  CHECK_THROWS_AS(reciprocity_rhs({2, 3}, {0, 0}), Error);     // M odd
  CHECK_THROWS_AS(reciprocity_rhs({2, 4}, {1, 0}), Error);     // not coprime
  CHECK_THROWS_AS(reciprocity_rhs({2, 3, 4}, {0, 0, 0}), Error);
  CHECK_THROWS_AS(reciprocity_check({5}, {0}, kCtx), Error);   // too short
}

TEST_CASE("closed-form polynomial for the quadratic cotangent sum") {
  PolynomialInQ p = s_qk_polynomial(1, 1);
  REQUIRE(p.degree() == 2);
  CHECK(p.coefficient(0) == q(2, 3));
  CHECK(p.coefficient(1) == -1);
  CHECK(p.coefficient(2) == q(1, 3));
  // (q-1)(q-2)/3 at a few moduli
  CHECK(p.evaluate(5) == 4);
  CHECK(p.evaluate(21) == q(19 * 20, 3));
}

TEST_CASE("polynomial degree and leading coefficient law") {
  CHECK(s_qk_leading_coefficient(1, 1) == q(1, 3));
  CHECK(s_qk_leading_coefficient(1, 2) == q(1, 45));
  for (unsigned u : {1u, 2u}) {
    for (unsigned k : {1u, 2u}) {
      PolynomialInQ p = s_qk_polynomial(u, k);
      CHECK(p.degree() == 2 * u * k);
      CHECK(p.leading() == s_qk_leading_coefficient(u, k));
      // 2^{2uk} ((k-1)!)^{2u} (-1)^{uk+1} B_{2uk}/(2uk)!
      mpq_class expect = mpq_class(pow_ui(2, 2 * u * k)) *
                         mpq_pow_ui(mpq_class(factorial(k - 1)), 2 * u) * bernoulli(2 * u * k) /
                         mpq_class(factorial(2 * u * k));
      if ((u * k) % 2 == 0) expect = -expect;
      CHECK(p.leading() == expect);
    }
  }
}

TEST_CASE("polynomials enclose the certified numeric sums") {
  for (unsigned u : {1u, 2u}) {
    for (unsigned k : {1u, 2u}) {
      PolynomialInQ p = s_qk_polynomial(u, k);
      for (unsigned long qq = 3; qq <= 21; qq += 2) {
        CHECK(s_qk(u, qq, k, kCtx).contains_mpq(p.evaluate(static_cast<long>(qq))));
      }
    }
  }
}

TEST_CASE("interpolation fallback reproduces the closed form") {
  for (auto [u, k] : {std::pair<unsigned, unsigned>{1, 1}, {1, 2}, {2, 1}}) {
    PolynomialInQ a = s_qk_polynomial(u, k);
    PolynomialInQ b = s_qk_polynomial_interpolated(u, k, kCtx);
    REQUIRE(a.degree() == b.degree());
    for (unsigned j = 0; j <= a.degree(); ++j) CHECK(a.coefficient(j) == b.coefficient(j));
  }
}
