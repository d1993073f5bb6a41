#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "bernoulli.hpp"
#include "enumeration.hpp"
#include "functions.hpp"
#include "lseries.hpp"
#include "oracles.hpp"
#include "rational_util.hpp"
#include "support.hpp"

using namespace erdos;

namespace {
const PrecisionContext kCtx(128);
const mpq_class kTinyTol = make_mpq(1, pow_ui(10, 25));
}  // namespace

TEST_CASE("L(1,f) mod 3 equals pi/(3 sqrt 3) by all three methods") {
  ErdosFunction f = ErdosFunction::parse("+-0");
  Ball ref = pi_ball(192) / sqrt_ball(Ball::from_long(27, 192));  // pi/sqrt(27)
  Ball d = l_value_direct(f, 1, kCtx);
  Ball g = l1_digamma(f, kCtx);
  Ball c = l_closed_form(f, 1, kCtx);
  for (const Ball* v : {&d, &g, &c}) {
    CHECK(v->overlaps(ref));
    CHECK(v->rad_mpq() < make_mpq(1, pow_ui(10, 25)));
    CHECK(v->mid_decimal(9).substr(0, 11) == "6.045997881");
  }
  CHECK(d.overlaps(g));
  CHECK(d.overlaps(c));
  CHECK(g.overlaps(c));
  CHECK(oracle::ball_inside(d, oracle::direct_l_sum(f, 1, 400000)));
}

TEST_CASE("direct sums sit inside the crude partial-sum oracle") {
  for (const char* s : {"+--+0", "++--0", "+-+-0", "+-+--+-+0"}) {
    ErdosFunction f = ErdosFunction::parse(s);
    for (unsigned k : {1u, 2u, 3u}) {
      Ball v = l_value_direct(f, k, kCtx);
      CHECK(oracle::ball_inside(v, oracle::direct_l_sum(f, k, 300000)));
    }
  }
}

TEST_CASE("digamma route matches the direct route and known closed forms") {
  // (1,1,-1,-1,0): L(1,f) = (pi/5)(cot(pi/5) + cot(2pi/5))
  ErdosFunction f = ErdosFunction::parse("++--0");
  Ball g = l1_digamma(f, kCtx);
  Ball ref = (cot_pi(1, 5, 192) + cot_pi(2, 5, 192)) * pi_ball(192).mul_mpq(make_mpq(1, 5));
  CHECK(g.overlaps(ref));
  CHECK(g.mid_decimal(9).substr(0, 11) == "1.068959704");
  CHECK(g.overlaps(l_value_direct(f, 1, kCtx)));
  CHECK(g.overlaps(l_closed_form(f, 1, kCtx)));

  // Pairing f with -f sums to zero across the whole population.
  Ball total = Ball::exact_zero(160);
  ErdosEnumerator en(5);
  while (auto h = en.next()) total += l1_digamma(*h, kCtx);
  CHECK(total.contains_zero());
}

TEST_CASE("same-parity closed form at k = 2 (even f)") {
  ErdosFunction f = ErdosFunction::parse("+--+0");
  Ball c = l_closed_form(f, 2, kCtx);
  // 4 pi^2 / (25 sqrt 5)
  Ball ref = pi_ball(192).pow_ui(2).mul_mpq(make_mpq(4, 25)) /
             sqrt_ball(Ball::from_long(5, 192));
  CHECK(c.overlaps(ref));
  CHECK(c.mid_decimal(9).substr(0, 11) == "7.062114030");
  CHECK(c.overlaps(l_value_direct(f, 2, kCtx)));
}

TEST_CASE("three-method interval agreement across small populations") {
  for (unsigned long q : {3ul, 5ul, 7ul}) {
    auto psi = digamma_table(q, PrecisionContext(kCtx.precision_bits + 16));
    ErdosEnumerator en(q);
    while (auto f = en.next()) {
      Ball d = l_value_direct(*f, 1, kCtx);
      Ball g = l1_digamma_with_table(*f, psi, kCtx);
      CHECK(d.overlaps(g));
      CHECK(d.rad_mpq() < kTinyTol);
      CHECK(g.rad_mpq() < kTinyTol);
      if (f->parity() == Parity::Odd) {
        Ball c = l_closed_form(*f, 1, kCtx);
        CHECK(c.overlaps(d));
        CHECK(c.overlaps(g));
        CHECK(c.rad_mpq() < kTinyTol);
      }
    }
  }
}

TEST_CASE("closed form vs direct sum at k = 2, 3 where parity matches") {
  for (unsigned long q : {5ul, 9ul}) {
    ErdosEnumerator en(q);
    while (auto f = en.next()) {
      Parity p = f->parity();
      if (p == Parity::Even) CHECK(l_closed_form(*f, 2, kCtx).overlaps(l_value_direct(*f, 2, kCtx)));
      if (p == Parity::Odd) CHECK(l_closed_form(*f, 3, kCtx).overlaps(l_value_direct(*f, 3, kCtx)));
    }
  }
  CHECK_THROWS_AS(l_closed_form(ErdosFunction::parse("+--+0"), 1, kCtx), Error);  // even f, odd k
  CHECK_THROWS_AS(l_closed_form(ErdosFunction::parse("+-0"), 2, kCtx), Error);    // odd f, even k
}

TEST_CASE("linearity: L(k, -f) = -L(k, f) with exactly mirrored midpoints") {
  for (const char* s : {"+-0", "++--0", "+--+0"}) {
    ErdosFunction f = ErdosFunction::parse(s);
    for (unsigned k : {1u, 2u}) {
      Ball a = l_value_direct(f, k, kCtx);
      Ball b = l_value_direct(f.negated(), k, kCtx);
      CHECK((a + b).contains_zero());
      CHECK(mpfr_cmp((-a).mid(), b.mid()) == 0);
      CHECK((a + b).mid_mpq() == 0);
    }
  }
}

TEST_CASE("nonvanishing bound 2 - zeta(k)") {
  Ball b2 = nonvanishing_bound(2, kCtx);
  Ball ref2 = Ball::from_long(2, 192) - zeta_even(1).to_ball(192);
  CHECK(b2.overlaps(ref2));
  CHECK(b2.mid_decimal(7).substr(0, 9) == "3.5506593");

  Ball b3 = nonvanishing_bound(3, kCtx);
  auto z3 = oracle::zeta_partial(3, 20000);
  CHECK(oracle::ball_inside(b3, {2 - z3.second, 2 - z3.first}));
  bool b3_digits = b3.mid_decimal(4).substr(0, 5) == "7.979";
  CHECK(b3_digits);

  Ball b20 = nonvanishing_bound(20, kCtx);
  auto [lo, hi] = b20.to_exact_interval();
  CHECK(lo > make_mpq(999, 1000));
  CHECK(hi < 1);

  CHECK_THROWS_AS(nonvanishing_bound(1, kCtx), Error);
}

TEST_CASE("|L(k,f)| clears the uniform bound for k >= 2") {
  for (unsigned long q : {5ul, 7ul}) {
    for (unsigned k : {2u, 3u}) {
      Ball bound = nonvanishing_bound(k, kCtx);
      mpq_class bound_hi = bound.to_exact_interval().second;
      ErdosEnumerator en(q);
      while (auto f = en.next()) {
        Ball v = l_value_direct(*f, k, kCtx).abs();
        CHECK(v.to_exact_interval().first >= bound_hi - make_mpq(1, 1000000));
        CHECK(certify_nonzero(v).certified);
      }
    }
  }
}

TEST_CASE("nonzero certification is one-sided") {
  auto ball = [](const mpq_class& mid, const mpq_class& rad) {
    return Ball::from_mpq_interval(mid - rad, mid + rad, 96);
  };
  CHECK(certify_nonzero(ball(make_mpq(1, 2), make_mpq(1, 10))).certified);
  CHECK(certify_nonzero(ball(make_mpq(1, 2), make_mpq(1, 10))).sign == 1);
  CHECK_FALSE(certify_nonzero(ball(0, make_mpq(1, 10))).certified);
  // -3e-40 with radius 1e-45: certified negative at 128 bits
  mpq_class tiny = make_mpq(-3, pow_ui(10, 40));
  mpq_class e45 = make_mpq(1, pow_ui(10, 45));
  auto r = certify_nonzero(ball(tiny, e45));
  CHECK(r.certified);
  CHECK(r.sign == -1);
}

TEST_CASE("direct sums honor the max_terms cap with a wider certified radius") {
  PrecisionContext cramped(128, 2000);
  ErdosFunction f = ErdosFunction::parse("+-0");
  Ball v = l_value_direct(f, 1, cramped);
  CHECK(oracle::ball_inside(v, oracle::direct_l_sum(f, 1, 400000)));
  CHECK(v.rad_mpq() > make_mpq(1, pow_ui(10, 30)));  // coarser than the uncapped run
}
