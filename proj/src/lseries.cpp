#include "lseries.hpp"

#include <algorithm>

#include "cot_poly.hpp"
#include "digamma.hpp"
#include "functions.hpp"
#include "rational_util.hpp"
#include "support.hpp"

namespace erdos {

const char* l_method_name(LMethod m) {
  switch (m) {
    case LMethod::DirectSum: return "direct";
    case LMethod::Digamma: return "digamma";
    default: return "closed";
  }
}

namespace {

// Exact rational enclosure of R = sum_{n>=N} f(n)/n^k for zero-sum periodic
// f and N = 1 (mod q).
//
// Repeated Abel summation: with w(n) = n^{-k} and B_0 = f, each level j
// replaces sum B_j * D^j w by the prefix sums A_j of B_j against D^{j+1} w,
// where (D g)(n) = g(n) - g(n+1).  Splitting A_j = mu_{j+1} + B_{j+1} into
// its period mean and a zero-mean periodic remainder pulls out the exactly
// telescoping term mu_{j+1} * (D^j w)(N), because sum_{n>=N} (D^{j+1} w)(n)
// = (D^j w)(N).  After D levels,
//   R = sum_{j=1..D} mu_j (D^{j-1} w)(N)  +  sum_{n>=N} B_D(n) (D^D w)(n),
// and since n^{-k} is completely monotone (all D^j w >= 0) the remainder is
// bounded by max|B_D| * (D^{j-1} w)(N).  Everything is exact in mpq.
struct TailEnclosure {
  mpq_class lo, hi;
  bool converged = false;
};

TailEnclosure periodic_tail(const ErdosFunction& f, unsigned k, unsigned long N,
                            unsigned max_depth, const mpq_class& target) {
  const unsigned long q = f.modulus();
  // Difference table seed: w(N+i) = (N+i)^{-k}, i = 0..max_depth.
  std::vector<mpq_class> d(max_depth + 1);
  for (unsigned i = 0; i <= max_depth; ++i) {
    d[i] = make_mpq(1, pow_ui(N + i, k));
  }
  std::vector<mpq_class> b(q);  // current B_j over one period, offsets from N
  for (unsigned long i = 0; i < q; ++i) b[i] = f.value(N + i);

  mpq_class terms(0);
  unsigned len = max_depth + 1;
  for (unsigned level = 1; level <= max_depth; ++level) {
    // d[0] currently holds g_{level-1}(N) = (D^{level-1} w)(N) >= 0.
    if (d[0] < 0) fail(Errc::internal, "monotone difference went negative");
    // Prefix sums of b, their mean, and the recentred remainder.
    mpq_class acc(0), mean(0);
    std::vector<mpq_class> a(q);
    for (unsigned long i = 0; i < q; ++i) {
      acc += b[i];
      a[i] = acc;
      mean += acc;
    }
    mean /= static_cast<long>(q);
    terms += mean * d[0];
    mpq_class peak(0);
    for (unsigned long i = 0; i < q; ++i) {
      b[i] = a[i] - mean;
      mpq_class m = b[i] >= 0 ? b[i] : mpq_class(-b[i]);
      if (m > peak) peak = m;
    }
    mpq_class bound = peak * d[0];
    if (bound <= target) {
      return TailEnclosure{terms - bound, terms + bound, true};
    }
    // Advance the difference table one level.
    if (len < 2) break;
    for (unsigned i = 0; i + 1 < len; ++i) d[i] -= d[i + 1];
    --len;
  }
  return TailEnclosure{};
}

}  // namespace

Ball l_value_direct(const ErdosFunction& f, unsigned k, const PrecisionContext& ctx) {
  if (k < 1) fail(Errc::invalid_argument, "k must be >= 1");
  const unsigned long q = f.modulus();
  const mpfr_prec_t prec = ctx.precision_bits;
  const mpfr_prec_t wp = prec + 32;

  // Tail target 2^-(prec+16); deepen/start later until the exact bound
  // certifies it (or the term cap binds, in which case the radius just
  // stays whatever the last exact bound allows).
  mpq_class target = make_mpq(1, pow_ui(2, static_cast<unsigned long>(prec + 16)));
  const unsigned max_depth = 96;
  unsigned long N = q * std::max<unsigned long>((2 * max_depth * (k + 1)), 64) + 1;
  TailEnclosure tail;
  for (;;) {
    tail = periodic_tail(f, k, N, max_depth, target);
    if (tail.converged) break;
    if (static_cast<long>(N) * 2 > ctx.max_terms) {
      // Accept the widest exact bound available at this N.
      mpq_class loose = make_mpq(1, 1);
      tail = periodic_tail(f, k, N, max_depth, loose);
      if (!tail.converged) fail(Errc::precision_exhausted, "direct-sum tail failed to certify");
      break;
    }
    N = 2 * (N - 1) + 1;  // stays = 1 (mod q)
  }

  Ball head = Ball::exact_zero(wp);
  for (unsigned long n = 1; n < N; ++n) {
    int v = f.value(n);
    if (v == 0) continue;
    mpq_class term = make_mpq(v, pow_ui(n, k));
    head += Ball::from_mpq(term, wp);
  }
  return (head + Ball::from_mpq_interval(tail.lo, tail.hi, wp)).rounded(prec);
}

std::vector<Ball> digamma_table(unsigned long q, const PrecisionContext& ctx) {
  std::vector<Ball> psi;
  psi.reserve(q);
  for (unsigned long a = 1; a <= q; ++a) psi.push_back(digamma_rational(a, q, ctx));
  return psi;
}

Ball l1_digamma_with_table(const ErdosFunction& f, const std::vector<Ball>& psi,
                           const PrecisionContext& ctx) {
  const unsigned long q = f.modulus();
  if (psi.size() != q) fail(Errc::size_mismatch, "digamma table length mismatch");
  Ball acc = Ball::exact_zero(ctx.precision_bits + 16);
  for (unsigned long a = 1; a < q; ++a) {
    int v = f.at(a);
    if (v > 0)
      acc += psi[a - 1];
    else
      acc -= psi[a - 1];
  }
  return acc.mul_mpq(make_mpq(-1, mpz_class(static_cast<long>(q)))).rounded(ctx.precision_bits);
}

Ball l1_digamma(const ErdosFunction& f, const PrecisionContext& ctx) {
  PrecisionContext inner(ctx.precision_bits + 16, ctx.max_terms);
  return l1_digamma_with_table(f, digamma_table(f.modulus(), inner), ctx);
}

Ball l_closed_form(const ErdosFunction& f, unsigned k, const PrecisionContext& ctx) {
  if (k < 1) fail(Errc::invalid_argument, "k must be >= 1");
  Parity need = (k % 2 == 1) ? Parity::Odd : Parity::Even;
  if (f.parity() != need)
    fail(Errc::parity_mismatch, "closed form requires k and f of the same parity");
  const unsigned long q = f.modulus();
  const mpfr_prec_t prec = ctx.precision_bits;
  const mpfr_prec_t wp = prec + 32;

  Ball acc = Ball::exact_zero(wp);
  for (unsigned long a = 1; 2 * a < q; ++a) {
    Ball term = cot_derivative_at(k - 1, static_cast<long>(a), q, wp);
    if (f.at(a) > 0)
      acc += term;
    else
      acc -= term;
  }
  // (-1)^{k+1} / ((k-1)! q^k), with the pi^k of the derivative chain.
  mpq_class scale = make_mpq((k % 2 == 1) ? 1 : -1, factorial(k - 1) * pow_ui(q, k));
  return (acc * pi_ball(wp).pow_ui(k)).mul_mpq(scale).rounded(prec);
}

LValue l_value(const ErdosFunction& f, unsigned k, LMethod m, const PrecisionContext& ctx) {
  Ball v = Ball::exact_zero(ctx.precision_bits);
  switch (m) {
    case LMethod::DirectSum: v = l_value_direct(f, k, ctx); break;
    case LMethod::Digamma:
      if (k != 1) fail(Errc::invalid_argument, "digamma method evaluates L(1,f) only");
      v = l1_digamma(f, ctx);
      break;
    case LMethod::ClosedForm: v = l_closed_form(f, k, ctx); break;
  }
  return LValue{f.modulus(), k, m, std::move(v)};
}

Ball nonvanishing_bound(unsigned k, const PrecisionContext& ctx) {
  if (k < 2) fail(Errc::bound_vacuous, "the bound 2 - zeta(k) is vacuous for k < 2");
  return Ball::from_long(2, ctx.precision_bits) - zeta_int_ball(k, ctx.precision_bits);
}

NonzeroCertificate certify_nonzero(const Ball& v) {
  int s = v.certified_sign();
  return NonzeroCertificate{s != 0, s};
}

}  // namespace erdos
