#include "dedekind.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "bernoulli.hpp"
#include "cot_poly.hpp"
#include "rational_util.hpp"
#include "support.hpp"

namespace erdos {

void DedekindSpec::validate() const {
  if (moduli.size() < 2 || moduli.size() != orders.size())
    fail(Errc::invalid_argument, "spec needs d+1 >= 2 moduli with matching orders");
  if (distinguished >= moduli.size()) fail(Errc::invalid_argument, "distinguished index out of range");
  for (unsigned long a : moduli)
    if (a == 0) fail(Errc::invalid_argument, "moduli must be positive");
  unsigned long ai = moduli[distinguished];
  for (size_t j = 0; j < moduli.size(); ++j) {
    if (j == distinguished) continue;
    if (std::gcd(moduli[j], ai) != 1)
      fail(Errc::not_coprime, "a_j must be coprime to a_i (singular cot term otherwise)");
  }
}

Ball dedekind_sum_numeric(const DedekindSpec& spec, const PrecisionContext& ctx) {
  spec.validate();
  const mpfr_prec_t prec = ctx.precision_bits;
  const unsigned long ai = spec.moduli[spec.distinguished];
  if (ai == 1) return Ball::exact_zero(prec);
  const mpfr_prec_t wp = prec + 32;

  Ball acc = Ball::exact_zero(wp);
  for (unsigned long t = 1; t < ai; ++t) {
    Ball prod = Ball::from_long(1, wp);
    for (size_t j = 0; j < spec.moduli.size(); ++j) {
      if (j == spec.distinguished) continue;
      long arg = static_cast<long>((t * spec.moduli[j]) % ai);
      prod *= cot_derivative_at(spec.orders[j], arg, ai, wp);
    }
    acc += prod;
  }
  mpq_class scale = make_mpq(1, pow_ui(ai, spec.orders[spec.distinguished] + 1));
  return acc.mul_mpq(scale).rounded(prec);
}

Ball s_qk(unsigned u, unsigned long q, unsigned k, const PrecisionContext& ctx) {
  if (u < 1 || k < 1) fail(Errc::invalid_argument, "s_qk requires u, k >= 1");
  if (q == 0) fail(Errc::invalid_argument, "q must be positive");
  const mpfr_prec_t prec = ctx.precision_bits;
  if (q == 1) return Ball::exact_zero(prec);
  const mpfr_prec_t wp = prec + 32;
  Ball acc = Ball::exact_zero(wp);
  for (unsigned long t = 1; t < q; ++t) {
    acc += cot_derivative_at(k - 1, static_cast<long>(t), q, wp).pow_ui(2 * u);
  }
  return acc.rounded(prec);
}

mpq_class s_qk_rational(unsigned u, unsigned long q, unsigned k, const PrecisionContext& ctx) {
  // Two distinct rationals with denominators <= B differ by at least 1/B^2,
  // so an enclosure narrower than 1/(2 q^{4u}) pins the value uniquely.
  mpq_class den_cap(pow_ui(q, 2 * u));
  mpq_class width_cap = make_mpq(1, 2 * pow_ui(q, 4 * u));
  long bits = ctx.precision_bits;
  for (int attempt = 0; attempt < 6; ++attempt, bits *= 2) {
    Ball v = s_qk(u, q, k, PrecisionContext(bits, ctx.max_terms));
    auto [lo, hi] = v.to_exact_interval();
    if (hi - lo >= width_cap) continue;
    mpq_class cand = simplest_in_interval(lo, hi);
    if (cand.get_den() <= den_cap.get_num()) return cand;
  }
  fail(Errc::reconstruction_failure, "s_qk rational reconstruction failed");
}

const mpq_class& PolynomialInQ::coefficient(unsigned j) const {
  static const mpq_class zero(0);
  return j < coeffs_.size() ? coeffs_[j] : zero;
}

mpq_class PolynomialInQ::evaluate(const mpq_class& x) const {
  mpq_class acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

void PolynomialInQ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

namespace {

// A_{i,j} table entry of the reciprocity theorem for slot order m:
//   j = 0                -> (-1)^m m!
//   2j >= m+1 (j >= 1)   -> B_{2j} / ((2j-1-m)! (2j))
//   otherwise            -> 0
mpq_class reciprocity_a(unsigned m, unsigned j) {
  if (j == 0) return mpq_class(((m % 2 == 0) ? 1 : -1) * factorial(m));
  if (2 * j >= m + 1) {
    return bernoulli(2 * j) / mpq_class(factorial(2 * j - 1 - m) * mpz_class(2 * j));
  }
  return mpq_class(0);
}

void validate_reciprocity_inputs(const std::vector<unsigned long>& a,
                                 const std::vector<unsigned>& m, unsigned& M_out) {
  if (a.size() < 2 || a.size() != m.size())
    fail(Errc::invalid_argument, "need d+1 >= 2 moduli with matching orders");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) fail(Errc::invalid_argument, "moduli must be positive");
    for (size_t j = i + 1; j < a.size(); ++j)
      if (std::gcd(a[i], a[j]) != 1) fail(Errc::not_coprime, "moduli must be pairwise coprime");
  }
  unsigned M = static_cast<unsigned>(a.size()) - 1;
  for (unsigned mi : m) M += mi;
  if (M % 2 != 0) fail(Errc::parity_violation, "M = d + sum m_i must be even");
  M_out = M;
}

mpq_class reciprocity_r(const std::vector<unsigned long>& a, const std::vector<unsigned>& m,
                        unsigned M) {
  const size_t slots = a.size();
  // sum over j_0+..+j_d = M/2 of prod a_i^{2 j_i} A_{i,j_i}, as an iterated
  // convolution of the per-slot vectors (A_{i,j} a_i^{2j})_j.
  unsigned half = M / 2;
  std::vector<mpq_class> acc(half + 1, mpq_class(0));
  acc[0] = 1;
  for (size_t i = 0; i < slots; ++i) {
    std::vector<mpq_class> slot(half + 1);
    for (unsigned j = 0; j <= half; ++j)
      slot[j] = reciprocity_a(m[i], j) * mpq_class(pow_ui(a[i], 2 * j));
    std::vector<mpq_class> next(half + 1, mpq_class(0));
    for (unsigned x = 0; x <= half; ++x) {
      if (acc[x] == 0) continue;
      for (unsigned y = 0; x + y <= half; ++y) {
        if (slot[y] == 0) continue;
        next[x + y] += acc[x] * slot[y];
      }
    }
    acc = std::move(next);
  }
  mpz_class denom(1);
  for (size_t i = 0; i < slots; ++i) denom *= pow_ui(a[i], m[i] + 1);
  mpq_class r = mpq_class(pow_ui(2, M)) * acc[half] / mpq_class(denom);
  if ((M / 2) % 2 != 0) r = -r;  // (-1)^{M/2}
  return r;
}

// Numeric left-hand side: the cyclic sum of binomially weighted, order-
// shifted Dedekind sums.
Ball reciprocity_lhs(const std::vector<unsigned long>& a, const std::vector<unsigned>& m,
                     const PrecisionContext& ctx) {
  const size_t slots = a.size();
  Ball acc = Ball::exact_zero(ctx.precision_bits + 16);
  for (size_t i = 0; i < slots; ++i) {
    if (a[i] == 1) continue;  // every C(...) with a_i = 1 vanishes
    // compositions l over the slots j != i with sum m_i
    std::vector<unsigned> comp(slots, 0);
    std::vector<size_t> others;
    for (size_t j = 0; j < slots; ++j)
      if (j != i) others.push_back(j);
    mpq_class outer(((m[i] % 2 == 0) ? 1 : -1) * factorial(m[i]));

    // enumerate compositions recursively
    auto rec = [&](auto&& self, size_t pos, unsigned remaining) -> void {
      if (pos + 1 == others.size()) {
        comp[others[pos]] = remaining;
        mpq_class weight = outer;
        std::vector<unsigned> shifted(m);
        for (size_t j : others) {
          weight *= make_mpq(pow_ui(a[j], comp[j]), factorial(comp[j]));
          shifted[j] = m[j] + comp[j];
        }
        DedekindSpec spec{a, shifted, static_cast<unsigned>(i)};
        acc += dedekind_sum_numeric(spec, ctx).mul_mpq(weight);
        return;
      }
      for (unsigned l = 0; l <= remaining; ++l) {
        comp[others[pos]] = l;
        self(self, pos + 1, remaining - l);
      }
    };
    rec(rec, 0, m[i]);
  }
  return acc;
}

SignConvention calibrate() {
  // Pin r_sign on a spec with nonzero orders, then the all-zero correction
  // sign on the plain cube; both compared against direct numeric summation.
  PrecisionContext ctx(192);
  const std::vector<unsigned long> a{2, 3, 5};

  const std::vector<unsigned> m_mixed{0, 1, 1};
  unsigned M = 0;
  validate_reciprocity_inputs(a, m_mixed, M);
  mpq_class r_mixed = reciprocity_r(a, m_mixed, M);
  Ball lhs_mixed = reciprocity_lhs(a, m_mixed, ctx);
  int r_sign = 0;
  for (int s : {-1, 1}) {
    if ((lhs_mixed - Ball::from_mpq(s * r_mixed, 192)).contains_zero()) {
      if (r_sign != 0) fail(Errc::internal, "sign calibration is ambiguous");
      r_sign = s;
    }
  }
  if (r_sign == 0) fail(Errc::internal, "sign calibration found no matching R sign");

  const std::vector<unsigned> m_zero{0, 0, 0};
  validate_reciprocity_inputs(a, m_zero, M);
  mpq_class r_zero = reciprocity_r(a, m_zero, M);
  Ball lhs_zero = reciprocity_lhs(a, m_zero, ctx);
  int corr_sign = 0;
  for (int c : {-1, 1}) {
    // d = 2 here, so (-1)^{d/2} = -1.
    mpq_class rhs = r_sign * r_zero + mpq_class(-c);
    if ((lhs_zero - Ball::from_mpq(rhs, 192)).contains_zero()) {
      if (corr_sign != 0) fail(Errc::internal, "correction calibration is ambiguous");
      corr_sign = c;
    }
  }
  if (corr_sign == 0) fail(Errc::internal, "sign calibration found no matching correction");
  return SignConvention{r_sign, corr_sign};
}

}  // namespace

mpq_class reciprocity_a_coefficient(unsigned m, unsigned j) { return reciprocity_a(m, j); }

std::string SignConvention::tag() const {
  std::string s = "rhs=";
  s += (r_sign > 0 ? "+R" : "-R");
  s += (corr_sign > 0 ? "+" : "-");
  s += "(-1)^(d/2)[all m=0]";
  return s;
}

const SignConvention& dedekind_sign_convention() {
  static const SignConvention conv = calibrate();
  return conv;
}

mpq_class reciprocity_rhs(const std::vector<unsigned long>& a, const std::vector<unsigned>& m) {
  unsigned M = 0;
  validate_reciprocity_inputs(a, m, M);
  const SignConvention& conv = dedekind_sign_convention();
  mpq_class rhs = conv.r_sign * reciprocity_r(a, m, M);
  if (std::all_of(m.begin(), m.end(), [](unsigned v) { return v == 0; })) {
    unsigned d = static_cast<unsigned>(a.size()) - 1;  // even when all m vanish
    int corr = ((d / 2) % 2 == 0) ? 1 : -1;
    rhs += conv.corr_sign * corr;
  }
  return rhs;
}

Ball reciprocity_check(const std::vector<unsigned long>& a, const std::vector<unsigned>& m,
                       const PrecisionContext& ctx) {
  mpq_class rhs = reciprocity_rhs(a, m);
  Ball lhs = reciprocity_lhs(a, m, ctx);
  return (lhs - Ball::from_mpq(rhs, ctx.precision_bits + 16)).rounded(ctx.precision_bits);
}

mpq_class s_qk_leading_coefficient(unsigned u, unsigned k) {
  if (u < 1 || k < 1) fail(Errc::invalid_argument, "u, k >= 1 required");
  unsigned long uk = static_cast<unsigned long>(u) * k;
  mpq_class lead = mpq_class(pow_ui(2, 2 * uk)) *
                   mpq_class(mpq_pow_ui(mpq_class(factorial(k - 1)), 2 * u)) * bernoulli(2 * uk) /
                   mpq_class(factorial(2 * uk));
  if (uk % 2 == 0) lead = -lead;  // (-1)^{uk+1}
  return lead;
}

PolynomialInQ s_qk_polynomial(unsigned u, unsigned k) {
  if (u < 1 || k < 1) fail(Errc::invalid_argument, "u, k >= 1 required");
  const SignConvention& conv = dedekind_sign_convention();
  const unsigned d = 2 * u;
  const unsigned uk = u * k;

  // W(T) = sum over j_1+..+j_{2u} = T of prod A(k-1, j_i).
  std::vector<mpq_class> w(uk + 1, mpq_class(0));
  w[0] = 1;
  std::vector<mpq_class> slot(uk + 1);
  for (unsigned j = 0; j <= uk; ++j) slot[j] = reciprocity_a(k - 1, j);
  for (unsigned rep = 0; rep < d; ++rep) {
    std::vector<mpq_class> next(uk + 1, mpq_class(0));
    for (unsigned x = 0; x <= uk; ++x) {
      if (w[x] == 0) continue;
      for (unsigned y = 0; x + y <= uk; ++y) {
        if (slot[y] == 0) continue;
        next[x + y] += w[x] * slot[y];
      }
    }
    w = std::move(next);
  }

  // S(q) = r_sign (-1)^{uk} 2^{2uk} sum_{j0} A(0,j0) W(uk-j0) q^{2 j0}
  //        + [k = 1] corr_sign (-1)^{d/2} q.
  std::vector<mpq_class> coeffs(2 * uk + 1, mpq_class(0));
  mpq_class front = mpq_class(pow_ui(2, 2 * uk)) * conv.r_sign;
  if (uk % 2 != 0) front = -front;
  for (unsigned j0 = 0; j0 <= uk; ++j0) {
    coeffs[2 * j0] = front * reciprocity_a(0, j0) * w[uk - j0];
  }
  if (k == 1) {
    int corr = ((u % 2 == 0) ? 1 : -1) * conv.corr_sign;  // (-1)^{d/2}, d = 2u
    coeffs[1] += corr;
  }
  PolynomialInQ poly(std::move(coeffs));
  if (poly.leading() != s_qk_leading_coefficient(u, k))
    fail(Errc::internal, "closed-form polynomial leading coefficient mismatch");
  return poly;
}

PolynomialInQ s_qk_polynomial_interpolated(unsigned u, unsigned k, const PrecisionContext& ctx) {
  const unsigned deg = 2 * u * k;
  // Nodes 2..deg+2; every q is admissible since the trailing moduli are 1.
  std::vector<unsigned long> nodes(deg + 1);
  std::vector<mpq_class> values(deg + 1);
  for (unsigned i = 0; i <= deg; ++i) {
    nodes[i] = i + 2;
    values[i] = s_qk_rational(u, nodes[i], k, ctx);
  }
  // Exact Lagrange interpolation.
  std::vector<mpq_class> coeffs(deg + 1, mpq_class(0));
  for (unsigned i = 0; i <= deg; ++i) {
    std::vector<mpq_class> basis{mpq_class(1)};  // product of (x - x_j)
    mpq_class denom(1);
    for (unsigned j = 0; j <= deg; ++j) {
      if (j == i) continue;
      mpq_class xj(static_cast<long>(nodes[j]));
      basis.push_back(0);
      for (size_t t = basis.size() - 1; t > 0; --t)
        basis[t] = basis[t - 1] - xj * basis[t];
      basis[0] = -xj * basis[0];
      denom *= mpq_class(static_cast<long>(nodes[i])) - xj;
    }
    mpq_class scale = values[i] / denom;
    for (size_t t = 0; t < basis.size(); ++t) coeffs[t] += basis[t] * scale;
  }
  PolynomialInQ poly(std::move(coeffs));
  if (poly.degree() != deg || poly.leading() != s_qk_leading_coefficient(u, k))
    fail(Errc::reconstruction_failure, "interpolated polynomial failed the leading-coefficient check");
  for (unsigned long probe : {deg + 3, deg + 5}) {
    Ball numeric = s_qk(u, probe, k, ctx);
    if (!numeric.contains_mpq(poly.evaluate(mpq_class(static_cast<long>(probe)))))
      fail(Errc::reconstruction_failure, "interpolated polynomial failed a fresh enclosure probe");
  }
  return poly;
}

}  // namespace erdos
