#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ball.hpp"
#include "precision.hpp"

namespace erdos {

// Generalized cotangent Dedekind sum
//   C(a_i ; a_0,..,^a_i,..,a_d | m_i ; m_0,..,^m_i,..,m_d)
//     = a_i^{-(m_i+1)} sum_{t=1}^{a_i-1} prod_{j != i} P_{m_j}(cot(pi t a_j / a_i)),
// zero when a_i = 1.  Well defined when every a_j (j != i) is coprime to a_i.
struct DedekindSpec {
  std::vector<unsigned long> moduli;  // a_0..a_d
  std::vector<unsigned> orders;       // m_0..m_d
  unsigned distinguished = 0;         // i

  void validate() const;
  unsigned dimension() const { return static_cast<unsigned>(moduli.size()) - 1; }
};

Ball dedekind_sum_numeric(const DedekindSpec& spec, const PrecisionContext& ctx);

// S_{q,k}^{(u)} = sum_{t=1}^{q-1} [cot^{(k-1)}(pi t/q)]^{2u}
//              = q * C(q ; 1,..,1 | 0 ; k-1,..,k-1)   (2u trailing slots).
Ball s_qk(unsigned u, unsigned long q, unsigned k, const PrecisionContext& ctx);

// Certified rational reconstruction of S_{q,k}^{(u)} (denominator <= q^{2u}).
mpq_class s_qk_rational(unsigned u, unsigned long q, unsigned k, const PrecisionContext& ctx);

// Reciprocity right-hand side sign convention, calibrated once against
// direct numeric summation and recorded in output metadata.  The RHS used is
//   r_sign * R + (all m_i zero ? corr_sign * (-1)^{d/2} : 0).
struct SignConvention {
  int r_sign;
  int corr_sign;
  std::string tag() const;
};
const SignConvention& dedekind_sign_convention();

// The A_{i,j} coefficient of the reciprocity theorem for a slot of order m:
// (-1)^m m! at j = 0; B_{2j}/((2j-1-m)! (2j)) once 2j >= m+1; 0 between.
mpq_class reciprocity_a_coefficient(unsigned m, unsigned j);

// Exact rational right-hand side of the reciprocity identity for pairwise
// coprime a_0..a_d and even M = d + sum m_i, under the calibrated convention.
mpq_class reciprocity_rhs(const std::vector<unsigned long>& a, const std::vector<unsigned>& m);

// Residual (numeric cyclic LHS) - (exact RHS); encloses zero when the
// identity holds under the calibrated convention.
Ball reciprocity_check(const std::vector<unsigned long>& a, const std::vector<unsigned>& m,
                       const PrecisionContext& ctx);

class PolynomialInQ {
 public:
  PolynomialInQ() = default;
  explicit PolynomialInQ(std::vector<mpq_class> ascending) : coeffs_(std::move(ascending)) {
    trim();
  }

  unsigned degree() const { return coeffs_.empty() ? 0 : static_cast<unsigned>(coeffs_.size()) - 1; }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }
  const mpq_class& coefficient(unsigned j) const;
  mpq_class leading() const { return coeffs_.empty() ? mpq_class(0) : coeffs_.back(); }
  mpq_class evaluate(const mpq_class& x) const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

// Exact leading coefficient 2^{2uk} ((k-1)!)^{2u} (-1)^{uk+1} B_{2uk}/(2uk)!.
mpq_class s_qk_leading_coefficient(unsigned u, unsigned k);

// S_{q,k}^{(u)} as an exact polynomial in q (degree 2uk), assembled from the
// reciprocity closed form under the calibrated sign convention.
PolynomialInQ s_qk_polynomial(unsigned u, unsigned k);

// Fallback route: exact-degree interpolation through certified values at
// 2uk+1 sample moduli followed by rational reconstruction; verified against
// the exact leading coefficient and fresh enclosures.
PolynomialInQ s_qk_polynomial_interpolated(unsigned u, unsigned k, const PrecisionContext& ctx);

}  // namespace erdos
