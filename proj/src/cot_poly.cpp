#include "cot_poly.hpp"

#include <deque>
#include <mutex>

#include "functions.hpp"
#include "support.hpp"

namespace erdos {

Ball CotDerivPolynomial::evaluate(const Ball& c) const {
  mpfr_prec_t prec = c.precision();
  Ball acc = Ball::from_mpz(coeffs_.back(), prec);
  for (size_t i = coeffs_.size() - 1; i-- > 0;) {
    acc = acc * c + Ball::from_mpz(coeffs_[i], prec);
  }
  return acc;
}

const CotDerivPolynomial& cot_derivative_poly(unsigned m) {
  static std::mutex mu;
  static std::deque<CotDerivPolynomial> cache;  // deque: stable references
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) {
    cache.emplace_back(0u, std::vector<mpz_class>{mpz_class(0), mpz_class(1)});
  }
  while (cache.size() <= m) {
    const std::vector<mpz_class>& p = cache.back().coeffs();
    unsigned order = static_cast<unsigned>(cache.size());
    // next = -(1 + c^2) * p'(c)
    std::vector<mpz_class> next(p.size() + 1, mpz_class(0));
    for (size_t i = 1; i < p.size(); ++i) {
      mpz_class term = mpz_class(static_cast<long>(i)) * p[i];
      next[i - 1] -= term;
      next[i + 1] -= term;
    }
    cache.emplace_back(order, std::move(next));
  }
  return cache[m];
}

Ball cot_derivative_at(unsigned m, long a, unsigned long q, mpfr_prec_t prec) {
  Ball c = cot_pi(a, q, prec);
  return cot_derivative_poly(m).evaluate(c);
}

}  // namespace erdos
