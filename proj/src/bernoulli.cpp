#include "bernoulli.hpp"

#include <mutex>
#include <vector>

#include "functions.hpp"
#include "rational_util.hpp"
#include "support.hpp"

namespace erdos {

mpq_class bernoulli(unsigned m) {
  static std::mutex mu;
  static std::vector<mpq_class> cache{mpq_class(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= m) {
    unsigned n = static_cast<unsigned>(cache.size());
    if (n > 1 && n % 2 == 1) {
      cache.emplace_back(0);
      continue;
    }
    // sum_{j=0}^{n} C(n+1, j) B_j = 0  =>  B_n
    mpq_class acc(0);
    for (unsigned j = 0; j < n; ++j) {
      acc += mpq_class(binomial(n + 1, j)) * cache[j];
    }
    cache.push_back(-acc / mpq_class(binomial(n + 1, n)));
  }
  return cache[m];
}

Ball PiPowerRational::to_ball(mpfr_prec_t prec) const {
  if (pi_exponent == 0) return Ball::from_mpq(coeff, prec);
  return pi_ball(prec).pow_ui(pi_exponent).mul_mpq(coeff);
}

std::string PiPowerRational::to_string() const {
  std::string s = "(" + mpq_to_string(coeff) + ")";
  if (pi_exponent > 0) s += "*pi^" + std::to_string(pi_exponent);
  return s;
}

PiPowerRational zeta_even(unsigned m) {
  if (m < 1) fail(Errc::invalid_argument, "zeta_even requires m >= 1");
  mpq_class c = bernoulli(2 * m) * mpq_class(pow_ui(2, 2 * m));
  c /= 2 * mpq_class(factorial(2 * m));
  if (m % 2 == 0) c = -c;  // (-1)^{m+1}
  return PiPowerRational{c, 2 * m};
}

}  // namespace erdos
