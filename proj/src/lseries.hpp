#pragma once

#include <vector>

#include "ball.hpp"
#include "erdos_function.hpp"
#include "precision.hpp"

namespace erdos {

enum class LMethod { DirectSum, Digamma, ClosedForm };

const char* l_method_name(LMethod m);

struct LValue {
  unsigned long q;
  unsigned k;
  LMethod method;
  Ball value;
};

// L(k,f) = sum f(n)/n^k by direct summation: an explicit head plus a
// rigorous tail enclosure obtained by repeated Abel summation against the
// periodic prefix-sum tower of f (exact rational bookkeeping).
Ball l_value_direct(const ErdosFunction& f, unsigned k, const PrecisionContext& ctx);

// L(1,f) = -(1/q) sum_a f(a) Psi(a/q).
Ball l1_digamma(const ErdosFunction& f, const PrecisionContext& ctx);
// Same, with a precomputed Psi(a/q) table (a = 1..q) for population scans.
Ball l1_digamma_with_table(const ErdosFunction& f, const std::vector<Ball>& psi,
                           const PrecisionContext& ctx);
std::vector<Ball> digamma_table(unsigned long q, const PrecisionContext& ctx);

// Cotangent closed form, defined when k and f share parity:
//   L(k,f) = (-1)^{k+1}/((k-1)! q^k) * sum_{a<=r} f(a) * pi^k * P_{k-1}(cot(pi a/q)).
Ball l_closed_form(const ErdosFunction& f, unsigned k, const PrecisionContext& ctx);

LValue l_value(const ErdosFunction& f, unsigned k, LMethod m, const PrecisionContext& ctx);

// 2 - zeta(k): a uniform positive lower bound for |L(k,f)| once k >= 2.
Ball nonvanishing_bound(unsigned k, const PrecisionContext& ctx);

struct NonzeroCertificate {
  bool certified;  // false = undecided (never "certified zero")
  int sign;        // -1 or +1 when certified
};
NonzeroCertificate certify_nonzero(const Ball& v);

}  // namespace erdos
