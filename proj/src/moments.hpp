#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ball.hpp"
#include "bernoulli.hpp"
#include "erdos_function.hpp"
#include "partitions.hpp"
#include "precision.hpp"

namespace erdos {

enum class MomentMethod { Enumeration, PartitionFormula, PaperFormula, MonteCarlo, Limiting };

const char* moment_method_name(MomentMethod m);

struct MomentReport {
  std::optional<unsigned long> q;  // empty = limiting (q -> infinity)
  unsigned k = 1;
  unsigned order = 0;
  MomentMethod method = MomentMethod::Enumeration;
  std::optional<PiPowerRational> exact;  // set when the value is exact
  Ball value;
  std::optional<double> std_error;  // Monte Carlo only
  std::optional<std::uint64_t> samples, seed;
};

// sum over distinct a_1..a_m in [1, (q-1)/2] (ordered tuples) of
// prod_i [cot^{(k-1)}(pi a_i/q)]^{2 lambda_i}.  Power-sum inclusion-
// exclusion over set partitions of the tuple slots.
Ball half_range_distinct_sum(const Partition& lambda, unsigned long q, unsigned k,
                             const PrecisionContext& ctx);
// Literal nested-loop enumeration (test oracle; cost (q/2)^m guarded).
Ball half_range_distinct_sum_direct(const Partition& lambda, unsigned long q, unsigned k,
                                    const PrecisionContext& ctx);

// Full-range distinct-index sum over [1, q-1] via the merge recursion
//   script_s(lambda) = prod_i S^{(lambda_i)} - sum_{eta < lambda} <lambda
//   choose eta> script_s(eta),
// cross-checked internally against the inclusion-exclusion route.
Ball script_s(const Partition& lambda, unsigned long q, unsigned k, const PrecisionContext& ctx);
Ball script_s_direct(const Partition& lambda, unsigned long q, unsigned k,
                     const PrecisionContext& ctx);

// Leading q^{2nk}-coefficient of script_s, by the exact recursion
//   c(lambda) = prod_i lead(lambda_i) - sum_{eta < lambda} <..> c(eta).
mpq_class c_lambda(const Partition& lambda, unsigned k);
// Half-range analogue with gamma_u = lead(u)/2; drives the limiting moments.
mpq_class d_lambda_half(const Partition& lambda, unsigned k);

// m_q(order) = average of L(k,f)^order over the parity-matching population;
// exact zero for odd orders (f <-> -f pairing).  Ground truth.
MomentReport moment_enumeration(unsigned long q, unsigned k, unsigned order,
                                const PrecisionContext& ctx);

// m_q(2n) = (pi^k/((k-1)! q^k))^{2n} sum_{lambda |- n} N(lambda) *
// half_range_distinct_sum(lambda); k odd (product-measure population).
MomentReport moment_partition_formula(unsigned long q, unsigned k, unsigned order,
                                      const PrecisionContext& ctx);

// The literal displayed constant (pi^k prefactor, 2^{2n} divisor, full-range
// script-S, no index-assignment multiplicities); kept for the discrepancy
// report, never for cross-checks.
MomentReport moment_paper_formula(unsigned long q, unsigned k, unsigned order,
                                  const PrecisionContext& ctx);

// Exact q -> infinity moment: pi^{2nk}/((k-1)!)^{2n} * sum N(lambda) d(lambda).
PiPowerRational limiting_moment(unsigned n, unsigned k);
// Literal displayed limit: pi^{2nk}/(((k-1)!)^{2n} 2^{2n}) * sum c(lambda).
PiPowerRational limiting_moment_paper(unsigned n, unsigned k);

MomentReport limiting_moment_report(unsigned n, unsigned k, MomentMethod method,
                                    const PrecisionContext& ctx);

// phi_N(t) = sum_{n<=N} (-1)^n M(2n) t^{2n}/(2n)! with a rigorous tail from
// the sub-Gaussian domination M(2n) <= (2n)!/(2^n n!) sigma^{2n}; the
// domination is verified exactly for n <= N.
Ball characteristic_function(const mpq_class& t, unsigned k, unsigned truncation,
                             const PrecisionContext& ctx);

struct DistributionTable {
  unsigned long q;
  unsigned k;
  std::vector<Ball> values;  // sorted by midpoint, population order on ties
  std::string cdf_csv() const;
  std::string histogram_csv(unsigned bins) const;
  Ball table_moment(unsigned order) const;  // average of values^order
};

DistributionTable empirical_cdf(unsigned long q, unsigned k, const PrecisionContext& ctx);

// Monte Carlo moments of the odd-parity (product-measure) population:
// iid uniform signs on 1..(q-1)/2, fixed 64-bit seed, block-seeded and
// combined in block order so results are byte-identical at any thread count.
MomentReport monte_carlo_moments(unsigned long q, unsigned k, unsigned order,
                                 std::uint64_t samples, std::uint64_t seed,
                                 const PrecisionContext& ctx);

}  // namespace erdos
