#include "moments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <tuple>

#include "cot_poly.hpp"
#include "dedekind.hpp"
#include "enumeration.hpp"
#include "functions.hpp"
#include "lseries.hpp"
#include "rational_util.hpp"
#include "support.hpp"

namespace erdos {

const char* moment_method_name(MomentMethod m) {
  switch (m) {
    case MomentMethod::Enumeration: return "enumeration";
    case MomentMethod::PartitionFormula: return "partition";
    case MomentMethod::PaperFormula: return "paper";
    case MomentMethod::MonteCarlo: return "montecarlo";
    default: return "limit";
  }
}

namespace {

constexpr std::uint64_t kEnumerationCap = 1u << 24;

// sum over distinct ordered tuples expressed through power sums: for each
// set partition sigma of the tuple slots, prod over blocks of T(sum of
// lambda parts in the block), weighted by prod (-1)^{|B|-1} (|B|-1)!.
Ball distinct_from_power_sums(const Partition& lambda,
                              const std::function<Ball(unsigned)>& power_sum, mpfr_prec_t prec) {
  const auto& parts = lambda.parts();
  const unsigned m = lambda.part_count();
  if (m == 0) return Ball::from_long(1, prec);
  std::map<unsigned, Ball> cache;
  auto t_of = [&](unsigned u) -> const Ball& {
    auto it = cache.find(u);
    if (it == cache.end()) it = cache.emplace(u, power_sum(u)).first;
    return it->second;
  };
  Ball total = Ball::exact_zero(prec);
  std::vector<unsigned> block_sum;
  std::vector<unsigned> block_size;
  std::function<void(unsigned)> rec = [&](unsigned idx) {
    if (idx == m) {
      Ball term = Ball::from_long(1, prec);
      long weight = 1;
      for (size_t b = 0; b < block_sum.size(); ++b) {
        term *= t_of(block_sum[b]);
        for (unsigned s = 1; s < block_size[b]; ++s) weight *= -static_cast<long>(s);
      }
      total += term.mul_mpq(mpq_class(weight));
      return;
    }
    for (size_t b = 0; b < block_sum.size(); ++b) {
      block_sum[b] += parts[idx];
      block_size[b] += 1;
      rec(idx + 1);
      block_sum[b] -= parts[idx];
      block_size[b] -= 1;
    }
    block_sum.push_back(parts[idx]);
    block_size.push_back(1);
    rec(idx + 1);
    block_sum.pop_back();
    block_size.pop_back();
  };
  rec(0);
  return total;
}

Ball distinct_direct(const Partition& lambda, unsigned long lo, unsigned long hi, unsigned long q,
                     unsigned k, mpfr_prec_t prec) {
  const auto& parts = lambda.parts();
  const unsigned m = lambda.part_count();
  const unsigned long range = hi - lo + 1;
  double cost = 1;
  for (unsigned i = 0; i < m; ++i) cost *= static_cast<double>(range);
  if (cost > 2e6) fail(Errc::population_too_large, "direct distinct enumeration too large");

  std::vector<std::vector<Ball>> pw(m);
  for (unsigned i = 0; i < m; ++i) {
    pw[i].reserve(range);
    for (unsigned long t = lo; t <= hi; ++t)
      pw[i].push_back(cot_derivative_at(k - 1, static_cast<long>(t), q, prec).pow_ui(2 * parts[i]));
  }
  Ball total = Ball::exact_zero(prec);
  std::vector<bool> used(range, false);
  std::function<void(unsigned, Ball)> rec = [&](unsigned idx, Ball acc) {
    if (idx == m) {
      total += acc;
      return;
    }
    for (unsigned long t = 0; t < range; ++t) {
      if (used[t]) continue;
      used[t] = true;
      rec(idx + 1, acc * pw[idx][t]);
      used[t] = false;
    }
  };
  rec(0, Ball::from_long(1, prec));
  return total;
}

// Population symmetric closed-form weights: L(k,f) = sum_{a<=r} f(a) W_a.
std::vector<Ball> closed_form_weights(unsigned long q, unsigned k, mpfr_prec_t prec) {
  std::vector<Ball> w;
  const unsigned long r = (q - 1) / 2;
  w.reserve(r);
  Ball pik = pi_ball(prec).pow_ui(k);
  mpq_class scale = make_mpq((k % 2 == 1) ? 1 : -1, factorial(k - 1) * pow_ui(q, k));
  for (unsigned long a = 1; a <= r; ++a) {
    w.push_back((cot_derivative_at(k - 1, static_cast<long>(a), q, prec) * pik).mul_mpq(scale));
  }
  return w;
}

Ball l_from_weights(const ErdosFunction& f, const std::vector<Ball>& w, mpfr_prec_t prec) {
  Ball acc = Ball::exact_zero(prec);
  for (size_t a = 1; a <= w.size(); ++a) {
    if (f.at(a) > 0)
      acc += w[a - 1];
    else
      acc -= w[a - 1];
  }
  return acc;
}

Parity population_parity(unsigned k) { return (k % 2 == 1) ? Parity::Odd : Parity::Even; }

std::uint64_t population_count(unsigned long q, unsigned k) {
  mpz_class pop = erdos_parity_count(q, population_parity(k));
  if (pop == 0) fail(Errc::empty_population, "no functions share the parity of k at this q");
  if (!pop.fits_ulong_p() || pop.get_ui() > kEnumerationCap)
    fail(Errc::population_too_large, "parity population beyond enumeration cap");
  return static_cast<std::uint64_t>(pop.get_ui());
}

mpq_class lead_recursive(const Partition& lam, unsigned k, bool half) {
  using Key = std::tuple<std::vector<unsigned>, unsigned, bool>;
  static std::mutex mu;
  static std::map<Key, mpq_class> memo;
  Key key{lam.parts(), k, half};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  mpq_class prod(1);
  for (unsigned part : lam.parts()) {
    mpq_class lead = s_qk_leading_coefficient(part, k);
    if (half) lead /= 2;
    prod *= lead;
  }
  for (const auto& [eta, cnt] : merge_table(lam)) {
    if (eta == lam) continue;
    prod -= mpq_class(cnt) * lead_recursive(eta, k, half);
  }
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, prod);
  return prod;
}

}  // namespace

Ball half_range_distinct_sum(const Partition& lambda, unsigned long q, unsigned k,
                             const PrecisionContext& ctx) {
  if (q < 3 || q % 2 == 0) fail(Errc::invalid_modulus, "q must be odd and >= 3");
  const unsigned long r = (q - 1) / 2;
  if (lambda.part_count() > r)
    fail(Errc::invalid_argument, "more tuple slots than half-range residues");
  const mpfr_prec_t wp = ctx.precision_bits + 16;
  auto power_sum = [&](unsigned u) {
    Ball acc = Ball::exact_zero(wp);
    for (unsigned long a = 1; a <= r; ++a)
      acc += cot_derivative_at(k - 1, static_cast<long>(a), q, wp).pow_ui(2 * u);
    return acc;
  };
  return distinct_from_power_sums(lambda, power_sum, wp).rounded(ctx.precision_bits);
}

Ball half_range_distinct_sum_direct(const Partition& lambda, unsigned long q, unsigned k,
                                    const PrecisionContext& ctx) {
  const unsigned long r = (q - 1) / 2;
  return distinct_direct(lambda, 1, r, q, k, ctx.precision_bits + 16).rounded(ctx.precision_bits);
}

Ball script_s(const Partition& lambda, unsigned long q, unsigned k, const PrecisionContext& ctx) {
  if (q < 3 || q % 2 == 0) fail(Errc::invalid_modulus, "q must be odd and >= 3");
  const mpfr_prec_t wp = ctx.precision_bits + 16;
  PrecisionContext inner(wp, ctx.max_terms);

  std::map<unsigned, Ball> s_cache;
  auto s_of = [&](unsigned u) -> const Ball& {
    auto it = s_cache.find(u);
    if (it == s_cache.end()) it = s_cache.emplace(u, s_qk(u, q, k, inner)).first;
    return it->second;
  };
  std::map<Partition, Ball> memo;
  std::function<const Ball&(const Partition&)> rec = [&](const Partition& lam) -> const Ball& {
    auto it = memo.find(lam);
    if (it != memo.end()) return it->second;
    Ball val = Ball::from_long(1, wp);
    for (unsigned part : lam.parts()) val *= s_of(part);
    for (const auto& [eta, cnt] : merge_table(lam)) {
      if (eta == lam) continue;
      val -= rec(eta).mul_mpq(mpq_class(cnt));
    }
    return memo.emplace(lam, std::move(val)).first->second;
  };
  Ball result = rec(lambda);

  // Independent route: inclusion-exclusion over the same power sums.
  Ball check = distinct_from_power_sums(lambda, [&](unsigned u) { return s_of(u); }, wp);
  if (!result.overlaps(check)) fail(Errc::internal, "script-S recursion disagrees with inclusion-exclusion");
  return result.rounded(ctx.precision_bits);
}

Ball script_s_direct(const Partition& lambda, unsigned long q, unsigned k,
                     const PrecisionContext& ctx) {
  return distinct_direct(lambda, 1, q - 1, q, k, ctx.precision_bits + 16)
      .rounded(ctx.precision_bits);
}

mpq_class c_lambda(const Partition& lambda, unsigned k) {
  if (k < 1) fail(Errc::invalid_argument, "k >= 1 required");
  return lead_recursive(lambda, k, false);
}

mpq_class d_lambda_half(const Partition& lambda, unsigned k) {
  if (k < 1) fail(Errc::invalid_argument, "k >= 1 required");
  return lead_recursive(lambda, k, true);
}

MomentReport moment_enumeration(unsigned long q, unsigned k, unsigned order,
                                const PrecisionContext& ctx) {
  if (k < 1) fail(Errc::invalid_argument, "k >= 1 required");
  const Parity parity = population_parity(k);
  const std::uint64_t pop = population_count(q, k);
  const mpfr_prec_t wp = ctx.precision_bits + 16;

  MomentReport rep;
  rep.q = q;
  rep.k = k;
  rep.order = order;
  rep.method = MomentMethod::Enumeration;

  if (order % 2 == 1) {
    // Exact: f <-> -f pairs cancel odd powers term by term.
    rep.value = Ball::exact_zero(ctx.precision_bits);
    rep.exact = PiPowerRational{mpq_class(0), 0};
    return rep;
  }

  std::vector<Ball> weights = closed_form_weights(q, k, wp);
  const unsigned chunks = parallel_chunk_count(pop);
  std::vector<Ball> partial(std::max(1u, chunks), Ball::exact_zero(wp));
  parallel_ranges(pop, [&](unsigned chunk, std::uint64_t lo, std::uint64_t hi) {
    Ball acc = Ball::exact_zero(wp);
    ParityEnumerator en(q, parity, lo, hi);
    while (auto f = en.next()) {
      if (f->at(1) < 0) continue;  // the -f partner contributes identically
      acc += l_from_weights(*f, weights, wp).pow_ui(order).mul_mpq(mpq_class(2));
    }
    partial[chunk] = std::move(acc);
  });
  Ball sum = Ball::exact_zero(wp);
  for (const Ball& p : partial) sum += p;
  rep.value = sum.mul_mpq(make_mpq(1, mpz_class(static_cast<unsigned long>(pop))))
                  .rounded(ctx.precision_bits);
  return rep;
}

MomentReport moment_partition_formula(unsigned long q, unsigned k, unsigned order,
                                      const PrecisionContext& ctx) {
  if (k % 2 != 1)
    fail(Errc::parity_mismatch, "partition formula covers odd k (product-measure populations)");
  if (order % 2 != 0) fail(Errc::invalid_argument, "partition formula computes even orders");
  if (q < 3 || q % 2 == 0) fail(Errc::invalid_modulus, "q must be odd and >= 3");
  const unsigned n = order / 2;
  const mpfr_prec_t wp = ctx.precision_bits + 16;
  PrecisionContext inner(wp, ctx.max_terms);

  Ball sum = Ball::exact_zero(wp);
  for (const Partition& lam : partitions(n)) {
    if (lam.part_count() > (q - 1) / 2) continue;  // no distinct tuples exist
    sum += half_range_distinct_sum(lam, q, k, inner).mul_mpq(mpq_class(block_multiplicity(lam)));
  }
  mpq_class denom = make_mpq(1, mpq_pow_ui(mpq_class(factorial(k - 1) * pow_ui(q, k)),
                                           2 * static_cast<unsigned long>(n))
                                  .get_num());
  Ball prefactor = pi_ball(wp).pow_ui(2ul * n * k).mul_mpq(denom);

  MomentReport rep;
  rep.q = q;
  rep.k = k;
  rep.order = order;
  rep.method = MomentMethod::PartitionFormula;
  rep.value = (prefactor * sum).rounded(ctx.precision_bits);
  return rep;
}

MomentReport moment_paper_formula(unsigned long q, unsigned k, unsigned order,
                                  const PrecisionContext& ctx) {
  if (k % 2 != 1)
    fail(Errc::parity_mismatch, "paper-literal formula covers odd k populations");
  if (order % 2 != 0) fail(Errc::invalid_argument, "paper-literal formula computes even orders");
  if (q < 3 || q % 2 == 0) fail(Errc::invalid_modulus, "q must be odd and >= 3");
  const unsigned n = order / 2;
  const mpfr_prec_t wp = ctx.precision_bits + 16;
  PrecisionContext inner(wp, ctx.max_terms);

  Ball sum = Ball::exact_zero(wp);
  for (const Partition& lam : partitions(n)) {
    sum += script_s(lam, q, k, inner);
  }
  // pi^k / (((k-1)!)^{2n} 2^{2n} q^{2kn}), exactly as displayed.
  mpz_class denom = mpq_pow_ui(mpq_class(factorial(k - 1)), 2 * n).get_num() *
                    pow_ui(2, 2 * n) * pow_ui(q, 2ul * k * n);
  Ball prefactor = pi_ball(wp).pow_ui(k).mul_mpq(make_mpq(1, denom));

  MomentReport rep;
  rep.q = q;
  rep.k = k;
  rep.order = order;
  rep.method = MomentMethod::PaperFormula;
  rep.value = (prefactor * sum).rounded(ctx.precision_bits);
  return rep;
}

PiPowerRational limiting_moment(unsigned n, unsigned k) {
  if (k % 2 != 1) fail(Errc::parity_mismatch, "limiting moments cover odd k populations");
  if (n == 0) return PiPowerRational{mpq_class(1), 0};
  mpq_class acc(0);
  for (const Partition& lam : partitions(n)) {
    acc += mpq_class(block_multiplicity(lam)) * d_lambda_half(lam, k);
  }
  acc /= mpq_pow_ui(mpq_class(factorial(k - 1)), 2 * n);
  return PiPowerRational{acc, 2 * n * k};
}

PiPowerRational limiting_moment_paper(unsigned n, unsigned k) {
  if (k % 2 != 1) fail(Errc::parity_mismatch, "limiting moments cover odd k populations");
  if (n == 0) return PiPowerRational{mpq_class(1), 0};
  mpq_class acc(0);
  for (const Partition& lam : partitions(n)) acc += c_lambda(lam, k);
  acc /= mpq_pow_ui(mpq_class(factorial(k - 1)), 2 * n) * mpq_class(pow_ui(2, 2 * n));
  return PiPowerRational{acc, 2 * n * k};
}

MomentReport limiting_moment_report(unsigned n, unsigned k, MomentMethod method,
                                    const PrecisionContext& ctx) {
  if (method != MomentMethod::Limiting && method != MomentMethod::PaperFormula)
    fail(Errc::invalid_argument, "limit reports support the limit and paper methods");
  PiPowerRational exact =
      (method == MomentMethod::Limiting) ? limiting_moment(n, k) : limiting_moment_paper(n, k);
  MomentReport rep;
  rep.k = k;
  rep.order = 2 * n;
  rep.method = method;
  rep.value = exact.to_ball(ctx.precision_bits);
  rep.exact = std::move(exact);
  return rep;
}

Ball characteristic_function(const mpq_class& t, unsigned k, unsigned truncation,
                             const PrecisionContext& ctx) {
  if (truncation < 1) fail(Errc::invalid_argument, "truncation must be >= 1");
  const mpfr_prec_t wp = ctx.precision_bits + 16;
  const mpq_class sigma2 = limiting_moment(1, k).coeff;  // times pi^{2k}

  Ball phi = Ball::exact_zero(wp);
  mpq_class t2 = t * t;
  for (unsigned n = 0; n <= truncation; ++n) {
    PiPowerRational m2n = limiting_moment(n, k);
    // Verify the sub-Gaussian domination M(2n) <= (2n)!/(2^n n!) sigma^{2n}
    // exactly before leaning on it for the tail.
    mpq_class dominator = mpq_class(factorial(2 * n)) /
                          (mpq_class(pow_ui(2, n)) * mpq_class(factorial(n))) *
                          mpq_pow_ui(sigma2, n);
    if (m2n.coeff > dominator)
      fail(Errc::tail_bound_unavailable, "sub-Gaussian domination fails below the truncation");
    mpq_class scale = m2n.coeff * mpq_pow_ui(t2, n) / mpq_class(factorial(2 * n));
    if (n % 2 == 1) scale = -scale;
    phi += pi_ball(wp).pow_ui(m2n.pi_exponent).mul_mpq(scale);
  }
  // Tail of sum x^n/n! past N, with x = sigma^2 t^2 / 2:
  // bounded by e^x x^{N+1}/(N+1)!.
  Ball x = pi_ball(wp).pow_ui(2 * k).mul_mpq(sigma2 * t2 / 2);
  Ball tail = exp_ball(x) * x.pow_ui(truncation + 1);
  tail = tail.mul_mpq(make_mpq(1, factorial(truncation + 1)));
  mpq_class tail_up = tail.to_exact_interval().second;
  if (tail_up < 0) tail_up = 0;
  return (phi + Ball::from_mpq_interval(-tail_up, tail_up, wp)).rounded(ctx.precision_bits);
}

std::string DistributionTable::cdf_csv() const {
  std::string out = "value,cdf\n";
  char buf[64];
  const double pop = static_cast<double>(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    out += values[i].mid_decimal(24);
    std::snprintf(buf, sizeof(buf), ",%.12g\n", static_cast<double>(i + 1) / pop);
    out += buf;
  }
  return out;
}

std::string DistributionTable::histogram_csv(unsigned bins) const {
  if (bins < 1) fail(Errc::invalid_argument, "need at least one bin");
  std::string out = "bin_lo,bin_hi,count\n";
  if (values.empty()) return out;
  mpq_class lo = values.front().mid_mpq();
  mpq_class hi = values.back().mid_mpq();
  char buf[160];
  if (lo == hi) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%zu\n", mpq_class(lo).get_d(),
                  mpq_class(hi).get_d(), values.size());
    out += buf;
    return out;
  }
  mpq_class width = (hi - lo) / static_cast<long>(bins);
  std::vector<std::size_t> counts(bins, 0);
  for (const Ball& v : values) {
    mpq_class offset = (v.mid_mpq() - lo) / width;
    // floor(offset), clamped into range (the max lands in the last bin)
    mpz_class idx;
    mpz_fdiv_q(idx.get_mpz_t(), offset.get_num().get_mpz_t(), offset.get_den().get_mpz_t());
    unsigned long b = idx.get_ui();
    if (b >= bins) b = bins - 1;
    counts[b] += 1;
  }
  for (unsigned b = 0; b < bins; ++b) {
    mpq_class blo = lo + width * static_cast<long>(b);
    mpq_class bhi = (b + 1 == bins) ? hi : mpq_class(lo + width * static_cast<long>(b + 1));
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%zu\n", blo.get_d(), bhi.get_d(), counts[b]);
    out += buf;
  }
  return out;
}

Ball DistributionTable::table_moment(unsigned order) const {
  if (values.empty()) fail(Errc::empty_population, "empty table");
  mpfr_prec_t prec = values.front().precision();
  Ball acc = Ball::exact_zero(prec);
  for (const Ball& v : values) acc += v.pow_ui(order);
  return acc.mul_mpq(make_mpq(1, mpz_class(static_cast<unsigned long>(values.size()))));
}

DistributionTable empirical_cdf(unsigned long q, unsigned k, const PrecisionContext& ctx) {
  const Parity parity = population_parity(k);
  const std::uint64_t pop = population_count(q, k);
  const mpfr_prec_t wp = ctx.precision_bits + 16;
  std::vector<Ball> weights = closed_form_weights(q, k, wp);

  std::vector<Ball> vals;
  vals.reserve(pop);
  ParityEnumerator en(q, parity);
  while (auto f = en.next()) vals.push_back(l_from_weights(*f, weights, wp).rounded(ctx.precision_bits));
  std::stable_sort(vals.begin(), vals.end(),
                   [](const Ball& a, const Ball& b) { return a.cmp_mid(b) < 0; });
  return DistributionTable{q, k, std::move(vals)};
}

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}
}  // namespace

MomentReport monte_carlo_moments(unsigned long q, unsigned k, unsigned order,
                                 std::uint64_t samples, std::uint64_t seed,
                                 const PrecisionContext& ctx) {
  if (k % 2 != 1) fail(Errc::parity_mismatch, "Monte Carlo covers odd k (iid sign) populations");
  if (q < 3 || q % 2 == 0) fail(Errc::invalid_modulus, "q must be odd and >= 3");
  if (samples < 1) fail(Errc::invalid_argument, "need at least one sample");

  const unsigned long r = (q - 1) / 2;
  std::vector<Ball> wb = closed_form_weights(q, k, ctx.precision_bits);
  std::vector<double> w(r);
  for (unsigned long a = 0; a < r; ++a) w[a] = wb[a].mid_double();

  // Fixed-size blocks, each with its own generator seeded from (seed, block);
  // partials are combined in block order, so any thread count reproduces the
  // same bytes.
  constexpr std::uint64_t kBlock = 4096;
  const std::uint64_t blocks = (samples + kBlock - 1) / kBlock;
  std::vector<double> block_sum(blocks, 0.0), block_sq(blocks, 0.0);
  parallel_ranges(blocks, [&](unsigned, std::uint64_t blo, std::uint64_t bhi) {
    for (std::uint64_t b = blo; b < bhi; ++b) {
      std::mt19937_64 gen(splitmix64(seed ^ (0x9E3779B97F4A7C15ull * (b + 1))));
      std::uint64_t lo = b * kBlock;
      std::uint64_t hi = std::min(samples, lo + kBlock);
      double bs = 0.0, bq = 0.0;
      std::uint64_t word = 0;
      unsigned avail = 0;
      for (std::uint64_t s = lo; s < hi; ++s) {
        double L = 0.0;
        for (unsigned long a = 0; a < r; ++a) {
          if (avail == 0) {
            word = gen();
            avail = 64;
          }
          L += (word & 1) ? w[a] : -w[a];
          word >>= 1;
          --avail;
        }
        double x = 1.0;
        for (unsigned e = 0; e < order; ++e) x *= L;
        bs += x;
        bq += x * x;
      }
      block_sum[b] = bs;
      block_sq[b] = bq;
    }
  });
  double total = 0.0, total_sq = 0.0;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    total += block_sum[b];
    total_sq += block_sq[b];
  }
  const double S = static_cast<double>(samples);
  double mean = total / S;
  double var = (samples > 1) ? std::max(0.0, (total_sq - total * total / S) / (S - 1.0)) : 0.0;

  MomentReport rep;
  rep.q = q;
  rep.k = k;
  rep.order = order;
  rep.method = MomentMethod::MonteCarlo;
  Ball v(ctx.precision_bits);
  mpfr_set_d(v.mid_mut(), mean, MPFR_RNDN);
  rep.value = std::move(v);
  rep.std_error = std::sqrt(var / S);
  rep.samples = samples;
  rep.seed = seed;
  return rep;
}

}  // namespace erdos
