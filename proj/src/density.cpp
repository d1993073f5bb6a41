#include "density.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "enumeration.hpp"
#include "erdos_function.hpp"
#include "functions.hpp"
#include "lseries.hpp"
#include "rational_util.hpp"
#include "support.hpp"

namespace erdos {

namespace {

struct ScanOutcome {
  Ball value;  // final certified (or last attempted) L(1,f)
  bool certified;
  long bits_used;
};

// Evaluate L(1,f) via digamma tables shared across the scan, escalating
// precision per function until certified nonzero or the cap is reached.
class VanishingScanner {
 public:
  VanishingScanner(unsigned long q, const PrecisionContext& ctx, long max_bits)
      : q_(q), base_bits_(ctx.precision_bits), max_bits_(max_bits), ctx_(ctx) {}

  ScanOutcome evaluate(const ErdosFunction& f) {
    long bits = base_bits_;
    for (;;) {
      PrecisionContext c(bits, ctx_.max_terms);
      Ball v = l1_digamma_with_table(f, table_for(bits), c);
      if (certify_nonzero(v).certified) return ScanOutcome{std::move(v), true, bits};
      if (bits >= max_bits_) return ScanOutcome{std::move(v), false, bits};
      bits = std::min(max_bits_, bits * 2);
    }
  }

 private:
  const std::vector<Ball>& table_for(long bits) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tables_.find(bits);
    if (it == tables_.end()) {
      PrecisionContext c(bits, ctx_.max_terms);
      it = tables_.emplace(bits, digamma_table(q_, c)).first;
    }
    return it->second;
  }

  unsigned long q_;
  long base_bits_, max_bits_;
  PrecisionContext ctx_;
  std::mutex mu_;
  std::map<long, std::vector<Ball>> tables_;
};

void check_guard(unsigned long q, unsigned long guard_q) {
  if (q > guard_q) fail(Errc::population_too_large, "q beyond the enumeration guard");
}

}  // namespace

VerificationRecord count_vanishing(unsigned long q, const PrecisionContext& ctx,
                                   unsigned long guard_q, long max_bits) {
  check_guard(q, guard_q);
  const std::uint64_t pop = ErdosEnumerator::count_u64(q);
  VanishingScanner scanner(q, ctx, max_bits);

  struct ChunkResult {
    Ball min_abs{64};
    bool has_min = false;
    std::uint64_t undecided = 0;
    long bits = 0;
  };
  const unsigned chunks = parallel_chunk_count(pop);
  std::vector<ChunkResult> partial(std::max(1u, chunks));
  parallel_ranges(pop, [&](unsigned chunk, std::uint64_t lo, std::uint64_t hi) {
    ChunkResult res;
    ErdosEnumerator en(q, lo, hi);
    while (auto f = en.next()) {
      ScanOutcome out = scanner.evaluate(*f);
      res.bits = std::max(res.bits, out.bits_used);
      if (!out.certified) res.undecided += 1;
      Ball a = out.value.abs();
      if (!res.has_min || a.cmp_mid(res.min_abs) < 0) {
        res.min_abs = a;
        res.has_min = true;
      }
    }
    partial[chunk] = std::move(res);
  });

  VerificationRecord rec;
  rec.q = q;
  rec.population = erdos_count(q);
  rec.final_precision_bits = ctx.precision_bits;
  bool has_min = false;
  for (const ChunkResult& r : partial) {
    rec.undecided_count += r.undecided;
    rec.final_precision_bits = std::max(rec.final_precision_bits, r.bits);
    if (r.has_min && (!has_min || r.min_abs.cmp_mid(rec.min_abs_l) < 0)) {
      rec.min_abs_l = r.min_abs;
      has_min = true;
    }
  }
  return rec;
}

std::vector<ClassZeroReport> class_zero_proposition_check(unsigned long q,
                                                          const PrecisionContext& ctx,
                                                          unsigned long guard_q, long max_bits) {
  check_guard(q, guard_q);
  VanishingScanner scanner(q, ctx, max_bits);
  std::vector<unsigned long> nq = nonunit_residues(q);

  std::map<std::string, ClassZeroReport> classes;
  ErdosEnumerator en(q);
  while (auto f = en.next()) {
    std::string key;
    key.reserve(nq.size());
    for (unsigned long a : nq) key.push_back(f->at(a) > 0 ? '+' : '-');
    ClassZeroReport& rep = classes[key];
    rep.key = key;
    rep.class_size += 1;
    ScanOutcome out = scanner.evaluate(*f);
    if (!out.certified) rep.undecided_count += 1;
    // certified zeros are impossible by construction; the count stays 0
  }
  std::vector<ClassZeroReport> out;
  out.reserve(classes.size());
  for (auto& [key, rep] : classes) {
    if (rep.certified_zero_count > 1)
      fail(Errc::internal, "more than one zero in an equivalence class");
    out.push_back(std::move(rep));
  }
  return out;
}

mpz_class vanishing_bound(unsigned long q) {
  if (q < 3 || q % 2 == 0) fail(Errc::invalid_modulus, "modulus must be odd and >= 3");
  mpz_class b;
  mpz_ui_pow_ui(b.get_mpz_t(), 2, q - 1 - euler_totient(q));
  return b;
}

CentralBinomialRecord central_binomial_lower(unsigned long r, const PrecisionContext& ctx) {
  if (r < 1) fail(Errc::invalid_argument, "r >= 1 required");
  const mpfr_prec_t wp = ctx.precision_bits + 16;
  CentralBinomialRecord rec;
  rec.exact = binomial(2 * r, r);
  Ball e2 = exp_ball(Ball::from_long(2, wp));
  Ball denom = e2 * sqrt_ball(pi_ball(wp).mul_mpq(mpq_class(static_cast<long>(r))));
  Ball num = Ball::from_mpz(pow_ui(2, 2 * r), wp);
  rec.bound = (num / denom).rounded(ctx.precision_bits);
  rec.holds = mpq_class(rec.exact) >= rec.bound.to_exact_interval().second;
  return rec;
}

FactorialSandwich robbins_sandwich(unsigned long n, const PrecisionContext& ctx) {
  if (n < 1) fail(Errc::invalid_argument, "n >= 1 required");
  const mpfr_prec_t wp = ctx.precision_bits + 16;
  FactorialSandwich s;
  s.exact = factorial(n);
  // sqrt(2 pi) n^{n+1/2} e^{-n} = sqrt(2 pi n) n^n e^{-n}
  Ball root = sqrt_ball(pi_ball(wp).mul_mpq(mpq_class(2 * static_cast<long>(n))));
  Ball npow = Ball::from_mpz(pow_ui(n, n), wp);
  Ball edec = exp_ball(Ball::from_long(-static_cast<long>(n), wp));
  s.lower = (root * npow * edec).rounded(ctx.precision_bits);
  s.upper = (s.lower * exp_ball(Ball::from_long(1, wp))).rounded(ctx.precision_bits);
  mpq_class x(s.exact);
  s.holds = x >= s.lower.to_exact_interval().second && x <= s.upper.to_exact_interval().first;
  return s;
}

DensityReport density_ratio(unsigned long x, DensityMode mode, const PrecisionContext& ctx,
                            unsigned long guard_q) {
  if (x < 3) fail(Errc::invalid_argument, "x >= 3 required");
  DensityReport rep;
  rep.x = x;
  rep.mode = mode;
  for (unsigned long q = 3; q <= x; q += 2) {
    rep.denominator += erdos_count(q);
    if (mode == DensityMode::Bound || q > guard_q) {
      rep.numerator += vanishing_bound(q);
    } else {
      VerificationRecord v = count_vanishing(q, ctx, guard_q);
      rep.numerator += static_cast<unsigned long>(v.certified_zero_count);
      if (v.undecided_count > 0)
        fail(Errc::precision_exhausted, "undecided values inside the exact range");
    }
    DensityRow row;
    row.x = q;
    row.numerator = rep.numerator;
    row.denominator = rep.denominator;
    row.ratio = make_mpq(rep.numerator, rep.denominator);
    rep.rows.push_back(std::move(row));
  }
  rep.ratio = make_mpq(rep.numerator, rep.denominator);
  return rep;
}

std::vector<std::pair<mpq_class, mpq_class>> stolz_ratio_diagnostic(
    const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  if (a.size() != b.size()) fail(Errc::length_mismatch, "sequences must have equal length");
  std::vector<std::pair<mpq_class, mpq_class>> out;
  out.reserve(a.size());
  mpq_class sa(0), sb(0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (b[i] <= 0) fail(Errc::invalid_argument, "b_n must be positive");
    sa += a[i];
    sb += b[i];
    out.emplace_back(a[i] / b[i], sa / sb);
  }
  return out;
}

}  // namespace erdos
