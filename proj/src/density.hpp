#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "ball.hpp"
#include "precision.hpp"

namespace erdos {

struct VerificationRecord {
  unsigned long q = 0;
  mpz_class population;
  Ball min_abs_l;                         // |L(1,f)| of the smallest-|L| function
  std::uint64_t certified_zero_count = 0; // always 0: zeros can never be certified
  std::uint64_t undecided_count = 0;
  long final_precision_bits = 0;
};

// Certified scan of L(1,f) over all of E_q via the digamma route, with
// precision escalation (doubling, capped) for any value left undecided.
// A persistent undecided is recorded, never swallowed: it would be the
// interesting outcome.
VerificationRecord count_vanishing(unsigned long q, const PrecisionContext& ctx,
                                   unsigned long guard_q = 17, long max_bits = 4096);

struct ClassZeroReport {
  std::string key;  // sign pattern on the non-coprime residues
  mpz_class class_size;
  std::uint64_t certified_zero_count = 0;
  std::uint64_t undecided_count = 0;
};

// Per-equivalence-class zero counts (at most one per class can ever occur;
// at verified q all are zero).
std::vector<ClassZeroReport> class_zero_proposition_check(unsigned long q,
                                                          const PrecisionContext& ctx,
                                                          unsigned long guard_q = 17,
                                                          long max_bits = 4096);

// 2^{q-1-phi(q)}, the vanishing-set bound.
mpz_class vanishing_bound(unsigned long q);

struct CentralBinomialRecord {
  mpz_class exact;  // C(2r, r)
  Ball bound;       // 2^{2r} / (e^2 sqrt(pi r))
  bool holds;       // exact >= bound, certified
};
CentralBinomialRecord central_binomial_lower(unsigned long r, const PrecisionContext& ctx);

struct FactorialSandwich {
  Ball lower;  // sqrt(2 pi) n^{n+1/2} e^{-n}
  mpz_class exact;
  Ball upper;  // e times the lower bound
  bool holds;
};
FactorialSandwich robbins_sandwich(unsigned long n, const PrecisionContext& ctx);

enum class DensityMode { ExactSmallQ, Bound };

struct DensityRow {
  unsigned long x;
  mpz_class numerator, denominator;
  mpq_class ratio;
};

struct DensityReport {
  unsigned long x = 0;
  DensityMode mode = DensityMode::Bound;
  mpz_class numerator, denominator;
  mpq_class ratio;
  std::vector<DensityRow> rows;  // cumulative, one per odd q <= x
};

DensityReport density_ratio(unsigned long x, DensityMode mode, const PrecisionContext& ctx,
                            unsigned long guard_q = 17);

// Term ratios a_n/b_n next to cumulative-sum ratios, illustrating the
// partial-sum limit lemma.
std::vector<std::pair<mpq_class, mpq_class>> stolz_ratio_diagnostic(
    const std::vector<mpq_class>& a, const std::vector<mpq_class>& b);

}  // namespace erdos
