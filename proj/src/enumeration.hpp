#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "erdos_function.hpp"

namespace erdos {

// |E_q| = C(q-1, (q-1)/2).
mpz_class erdos_count(unsigned long q);
// |E_q^{odd}| = 2^{(q-1)/2};  |E_q^{even}| = C(r, r/2) when r = (q-1)/2 is
// even, else 0.
mpz_class erdos_parity_count(unsigned long q, Parity p);

// Deterministic streams over E_q and its parity subsets, with rank/unrank so
// the range [0, count) can be split into disjoint chunks for parallel scans.
//
// Orders (documented, stable):
//  - full E_q: lexicographic over the ascending tuples of +1 positions;
//  - odd parity: rank mask 0..2^r-1, bit j of the mask set <=> f(j+1) = +1;
//  - even parity: lexicographic over +1 positions within 1..r.
class ErdosEnumerator {
 public:
  // Full E_q over ranks [lo, hi); hi = count when omitted.
  explicit ErdosEnumerator(unsigned long q);
  ErdosEnumerator(unsigned long q, std::uint64_t lo, std::uint64_t hi);

  std::optional<ErdosFunction> next();
  std::uint64_t count() const { return hi_; }

  static std::uint64_t count_u64(unsigned long q);
  static ErdosFunction unrank(unsigned long q, std::uint64_t rank);
  static std::uint64_t rank(const ErdosFunction& f);

 private:
  unsigned long q_;
  std::uint64_t next_rank_, hi_;
  std::vector<unsigned long> positions_;  // current +1 positions (1-based), ascending
};

class ParityEnumerator {
 public:
  ParityEnumerator(unsigned long q, Parity p);
  ParityEnumerator(unsigned long q, Parity p, std::uint64_t lo, std::uint64_t hi);

  std::optional<ErdosFunction> next();
  std::uint64_t count() const { return hi_; }

  static std::uint64_t count_u64(unsigned long q, Parity p);
  static ErdosFunction unrank(unsigned long q, Parity p, std::uint64_t rank);

 private:
  unsigned long q_;
  Parity parity_;
  std::uint64_t next_rank_, hi_;
};

// Residues 1 <= a < q with gcd(a, q) != 1, ascending.
std::vector<unsigned long> nonunit_residues(unsigned long q);

struct EquivalenceClass {
  std::vector<std::int8_t> key;  // signs on nonunit_residues(q), in order
  mpz_class size;
};

// Exact partition of E_q by restriction to the non-coprime residues,
// computed by full enumeration (guarded).  Classes sorted by key.
std::vector<EquivalenceClass> equivalence_classes(unsigned long q, unsigned long guard_q = 17);

// Class count via the feasibility rule: a +-1 pattern on N_q with k ones is
// realized iff 0 <= (q-1)/2 - k <= phi(q).
mpz_class equivalence_class_count_rule(unsigned long q);

// The class count claimed in the source analysis (2^{n_q} when r >= n_q,
// sum_{k>=n_q-r} C(n_q, k) otherwise, n_q = (q-1-phi(q))/2); kept for
// comparison reports; disagrees with exact enumeration already at q = 9.
mpz_class paper_class_count(unsigned long q);

// Runs fn over [0, total) split into near-equal chunks across the
// ERDOS_THREADS budget; fn(chunk_index, lo, hi).  Caller combines per-chunk
// results in chunk order for deterministic output.
void parallel_ranges(std::uint64_t total,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn);
unsigned parallel_chunk_count(std::uint64_t total);

}  // namespace erdos
