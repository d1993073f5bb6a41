#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "ball.hpp"
#include "precision.hpp"

namespace erdos {

// Integer partition, parts non-increasing.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);

  unsigned sum() const { return sum_; }
  unsigned part_count() const { return static_cast<unsigned>(parts_.size()); }
  const std::vector<unsigned>& parts() const { return parts_; }
  std::string to_string() const;  // "(2,1,1)"

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<unsigned> parts_;
  unsigned sum_ = 0;
};

// All partitions of n in reverse-lexicographic order: (n) first,
// (1,1,...,1) last.  partitions(0) yields the single empty partition.
std::vector<Partition> partitions(unsigned n);

// p(n) by the Euler pentagonal-number recurrence (memoized).
mpz_class partition_count(unsigned n);

// exp(pi sqrt(2n/3)) / (4 sqrt(3) n).
Ball hardy_ramanujan_estimate(unsigned n, const PrecisionContext& ctx);

// <lambda choose eta>: the number of set partitions of the labelled parts of
// lambda whose block sums form the multiset eta; 0 unless eta is reachable
// by merging, 1 for eta = lambda.
mpz_class merge_count(const Partition& lambda, const Partition& eta);

// All merge targets of lambda with multiplicities (includes lambda itself
// with count 1).
std::map<Partition, mpz_class> merge_table(const Partition& lambda);

// N(lambda): set partitions of {1..2n} with block-size multiset
// {2 lambda_1, ..., 2 lambda_m}: (2n)! / (prod (2 lambda_i)! * prod mult_s!).
mpz_class block_multiplicity(const Partition& lambda);

}  // namespace erdos
