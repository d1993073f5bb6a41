#include "partitions.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "functions.hpp"
#include "rational_util.hpp"
#include "support.hpp"

namespace erdos {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) fail(Errc::invalid_argument, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      fail(Errc::invalid_argument, "partition parts must be non-increasing");
    sum_ += parts_[i];
  }
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (unsigned part = std::min(remaining, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n == 0 ? 1 : n);
  return out;
}

mpz_class partition_count(unsigned n) {
  static std::mutex mu;
  static std::vector<mpz_class> cache{mpz_class(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    unsigned v = static_cast<unsigned>(cache.size());
    mpz_class acc(0);
    for (unsigned k = 1;; ++k) {
      unsigned long g1 = static_cast<unsigned long>(k) * (3 * k - 1) / 2;
      unsigned long g2 = static_cast<unsigned long>(k) * (3 * k + 1) / 2;
      if (g1 > v) break;
      int sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * cache[v - g1];
      if (g2 <= v) acc += sign * cache[v - g2];
    }
    cache.push_back(acc);
  }
  return cache[n];
}

Ball hardy_ramanujan_estimate(unsigned n, const PrecisionContext& ctx) {
  if (n < 1) fail(Errc::invalid_argument, "estimate requires n >= 1");
  mpfr_prec_t wp = ctx.precision_bits + 16;
  Ball arg = sqrt_ball(Ball::from_mpq(make_mpq(2 * static_cast<long>(n), 3), wp)) * pi_ball(wp);
  Ball denom = sqrt_ball(Ball::from_long(3, wp)).mul_mpq(mpq_class(4 * static_cast<long>(n)));
  return (exp_ball(arg) / denom).rounded(ctx.precision_bits);
}

std::map<Partition, mpz_class> merge_table(const Partition& lambda) {
  // Walk every set partition of the m labelled parts (restricted-growth
  // recursion) and bucket by the sorted block-sum multiset.
  const auto& parts = lambda.parts();
  const unsigned m = lambda.part_count();
  std::map<Partition, mpz_class> table;
  std::vector<unsigned> block_sums;
  std::function<void(unsigned)> rec = [&](unsigned idx) {
    if (idx == m) {
      std::vector<unsigned> sums(block_sums);
      std::sort(sums.begin(), sums.end(), std::greater<unsigned>());
      table[Partition(sums)] += 1;
      return;
    }
    for (size_t b = 0; b < block_sums.size(); ++b) {
      block_sums[b] += parts[idx];
      rec(idx + 1);
      block_sums[b] -= parts[idx];
    }
    block_sums.push_back(parts[idx]);
    rec(idx + 1);
    block_sums.pop_back();
  };
  rec(0);
  return table;
}

mpz_class merge_count(const Partition& lambda, const Partition& eta) {
  if (lambda.sum() != eta.sum()) fail(Errc::size_mismatch, "partitions must have equal sums");
  auto table = merge_table(lambda);
  auto it = table.find(eta);
  return it == table.end() ? mpz_class(0) : it->second;
}

mpz_class block_multiplicity(const Partition& lambda) {
  const unsigned n = lambda.sum();
  mpz_class denom(1);
  unsigned run = 1;
  const auto& parts = lambda.parts();
  for (size_t i = 0; i < parts.size(); ++i) {
    denom *= factorial(2 * parts[i]);
    if (i + 1 < parts.size() && parts[i + 1] == parts[i]) {
      ++run;
    } else {
      denom *= factorial(run);
      run = 1;
    }
  }
  return factorial(2 * n) / denom;
}

}  // namespace erdos
