#include "enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "rational_util.hpp"
#include "support.hpp"

namespace erdos {

namespace {

void validate_modulus(unsigned long q) {
  if (q < 3 || q % 2 == 0) fail(Errc::invalid_modulus, "modulus must be odd and >= 3");
}

ErdosFunction from_plus_positions(unsigned long q, const std::vector<unsigned long>& pos) {
  std::vector<std::int8_t> vals(q, -1);
  vals[q - 1] = 0;
  for (unsigned long p : pos) vals[p - 1] = 1;
  return ErdosFunction(q, std::move(vals));
}

// Advance an ascending r-subset of {1..n} one step in lex order.
bool next_combination(std::vector<unsigned long>& pos, unsigned long n) {
  const size_t r = pos.size();
  size_t i = r;
  while (i > 0 && pos[i - 1] == n - (r - i)) --i;
  if (i == 0) return false;
  ++pos[i - 1];
  for (size_t j = i; j < r; ++j) pos[j] = pos[j - 1] + 1;
  return true;
}

std::vector<unsigned long> unrank_combination(unsigned long n, unsigned long r,
                                              std::uint64_t rank) {
  std::vector<unsigned long> pos(r);
  std::uint64_t idx = rank;
  unsigned long v = 0;  // 0-based candidate value
  for (unsigned long i = 0; i < r; ++i) {
    for (;;) {
      std::uint64_t block = binomial_u64(n - 1 - v, r - 1 - i);
      if (idx < block) break;
      idx -= block;
      ++v;
    }
    pos[i] = v + 1;
    ++v;
  }
  return pos;
}

std::uint64_t rank_combination(unsigned long n, const std::vector<unsigned long>& pos) {
  std::uint64_t rank = 0;
  const unsigned long r = static_cast<unsigned long>(pos.size());
  unsigned long prev = 0;  // 1-based, exclusive
  for (unsigned long i = 0; i < r; ++i) {
    for (unsigned long v = prev + 1; v < pos[i]; ++v) {
      rank += binomial_u64(n - v, r - 1 - i);
    }
    prev = pos[i];
  }
  return rank;
}

}  // namespace

mpz_class erdos_count(unsigned long q) {
  validate_modulus(q);
  return binomial(q - 1, (q - 1) / 2);
}

mpz_class erdos_parity_count(unsigned long q, Parity p) {
  validate_modulus(q);
  unsigned long r = (q - 1) / 2;
  switch (p) {
    case Parity::Odd: {
      mpz_class c;
      mpz_ui_pow_ui(c.get_mpz_t(), 2, r);
      return c;
    }
    case Parity::Even:
      return (r % 2 == 0) ? binomial(r, r / 2) : mpz_class(0);
    default:
      fail(Errc::invalid_argument, "parity filter must be odd or even");
  }
}

ErdosEnumerator::ErdosEnumerator(unsigned long q) : ErdosEnumerator(q, 0, count_u64(q)) {}

ErdosEnumerator::ErdosEnumerator(unsigned long q, std::uint64_t lo, std::uint64_t hi)
    : q_(q), next_rank_(lo), hi_(hi) {
  validate_modulus(q);
  std::uint64_t total = count_u64(q);
  if (hi_ > total || lo > hi_) fail(Errc::invalid_argument, "enumeration range out of bounds");
  if (next_rank_ < hi_) positions_ = unrank_combination(q - 1, (q - 1) / 2, next_rank_);
}

std::optional<ErdosFunction> ErdosEnumerator::next() {
  if (next_rank_ >= hi_) return std::nullopt;
  ErdosFunction f = from_plus_positions(q_, positions_);
  ++next_rank_;
  if (next_rank_ < hi_ && !next_combination(positions_, q_ - 1))
    fail(Errc::internal, "combination stream exhausted early");
  return f;
}

std::uint64_t ErdosEnumerator::count_u64(unsigned long q) {
  validate_modulus(q);
  return binomial_u64(q - 1, (q - 1) / 2);
}

ErdosFunction ErdosEnumerator::unrank(unsigned long q, std::uint64_t rank) {
  validate_modulus(q);
  if (rank >= count_u64(q)) fail(Errc::invalid_argument, "rank out of range");
  return from_plus_positions(q, unrank_combination(q - 1, (q - 1) / 2, rank));
}

std::uint64_t ErdosEnumerator::rank(const ErdosFunction& f) {
  std::vector<unsigned long> pos;
  for (unsigned long a = 1; a < f.modulus(); ++a)
    if (f.at(a) > 0) pos.push_back(a);
  return rank_combination(f.modulus() - 1, pos);
}

ParityEnumerator::ParityEnumerator(unsigned long q, Parity p)
    : ParityEnumerator(q, p, 0, count_u64(q, p)) {}

ParityEnumerator::ParityEnumerator(unsigned long q, Parity p, std::uint64_t lo, std::uint64_t hi)
    : q_(q), parity_(p), next_rank_(lo), hi_(hi) {
  validate_modulus(q);
  if (p == Parity::Neither) fail(Errc::invalid_argument, "parity filter must be odd or even");
  std::uint64_t total = count_u64(q, p);
  if (hi_ > total || lo > hi_) fail(Errc::invalid_argument, "enumeration range out of bounds");
}

std::optional<ErdosFunction> ParityEnumerator::next() {
  if (next_rank_ >= hi_) return std::nullopt;
  return unrank(q_, parity_, next_rank_++);
}

std::uint64_t ParityEnumerator::count_u64(unsigned long q, Parity p) {
  mpz_class c = erdos_parity_count(q, p);
  if (!c.fits_ulong_p()) fail(Errc::population_too_large, "parity population exceeds 64 bits");
  return static_cast<std::uint64_t>(c.get_ui());
}

ErdosFunction ParityEnumerator::unrank(unsigned long q, Parity p, std::uint64_t rank) {
  validate_modulus(q);
  unsigned long r = (q - 1) / 2;
  std::vector<std::int8_t> vals(q, 0);
  if (p == Parity::Odd) {
    if (rank >= (std::uint64_t{1} << r)) fail(Errc::invalid_argument, "rank out of range");
    for (unsigned long j = 0; j < r; ++j) {
      std::int8_t v = (rank >> j) & 1 ? 1 : -1;
      vals[j] = v;
      vals[q - j - 2] = static_cast<std::int8_t>(-v);  // f(q-a) = -f(a)
    }
  } else if (p == Parity::Even) {
    if (r % 2 != 0) fail(Errc::empty_population, "even parity is empty when (q-1)/2 is odd");
    if (rank >= count_u64(q, p)) fail(Errc::invalid_argument, "rank out of range");
    std::vector<unsigned long> pos = unrank_combination(r, r / 2, rank);
    for (unsigned long a = 1; a <= r; ++a) vals[a - 1] = -1;
    for (unsigned long pz : pos) vals[pz - 1] = 1;
    for (unsigned long a = 1; a <= r; ++a) vals[q - a - 1] = vals[a - 1];  // f(q-a) = f(a)
  } else {
    fail(Errc::invalid_argument, "parity filter must be odd or even");
  }
  return ErdosFunction(q, std::move(vals));
}

std::vector<unsigned long> nonunit_residues(unsigned long q) {
  validate_modulus(q);
  std::vector<unsigned long> out;
  for (unsigned long a = 1; a < q; ++a)
    if (std::gcd(a, q) != 1) out.push_back(a);
  return out;
}

std::vector<EquivalenceClass> equivalence_classes(unsigned long q, unsigned long guard_q) {
  validate_modulus(q);
  if (q > guard_q) fail(Errc::population_too_large, "equivalence scan beyond enumeration guard");
  std::vector<unsigned long> nq = nonunit_residues(q);
  std::map<std::vector<std::int8_t>, mpz_class> classes;
  ErdosEnumerator en(q);
  while (auto f = en.next()) {
    std::vector<std::int8_t> key;
    key.reserve(nq.size());
    for (unsigned long a : nq) key.push_back(static_cast<std::int8_t>(f->at(a)));
    classes[key] += 1;
  }
  std::vector<EquivalenceClass> out;
  out.reserve(classes.size());
  for (auto& [key, size] : classes) out.push_back(EquivalenceClass{key, size});
  return out;
}

mpz_class equivalence_class_count_rule(unsigned long q) {
  validate_modulus(q);
  unsigned long r = (q - 1) / 2;
  unsigned long phi = euler_totient(q);
  unsigned long nn = q - 1 - phi;  // |N_q|
  mpz_class count(0);
  for (unsigned long k = 0; k <= nn; ++k) {
    if (r >= k && r - k <= phi) count += binomial(nn, k);
  }
  return count;
}

mpz_class paper_class_count(unsigned long q) {
  validate_modulus(q);
  unsigned long r = (q - 1) / 2;
  unsigned long nq = (q - 1 - euler_totient(q)) / 2;
  if (r >= nq) {
    mpz_class c;
    mpz_ui_pow_ui(c.get_mpz_t(), 2, nq);
    return c;
  }
  mpz_class count(0);
  for (unsigned long k = nq - r; k <= nq; ++k) count += binomial(nq, k);
  return count;
}

unsigned parallel_chunk_count(std::uint64_t total) {
  if (total == 0) return 0;
  std::uint64_t budget = static_cast<std::uint64_t>(thread_budget());
  return static_cast<unsigned>(std::min<std::uint64_t>(budget, total));
}

void parallel_ranges(std::uint64_t total,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
  unsigned chunks = parallel_chunk_count(total);
  if (chunks <= 1) {
    if (total > 0) fn(0, 0, total);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  std::uint64_t base = total / chunks, extra = total % chunks, lo = 0;
  for (unsigned c = 0; c < chunks; ++c) {
    std::uint64_t hi = lo + base + (c < extra ? 1 : 0);
    workers.emplace_back([&, c, lo, hi]() {
      try {
        fn(c, lo, hi);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
    lo = hi;
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace erdos
