#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace erdos {

enum class Parity { Odd, Even, Neither };

const char* parity_name(Parity p);

// A q-periodic sign assignment: values in {-1,+1} on residues 1..q-1, zero
// at q, summing to zero over a period (so exactly (q-1)/2 entries are +1).
// Only odd q >= 3 admit such functions.
class ErdosFunction {
 public:
  // values[i] is the value at residue i+1; validated on construction.
  ErdosFunction(unsigned long q, std::vector<std::int8_t> values);

  // Compact sign-string form, e.g. "+-0" for q = 3.
  static ErdosFunction parse(std::string_view signs);
  std::string to_string() const;

  unsigned long modulus() const { return q_; }
  // Value at residue a, 1 <= a <= q.
  int at(unsigned long a) const { return values_[a - 1]; }
  // Value at any positive integer n (periodic lookup).
  int value(unsigned long n) const {
    unsigned long r = n % q_;
    return values_[(r == 0 ? q_ : r) - 1];
  }
  const std::vector<std::int8_t>& values() const { return values_; }

  ErdosFunction negated() const;
  Parity parity() const;

  bool operator==(const ErdosFunction& o) const = default;

 private:
  unsigned long q_;
  std::vector<std::int8_t> values_;
};

}  // namespace erdos
