#include "erdos_function.hpp"

#include "support.hpp"

namespace erdos {

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::Odd: return "odd";
    case Parity::Even: return "even";
    default: return "neither";
  }
}

ErdosFunction::ErdosFunction(unsigned long q, std::vector<std::int8_t> values)
    : q_(q), values_(std::move(values)) {
  if (q < 3 || q % 2 == 0) fail(Errc::invalid_modulus, "modulus must be odd and >= 3");
  if (values_.size() != q) fail(Errc::invalid_argument, "value vector length must equal q");
  if (values_[q - 1] != 0) fail(Errc::invalid_argument, "value at q must be 0");
  long sum = 0;
  for (unsigned long a = 0; a + 1 < q; ++a) {
    if (values_[a] != 1 && values_[a] != -1)
      fail(Errc::invalid_argument, "values off the modulus must be +-1");
    sum += values_[a];
  }
  if (sum != 0) fail(Errc::invalid_argument, "values must sum to zero over a period");
}

ErdosFunction ErdosFunction::parse(std::string_view signs) {
  std::vector<std::int8_t> vals;
  vals.reserve(signs.size());
  for (char c : signs) {
    switch (c) {
      case '+': vals.push_back(1); break;
      case '-': vals.push_back(-1); break;
      case '0': vals.push_back(0); break;
      default: fail(Errc::invalid_argument, "sign string may only contain '+', '-', '0'");
    }
  }
  const unsigned long q = static_cast<unsigned long>(vals.size());
  return ErdosFunction(q, std::move(vals));
}

std::string ErdosFunction::to_string() const {
  std::string s;
  s.reserve(q_);
  for (std::int8_t v : values_) s.push_back(v > 0 ? '+' : (v < 0 ? '-' : '0'));
  return s;
}

ErdosFunction ErdosFunction::negated() const {
  std::vector<std::int8_t> vals(values_);
  for (unsigned long a = 0; a + 1 < q_; ++a) vals[a] = static_cast<std::int8_t>(-vals[a]);
  return ErdosFunction(q_, std::move(vals));
}

Parity ErdosFunction::parity() const {
  bool odd = true, even = true;
  for (unsigned long a = 1; a < q_; ++a) {
    int va = at(a), vqa = at(q_ - a);
    if (vqa != -va) odd = false;
    if (vqa != va) even = false;
  }
  if (odd) return Parity::Odd;
  if (even) return Parity::Even;
  return Parity::Neither;
}

}  // namespace erdos
