#include "serialize.hpp"

#include <mpfr.h>

#include "rational_util.hpp"

namespace erdos {

std::string mpq_decimal(const mpq_class& v, int digits) {
  mpfr_t x;
  mpfr_init2(x, 128);
  mpfr_set_q(x, v.get_mpq_t(), MPFR_RNDN);
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re", digits, x);
  std::string out(s);
  mpfr_free_str(s);
  mpfr_clear(x);
  return out;
}

std::string density_csv(const DensityReport& rep) {
  std::string out = "x,numerator,denominator,ratio\n";
  for (const DensityRow& row : rep.rows) {
    out += std::to_string(row.x) + "," + mpz_to_string(row.numerator) + "," +
           mpz_to_string(row.denominator) + "," + mpq_decimal(row.ratio) + "\n";
  }
  return out;
}

}  // namespace erdos
