#pragma once

#include <string>

#include "density.hpp"

namespace erdos {

// Plot-ready CSV: one cumulative row per odd q (columns x, numerator,
// denominator, ratio).
std::string density_csv(const DensityReport& rep);

// Decimal rendering of an exact rational (deterministic, via MPFR).
std::string mpq_decimal(const mpq_class& v, int digits = 12);

}  // namespace erdos
