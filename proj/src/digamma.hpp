#pragma once

#include "ball.hpp"
#include "precision.hpp"

namespace erdos {

// Psi(a/q) for 1 <= a <= q via Gauss's closed form
//   Psi(a/q) = -gamma - log(2q) - (pi/2) cot(pi a/q)
//              + 2 sum_{0<j<q/2} cos(2 pi j a / q) log sin(pi j / q),
// with Psi(1) = -gamma for a = q.
Ball digamma_rational(unsigned long a, unsigned long q, const PrecisionContext& ctx);

}  // namespace erdos
