// metric.hpp: global-phase-invariant distance between 2x2 unitaries and the
// canonical phase representative.
#pragma once

#include "braidc/unitary2.hpp"

namespace braidc {

// epsilon(W, U) = sqrt(2 - |tr(W U^dag)|). Radicands within 1e-12 of zero
// snap to exactly zero (floating-point |tr| can land on either side of 2).
// Throws std::invalid_argument when an input is not unitary within 1e-8.
double distance(const Unitary2& w, const Unitary2& u);

// Divides by sqrt(det) to land in SU(2), then fixes the leftover +/- sign:
// the first entry in row-major order with modulus above 1e-12 gets a
// positive real part (positive imaginary part when its real part is within
// 1e-12 of zero). Distance to the input is zero.
Unitary2 phase_canonicalize(const Unitary2& u);

}  // namespace braidc
