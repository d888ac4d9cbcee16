#pragma once

#include "spinor3/core.hpp"

/// The orientation-changing map between the two spinor fields. The map is
/// anti-linear: complex conjugation enters it explicitly, which is what
/// exchanges the two orientation characters. The pair (s, i sigma^2 s*)
/// realizes non-equivalent representations of the extended group.
namespace spinor3 {

/// eta1 = (xi1 - conj(xi2))/sqrt(2), eta2 = (conj(xi1) + xi2)/sqrt(2).
Spinor xi_to_eta(const Spinor& xi);

/// xi1 = (eta1 + conj(eta2))/sqrt(2), xi2 = (eta2 - conj(eta1))/sqrt(2).
Spinor eta_to_xi(const Spinor& eta);

}  // namespace spinor3
