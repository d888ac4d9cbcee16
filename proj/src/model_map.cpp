#include "spinor3/model_map.hpp"

namespace spinor3 {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

Spinor xi_to_eta(const Spinor& xi) {
    return {(xi.c1 - std::conj(xi.c2)) * kInvSqrt2, (std::conj(xi.c1) + xi.c2) * kInvSqrt2};
}

Spinor eta_to_xi(const Spinor& eta) {
    return {(eta.c1 + std::conj(eta.c2)) * kInvSqrt2, (eta.c2 - std::conj(eta.c1)) * kInvSqrt2};
}

}  // namespace spinor3
