#include "abcd/cavity.hpp"

#include <cmath>

#include "abcd/decomp.hpp"
#include "abcd/errors.hpp"

namespace abcd {

namespace {

void require_stable(const CavitySpec& spec) {
    if (spec.d <= 0.0) {
        throw NonPositiveSeparation("mirror separation must be positive");
    }
    if (!is_stable(spec)) {
        throw UnstableCavity("separation must stay below twice the mirror radius");
    }
}

}  // namespace

RayMatrix mirror_matrix(double r) {
    if (r == 0.0) {
        throw ZeroRadius("mirror curvature radius must be nonzero");
    }
    return {1.0, 0.0, -2.0 / r, 1.0};
}

RayMatrix translation_matrix(double d) { return {1.0, d, 0.0, 1.0}; }

RayMatrix round_trip(const CavitySpec& spec) {
    const RayMatrix m = mirror_matrix(spec.r);
    const RayMatrix t = translation_matrix(spec.d);
    return m * t * m * t;
}

CavityFactorization cavity_factorize(const CavitySpec& spec) {
    if (spec.d <= 0.0) {
        throw NonPositiveSeparation("mirror separation must be positive");
    }
    if (spec.r == 0.0) {
        throw ZeroRadius("mirror curvature radius must be nonzero");
    }
    // unit_transform = translation(-d/2) * diag(sqrt(d), 1/sqrt(d)).
    const double rd = std::sqrt(spec.d);
    const RayMatrix e{rd, -rd / 2.0, 0.0, 1.0 / rd};
    const double g = 1.0 - spec.d / spec.r;
    const RayMatrix c{g, 1.0 - spec.d / (2.0 * spec.r), -2.0 * spec.d / spec.r, g};
    return {e, c};
}

CoreParams cavity_core(const CavitySpec& spec) {
    require_stable(spec);
    CoreParams p;
    p.cls = TraceClass::Elliptic;
    p.sign = 1;
    p.gamma = -2.0 * std::acos(1.0 - spec.d / spec.r);
    p.eta = 0.5 * std::log((2.0 * spec.r - spec.d) / (4.0 * spec.d));
    return p;
}

CavityClosedForm cavity_closed_form(const CavitySpec& spec) {
    const CoreParams p = cavity_core(spec);
    return {-p.gamma, p.eta};
}

bool is_stable(const CavitySpec& spec) { return spec.d > 0.0 && spec.d < 2.0 * spec.r; }

RayMatrix n_round_trips(const CavitySpec& spec, long n) {
    const CoreParams half = cavity_core(spec);
    const RayMatrix cn = compose_core(power(half, 2 * n));
    const double rd = std::sqrt(spec.d);
    const RayMatrix e{rd, -rd / 2.0, 0.0, 1.0 / rd};
    const RayMatrix e_inv{1.0 / rd, rd / 2.0, 0.0, rd};
    return e * cn * e_inv;
}

}  // namespace abcd
