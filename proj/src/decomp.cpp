#include "abcd/decomp.hpp"

#include <cmath>
#include <stdexcept>

#include "abcd/errors.hpp"

namespace abcd {

WignerFactors wigner_decompose(const CoreParams& p) {
    WignerFactors w;
    w.eta = p.eta;
    w.sign = p.sign;
    switch (p.cls) {
        case TraceClass::Elliptic:
            w.middle = RotationMiddle{p.gamma};
            break;
        case TraceClass::Hyperbolic:
            w.middle = SqueezeMiddle{p.gamma};
            break;
        case TraceClass::Parabolic:
            w.eta = 0.0;
            w.middle = ShearMiddle{p.gamma, p.orientation};
            break;
    }
    return w;
}

RayMatrix middle_matrix(const WignerFactors& w) {
    struct Visitor {
        RayMatrix operator()(const RotationMiddle& m) const { return rotation(m.theta); }
        RayMatrix operator()(const SqueezeMiddle& m) const { return squeeze_offdiag(m.lambda); }
        RayMatrix operator()(const ShearMiddle& m) const {
            if (m.orientation == ShearOrientation::Upper) {
                return {1.0, -m.gamma, 0.0, 1.0};
            }
            return {1.0, 0.0, -m.gamma, 1.0};
        }
    };
    return std::visit(Visitor{}, w.middle);
}

RayMatrix compose_wigner(const WignerFactors& w) {
    // B(eta) m B(-eta) scales the off-diagonal entries by e^{+-eta}.
    const RayMatrix m = middle_matrix(w);
    const double e = std::exp(w.eta);
    const double s = static_cast<double>(w.sign);
    return {s * m.a11, s * m.a12 * e, s * m.a21 / e, s * m.a22};
}

RayMatrix compose_bargmann(const BargmannParams& b) {
    const double ch = std::cosh(b.chi);
    const double sh = std::sinh(b.chi);
    const double c = std::cos(b.alpha);
    const double s = std::sin(b.alpha);
    return {ch * c, -sh - ch * s, -sh + ch * s, ch * c};
}

BargmannParams bargmann_decompose(const RayMatrix& core) {
    const double scale = std::max(1.0, max_abs(core));
    if (std::abs(core.a11 - core.a22) > 1e-8 * scale) {
        throw NotEquidiagonal("rotation-squeeze-rotation extraction requires equal diagonals");
    }
    // a12 + a21 = -2 sinh(chi); (a21 - a12)/2 and a11 share the cosh(chi)
    // factor, so atan2 recovers alpha on the full circle.
    BargmannParams b;
    b.chi = std::asinh(-0.5 * (core.a12 + core.a21));
    b.alpha = std::atan2(0.5 * (core.a21 - core.a12), core.a11);
    return b;
}

CoreParams bargmann_to_wigner(const BargmannParams& b, double class_tol) {
    return extract_core_params(compose_bargmann(b), class_tol);
}

CoreParams power(const CoreParams& p, long n) {
    if (n < 1) {
        throw std::invalid_argument("power exponent must be a positive integer");
    }
    CoreParams q = canonicalize(p);
    q.gamma *= static_cast<double>(n);
    if (q.cls == TraceClass::Elliptic) {
        return canonicalize(q);
    }
    // (-M)^n alternates sign; gamma adds because the factors commute.
    q.sign = (q.sign < 0 && n % 2 != 0) ? -1 : 1;
    return q;
}

}  // namespace abcd
