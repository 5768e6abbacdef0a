#include "abcd/core.hpp"

#include <cmath>
#include <numbers>

namespace abcd {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double scale_of(const RayMatrix& m) { return std::max(1.0, max_abs(m)); }

// Equi-diagonality check used by the extraction entry points.
bool is_equidiagonal(const RayMatrix& m) {
    return std::abs(m.a11 - m.a22) <= 1e-8 * scale_of(m);
}

// Wrap gamma so gamma/2 lands in (-pi, pi]. The core forms are 4*pi
// periodic in gamma, so this is a relabeling of the same matrix.
double wrap_elliptic_gamma(double gamma) {
    double half = std::remainder(gamma / 2.0, kTwoPi);
    if (half <= -std::numbers::pi) {
        half += kTwoPi;
    }
    return 2.0 * half;
}

}  // namespace

const char* to_string(TraceClass cls) {
    switch (cls) {
        case TraceClass::Elliptic: return "elliptic";
        case TraceClass::Parabolic: return "parabolic";
        case TraceClass::Hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

const char* to_string(ShearOrientation orientation) {
    return orientation == ShearOrientation::Upper ? "upper" : "lower";
}

TraceClass classify(const RayMatrix& m, double class_tol, double det_tol) {
    if (!is_unimodular(m, det_tol)) {
        throw NotUnimodular("classification requires |det - 1| <= det_tol");
    }
    const double t = std::abs(trace(m));
    if (t < 2.0 - class_tol) {
        return TraceClass::Elliptic;
    }
    if (t > 2.0 + class_tol) {
        return TraceClass::Hyperbolic;
    }
    return TraceClass::Parabolic;
}

Equidiagonalization equidiagonalize(const RayMatrix& m, double det_tol) {
    if (!is_unimodular(m, det_tol)) {
        throw NotUnimodular("equi-diagonalization requires |det - 1| <= det_tol");
    }
    const double diag_gap = m.a11 - m.a22;
    const double offdiag_sum = m.a12 + m.a21;
    if (std::abs(diag_gap) <= 1e-14 * scale_of(m)) {
        return {m, RayMatrix{}};
    }
    // With t = rotation(phi), the diagonal gap of t*m*t^-1 is
    // (a11 - a22) cos(phi) - (a12 + a21) sin(phi), which this phi zeroes.
    const double phi = std::atan2(diag_gap, offdiag_sum);
    const RayMatrix t = rotation(phi);
    return {conjugate(m, t), t};
}

CoreParams extract_core_params(const RayMatrix& core, double class_tol) {
    if (!is_equidiagonal(core)) {
        throw NotEquidiagonal("core parameter extraction requires equal diagonals");
    }
    const double p = 0.5 * (core.a11 + core.a22);
    const double b = core.a12;
    const double c = core.a21;
    const double t = std::abs(2.0 * p);

    CoreParams out;
    if (t < 2.0 - class_tol) {
        out.cls = TraceClass::Elliptic;
        out.sign = 1;
        const double product = -b * c;  // sin^2(gamma/2) when unimodular
        if (product <= 0.0) {
            throw InconsistentSigns(
                "elliptic trace with non-negative off-diagonal product");
        }
        const double s = std::copysign(std::sqrt(product), c);
        out.gamma = 2.0 * std::atan2(s, p);
        out.eta = 0.5 * std::log(-b / c);
    } else if (t > 2.0 + class_tol) {
        out.cls = TraceClass::Hyperbolic;
        out.sign = p >= 0.0 ? 1 : -1;
        const double product = b * c;  // sinh^2(gamma/2) when unimodular
        const double s = std::copysign(std::sqrt(std::max(product, 0.0)), out.sign * c);
        out.gamma = 2.0 * std::asinh(s);
        out.eta = 0.5 * std::log(b / c);
    } else {
        out.cls = TraceClass::Parabolic;
        out.sign = p >= 0.0 ? 1 : -1;
        out.eta = 0.0;
        if (std::abs(c) <= std::abs(b)) {
            out.orientation = ShearOrientation::Upper;
            out.gamma = -out.sign * b;
        } else {
            out.orientation = ShearOrientation::Lower;
            out.gamma = -out.sign * c;
        }
    }
    return out;
}

RayMatrix compose_core(const CoreParams& p) {
    const double sg = static_cast<double>(p.sign);
    switch (p.cls) {
        case TraceClass::Elliptic: {
            const double c = std::cos(p.gamma / 2.0);
            const double s = std::sin(p.gamma / 2.0);
            const double e = std::exp(p.eta);
            return {sg * c, sg * -e * s, sg * s / e, sg * c};
        }
        case TraceClass::Hyperbolic: {
            const double ch = std::cosh(p.gamma / 2.0);
            const double sh = std::sinh(p.gamma / 2.0);
            const double e = std::exp(p.eta);
            return {sg * ch, sg * e * sh, sg * sh / e, sg * ch};
        }
        case TraceClass::Parabolic:
            if (p.orientation == ShearOrientation::Upper) {
                return {sg, sg * -p.gamma, 0.0, sg};
            }
            return {sg, 0.0, sg * -p.gamma, sg};
    }
    return RayMatrix{};
}

CoreParams canonicalize(const CoreParams& p) {
    if (p.cls != TraceClass::Elliptic) {
        return p;
    }
    CoreParams q = p;
    if (q.sign < 0) {
        // sign * M(gamma) == M(gamma + 2*pi) on the elliptic sheet
        q.gamma += kTwoPi;
        q.sign = 1;
    }
    q.gamma = wrap_elliptic_gamma(q.gamma);
    return q;
}

CoreFromGenerators core_from_xy(double x, double y) {
    // Generator G = [[0, -(x+y)], [x-y, 0]] / 2, with G^2 = -(x^2-y^2)/4 * I.
    const double g12 = -(x + y) / 2.0;
    const double g21 = (x - y) / 2.0;
    const double disc = (x - y) * (x + y);

    CoreFromGenerators out;
    if (disc > 0.0) {
        const double gamma = std::sqrt(disc);
        const double c = std::cos(gamma / 2.0);
        const double k = std::sin(gamma / 2.0) / (gamma / 2.0);
        out.matrix = {c, k * g12, k * g21, c};
        out.params.cls = TraceClass::Elliptic;
        out.params.sign = 1;
        out.params.gamma = std::copysign(gamma, x - y);
        out.params.eta = 0.5 * std::log((x + y) / (x - y));
        out.params = canonicalize(out.params);
    } else if (disc < 0.0) {
        const double gamma = std::sqrt(-disc);
        const double c = std::cosh(gamma / 2.0);
        const double k = std::sinh(gamma / 2.0) / (gamma / 2.0);
        out.matrix = {c, k * g12, k * g21, c};
        out.params.cls = TraceClass::Hyperbolic;
        out.params.sign = 1;
        out.params.gamma = std::copysign(gamma, x - y);
        out.params.eta = 0.5 * std::log(-(x + y) / (x - y));
    } else {
        // Nilpotent exponent: exp(G) = I + G, a pure shear.
        out.matrix = {1.0, g12, g21, 1.0};
        out.params.cls = TraceClass::Parabolic;
        out.params.sign = 1;
        if (g21 == 0.0) {
            out.params.orientation = ShearOrientation::Upper;
            out.params.gamma = -g12;  // equals x when x == y
        } else {
            out.params.orientation = ShearOrientation::Lower;
            out.params.gamma = -g21;  // equals -x when x == -y
        }
    }
    return out;
}

}  // namespace abcd
