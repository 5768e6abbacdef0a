#pragma once

#include "abcd/mat2.hpp"

namespace abcd {

// Trichotomy on |trace| of a unimodular matrix: below 2, at 2, above 2.
enum class TraceClass { Elliptic, Parabolic, Hyperbolic };

const char* to_string(TraceClass cls);

// Which triangular shear realizes a parabolic core.
enum class ShearOrientation { Upper, Lower };

const char* to_string(ShearOrientation orientation);

// Two-parameter description of an equi-diagonal unimodular matrix.
//
// Elliptic:   sign * | cos(g/2)        -e^eta sin(g/2) |     sign is +1 and
//                    | e^-eta sin(g/2)  cos(g/2)       |     g/2 in (-pi, pi]
//
// Hyperbolic: sign * | cosh(g/2)        e^eta sinh(g/2) |
//                    | e^-eta sinh(g/2) cosh(g/2)       |
//
// Parabolic:  sign * | 1 -g |  (Upper)    sign * | 1  0 |  (Lower)
//                    | 0  1 |                    | -g 1 |
// eta is unused (zero) for the parabolic class.
struct CoreParams {
    TraceClass cls = TraceClass::Parabolic;
    int sign = 1;
    double gamma = 0.0;
    double eta = 0.0;
    ShearOrientation orientation = ShearOrientation::Upper;
};

// Classify by |trace|. The tolerance band around 2 resolves to Parabolic.
// Throws NotUnimodular when |det - 1| > det_tol.
TraceClass classify(const RayMatrix& m, double class_tol = kClassTol,
                    double det_tol = kDetTol);

struct Equidiagonalization {
    RayMatrix core;       // transform * m * transform^-1, equal diagonals
    RayMatrix transform;  // the rotation used
};

// Conjugate m by the rotation with angle atan2(a11 - a22, a12 + a21) so the
// two diagonal entries become equal. Trace and determinant are preserved.
// An input that is already equi-diagonal comes back unchanged with the
// identity transform.
Equidiagonalization equidiagonalize(const RayMatrix& m, double det_tol = kDetTol);

// Invert the core forms above. The input must be equi-diagonal; the class
// is decided by the trace. Throws NotEquidiagonal, and InconsistentSigns
// for an elliptic-trace input whose off-diagonal product is not negative
// (impossible for a genuinely unimodular matrix).
CoreParams extract_core_params(const RayMatrix& core, double class_tol = kClassTol);

// Forward evaluation of the core forms. Total; det = 1 by construction.
RayMatrix compose_core(const CoreParams& p);

// Reduce to the canonical representative: elliptic sign folded to +1 and
// gamma/2 wrapped into (-pi, pi]. Other classes are already canonical.
CoreParams canonicalize(const CoreParams& p);

struct CoreFromGenerators {
    RayMatrix matrix;   // exp( [[0, -(x+y)], [x-y, 0]] / 2 )
    CoreParams params;  // closed form for the same matrix
};

// One-expression generator of all three core forms. The discriminant
// x^2 - y^2 picks the class: positive gives elliptic with
// gamma = sgn(x-y) sqrt(x^2-y^2) and e^{2 eta} = (x+y)/(x-y); negative gives
// hyperbolic with gamma = sgn(x-y) sqrt(y^2-x^2) and
// e^{2 eta} = -(x+y)/(x-y); zero gives the shear with gamma = x (upper,
// x = y) or gamma = -x (lower, x = -y).
CoreFromGenerators core_from_xy(double x, double y);

}  // namespace abcd
