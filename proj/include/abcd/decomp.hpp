#pragma once

#include <variant>

#include "abcd/core.hpp"

namespace abcd {

struct RotationMiddle {
    double theta = 0.0;
};
struct SqueezeMiddle {
    double lambda = 0.0;
};
struct ShearMiddle {
    double gamma = 0.0;
    ShearOrientation orientation = ShearOrientation::Upper;
};

// Similarity factorization of a core matrix:
//   sign * B(eta) * middle * B(-eta)
// with a pure rotation middle for the elliptic class and a pure
// off-diagonal squeeze for the hyperbolic class. The parabolic shear has no
// such factorization and is carried through unchanged with eta = 0.
struct WignerFactors {
    double eta = 0.0;
    int sign = 1;
    std::variant<RotationMiddle, SqueezeMiddle, ShearMiddle> middle;
};

WignerFactors wigner_decompose(const CoreParams& p);

RayMatrix middle_matrix(const WignerFactors& w);

// Multiply the factors back out: sign * B(eta) * middle * B(-eta).
RayMatrix compose_wigner(const WignerFactors& w);

// Rotation-squeeze-rotation parameters: R(alpha) S(-2 chi) R(alpha).
// Unlike the Wigner form this is not a similarity transformation.
struct BargmannParams {
    double alpha = 0.0;
    double chi = 0.0;
};

// Closed form of R(alpha) S(-2 chi) R(alpha):
//   |  cosh(chi) cos(alpha)                -sinh(chi) - cosh(chi) sin(alpha) |
//   | -sinh(chi) + cosh(chi) sin(alpha)     cosh(chi) cos(alpha)             |
RayMatrix compose_bargmann(const BargmannParams& b);

// Invert the closed form. Total on equi-diagonal unimodular matrices of
// every trace class:
//   sinh(chi) = -(a12 + a21)/2,  alpha = atan2((a21 - a12)/2, a11).
// Throws NotEquidiagonal.
BargmannParams bargmann_decompose(const RayMatrix& core);

// Convert Bargmann parameters to core parameters by composing the closed
// form and extracting. Total across all trace classes.
CoreParams bargmann_to_wigner(const BargmannParams& b, double class_tol = kClassTol);

// Closed-form n-th power: gamma -> n * gamma within the same class, the
// elliptic result wrapped back onto the canonical sheet. O(1) in n.
CoreParams power(const CoreParams& p, long n);

}  // namespace abcd
