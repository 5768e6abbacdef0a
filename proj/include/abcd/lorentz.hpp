#pragma once

#include <array>

namespace abcd {

// Minkowski four-vector in the fixed coordinate order (x, y, z, t),
// natural units. For momenta the components read (px, py, pz, E).
struct FourVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double t = 0.0;
};

double euclidean_norm(const FourVector& v);

// x^2 + y^2 + z^2 - t^2, the invariant the matrices below preserve.
double minkowski_norm(const FourVector& v);

// Row-major 4x4 acting on (x, y, z, t); defaults to the identity.
struct LorentzMatrix {
    std::array<std::array<double, 4>, 4> m{{{1.0, 0.0, 0.0, 0.0},
                                            {0.0, 1.0, 0.0, 0.0},
                                            {0.0, 0.0, 1.0, 0.0},
                                            {0.0, 0.0, 0.0, 1.0}}};
};

LorentzMatrix operator*(const LorentzMatrix& m1, const LorentzMatrix& m2);
FourVector operator*(const LorentzMatrix& m, const FourVector& v);

// The four generators carry FULL angles and rapidities here, unlike the
// half-angle 2x2 builders they correspond to.

// Rotation around the y axis, mixing x and z.
LorentzMatrix rot4_y(double theta);

// Boost along the x axis.
LorentzMatrix boost4_x(double lambda);

// Boost along the z axis.
LorentzMatrix boost4_z(double eta);

// Rotation around the z axis, mixing x and y.
LorentzMatrix rot4_z(double phi);

// B(eta) R(theta) B(-eta): rotates the rest frame of a particle moving
// along z, leaving its four-momentum fixed.
LorentzMatrix lift_wigner4(double eta, double theta);

// (0, 0, m sinh eta, m cosh eta). Throws NonPositiveMass.
FourVector four_momentum_massive(double m, double eta);

// The eta -> infinity limit of lift_wigner4: fixes the light-like
// momentum (0, 0, p, p) while shifting transverse components (a gauge
// transformation). One-parameter additive group in gamma.
LorentzMatrix gauge_limit_matrix(double gamma);

// True iff |M v - v| <= tol * |v| in the Euclidean norm.
bool is_little_group_element(const LorentzMatrix& m, const FourVector& v, double tol);

// Largest entry of M^T g M - g with g = diag(1, 1, 1, -1); zero for an
// exact Lorentz transformation.
double metric_residual(const LorentzMatrix& m);

}  // namespace abcd
