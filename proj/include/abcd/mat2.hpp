#pragma once

#include <complex>

#include "abcd/errors.hpp"

namespace abcd {

// Default tolerance for |det - 1| checks on matrices that contracts
// require to be unimodular.
inline constexpr double kDetTol = 1e-9;

// Default tolerance for the | |trace| - 2 | trichotomy band.
inline constexpr double kClassTol = 1e-9;

// Real 2x2 ray-transfer matrix
//   | a11 a12 |
//   | a21 a22 |
// Entries are dimensionless except where an operation documents otherwise
// (a raw translation carries length in a12).
struct RayMatrix {
    double a11 = 1.0;
    double a12 = 0.0;
    double a21 = 0.0;
    double a22 = 1.0;
};

// Complex 2x2 matrix for the phase/boundary algebra of periodic stacks.
struct ComplexMatrix {
    std::complex<double> a11{1.0, 0.0};
    std::complex<double> a12{0.0, 0.0};
    std::complex<double> a21{0.0, 0.0};
    std::complex<double> a22{1.0, 0.0};
};

constexpr RayMatrix operator*(const RayMatrix& m1, const RayMatrix& m2) {
    return {m1.a11 * m2.a11 + m1.a12 * m2.a21, m1.a11 * m2.a12 + m1.a12 * m2.a22,
            m1.a21 * m2.a11 + m1.a22 * m2.a21, m1.a21 * m2.a12 + m1.a22 * m2.a22};
}

inline ComplexMatrix operator*(const ComplexMatrix& m1, const ComplexMatrix& m2) {
    return {m1.a11 * m2.a11 + m1.a12 * m2.a21, m1.a11 * m2.a12 + m1.a12 * m2.a22,
            m1.a21 * m2.a11 + m1.a22 * m2.a21, m1.a21 * m2.a12 + m1.a22 * m2.a22};
}

constexpr double det(const RayMatrix& m) { return m.a11 * m.a22 - m.a12 * m.a21; }
constexpr double trace(const RayMatrix& m) { return m.a11 + m.a22; }

inline std::complex<double> det(const ComplexMatrix& m) {
    return m.a11 * m.a22 - m.a12 * m.a21;
}
inline std::complex<double> trace(const ComplexMatrix& m) { return m.a11 + m.a22; }

double max_abs(const RayMatrix& m);
double max_abs(const ComplexMatrix& m);
double max_imag(const ComplexMatrix& m);

// Max-abs entrywise comparison.
bool approx_eq(const RayMatrix& m1, const RayMatrix& m2, double tol);
bool approx_eq(const ComplexMatrix& m1, const ComplexMatrix& m2, double tol);

bool is_unimodular(const RayMatrix& m, double det_tol = kDetTol);

// Throws SingularTransform when |det| < det_tol.
RayMatrix inverse(const RayMatrix& m, double det_tol = kDetTol);
ComplexMatrix inverse(const ComplexMatrix& m, double det_tol = kDetTol);

// t * m * t^-1. Preserves trace and determinant.
RayMatrix conjugate(const RayMatrix& m, const RayMatrix& t, double det_tol = kDetTol);
ComplexMatrix conjugate(const ComplexMatrix& m, const ComplexMatrix& t,
                        double det_tol = kDetTol);

ComplexMatrix to_complex(const RayMatrix& m);
RayMatrix real_part(const ComplexMatrix& m);

// Half-angle rotation: | cos(t/2) -sin(t/2) |
//                      | sin(t/2)  cos(t/2) |
RayMatrix rotation(double theta);

// Diagonal squeeze B(eta) = diag(e^{eta/2}, e^{-eta/2}).
RayMatrix squeeze_diag(double eta);

// Off-diagonal squeeze: | cosh(l/2) sinh(l/2) |
//                       | sinh(l/2) cosh(l/2) |
RayMatrix squeeze_offdiag(double lambda);

}  // namespace abcd
