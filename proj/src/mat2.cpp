#include "abcd/mat2.hpp"

#include <algorithm>
#include <cmath>

namespace abcd {

double max_abs(const RayMatrix& m) {
    return std::max({std::abs(m.a11), std::abs(m.a12), std::abs(m.a21), std::abs(m.a22)});
}

double max_abs(const ComplexMatrix& m) {
    return std::max({std::abs(m.a11), std::abs(m.a12), std::abs(m.a21), std::abs(m.a22)});
}

double max_imag(const ComplexMatrix& m) {
    return std::max({std::abs(m.a11.imag()), std::abs(m.a12.imag()),
                     std::abs(m.a21.imag()), std::abs(m.a22.imag())});
}

bool approx_eq(const RayMatrix& m1, const RayMatrix& m2, double tol) {
    return std::abs(m1.a11 - m2.a11) <= tol && std::abs(m1.a12 - m2.a12) <= tol &&
           std::abs(m1.a21 - m2.a21) <= tol && std::abs(m1.a22 - m2.a22) <= tol;
}

bool approx_eq(const ComplexMatrix& m1, const ComplexMatrix& m2, double tol) {
    return std::abs(m1.a11 - m2.a11) <= tol && std::abs(m1.a12 - m2.a12) <= tol &&
           std::abs(m1.a21 - m2.a21) <= tol && std::abs(m1.a22 - m2.a22) <= tol;
}

bool is_unimodular(const RayMatrix& m, double det_tol) {
    return std::abs(det(m) - 1.0) <= det_tol;
}

RayMatrix inverse(const RayMatrix& m, double det_tol) {
    const double d = det(m);
    if (std::abs(d) < det_tol) {
        throw SingularTransform("matrix determinant is below tolerance");
    }
    return {m.a22 / d, -m.a12 / d, -m.a21 / d, m.a11 / d};
}

ComplexMatrix inverse(const ComplexMatrix& m, double det_tol) {
    const std::complex<double> d = det(m);
    if (std::abs(d) < det_tol) {
        throw SingularTransform("matrix determinant is below tolerance");
    }
    return {m.a22 / d, -m.a12 / d, -m.a21 / d, m.a11 / d};
}

RayMatrix conjugate(const RayMatrix& m, const RayMatrix& t, double det_tol) {
    return t * m * inverse(t, det_tol);
}

ComplexMatrix conjugate(const ComplexMatrix& m, const ComplexMatrix& t, double det_tol) {
    return t * m * inverse(t, det_tol);
}

ComplexMatrix to_complex(const RayMatrix& m) {
    return {{m.a11, 0.0}, {m.a12, 0.0}, {m.a21, 0.0}, {m.a22, 0.0}};
}

RayMatrix real_part(const ComplexMatrix& m) {
    return {m.a11.real(), m.a12.real(), m.a21.real(), m.a22.real()};
}

RayMatrix rotation(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {c, -s, s, c};
}

RayMatrix squeeze_diag(double eta) {
    const double e = std::exp(eta / 2.0);
    return {e, 0.0, 0.0, 1.0 / e};
}

RayMatrix squeeze_offdiag(double lambda) {
    const double ch = std::cosh(lambda / 2.0);
    const double sh = std::sinh(lambda / 2.0);
    return {ch, sh, sh, ch};
}

}  // namespace abcd
