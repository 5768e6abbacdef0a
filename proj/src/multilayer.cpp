#include "abcd/multilayer.hpp"

#include <cmath>
#include <complex>

#include "abcd/errors.hpp"

namespace abcd {

ComplexMatrix phase_matrix(double delta) {
    return {std::polar(1.0, -delta / 2.0), 0.0, 0.0, std::polar(1.0, delta / 2.0)};
}

ComplexMatrix boundary_matrix(double sigma) {
    const double ch = std::cosh(sigma / 2.0);
    const double sh = std::sinh(sigma / 2.0);
    return {ch, sh, sh, ch};
}

ComplexMatrix cycle_matrix(const LayerCycleSpec& spec) {
    const ComplexMatrix half2 = phase_matrix(spec.delta2 / 2.0);
    return half2 * boundary_matrix(spec.sigma) * phase_matrix(spec.delta1) *
           boundary_matrix(-spec.sigma) * half2;
}

ComplexMatrix similarity_c1() {
    const double s = 1.0 / std::sqrt(2.0);
    const std::complex<double> si{0.0, s};
    return {s, si, si, s};
}

ComplexMatrix similarity_c2() {
    const double s = 1.0 / std::sqrt(2.0);
    return {s, s, -s, s};
}

ComplexMatrix similarity_c() { return similarity_c2() * similarity_c1(); }

ComplexMatrix similarity_c_inverse() {
    // Unitary, so the inverse is the conjugate transpose.
    const ComplexMatrix c = similarity_c();
    return {std::conj(c.a11), std::conj(c.a21), std::conj(c.a12), std::conj(c.a22)};
}

RayMatrix real_chain(const LayerCycleSpec& spec) {
    const RayMatrix r2 = rotation(spec.delta2 / 2.0);
    return r2 * squeeze_diag(spec.sigma) * rotation(spec.delta1) *
           squeeze_diag(-spec.sigma) * r2;
}

RayMatrix real_chain_via_conjugation(const LayerCycleSpec& spec, double imag_tol) {
    const ComplexMatrix conjugated =
        similarity_c() * cycle_matrix(spec) * similarity_c_inverse();
    if (max_imag(conjugated) > imag_tol) {
        throw ResidualImaginary("conjugated cycle kept a visible imaginary part");
    }
    return real_part(conjugated);
}

BargmannParams chain_bargmann(const LayerCycleSpec& spec) {
    return bargmann_decompose(real_chain(spec));
}

CoreParams chain_wigner(const LayerCycleSpec& spec, double class_tol) {
    return extract_core_params(real_chain(spec), class_tol);
}

RayMatrix n_cycles(const LayerCycleSpec& spec, long n) {
    return compose_core(power(chain_wigner(spec), n));
}

}  // namespace abcd
