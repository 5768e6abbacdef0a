#pragma once

#include "abcd/core.hpp"
#include "abcd/decomp.hpp"

namespace abcd {

// One period of a two-medium stack: phase advances delta1 and delta2
// (radians) inside the media, rapidity sigma at each interface. sigma is
// fixed upstream by the reflection and transmission coefficients.
struct LayerCycleSpec {
    double delta1 = 0.0;
    double delta2 = 0.0;
    double sigma = 0.0;
};

// P(delta) = diag(e^{-i delta/2}, e^{+i delta/2}). Unitary, det = 1.
ComplexMatrix phase_matrix(double delta);

// Q(sigma) = | cosh(s/2) sinh(s/2) |  with Q(-sigma) = Q(sigma)^-1.
//            | sinh(s/2) cosh(s/2) |
ComplexMatrix boundary_matrix(double sigma);

// One full period starting mid-way through medium 2:
//   P(delta2/2) Q(sigma) P(delta1) Q(-sigma) P(delta2/2).
// Its trace is real even though the factors are complex.
ComplexMatrix cycle_matrix(const LayerCycleSpec& spec);

// C1 = (1/sqrt2) [[1, i], [i, 1]] turns phase matrices into rotations.
ComplexMatrix similarity_c1();

// C2 = (1/sqrt2) [[1, 1], [-1, 1]] turns boundary matrices into diagonal
// squeezes and commutes with rotations.
ComplexMatrix similarity_c2();

// The combined map C = C2 * C1 and its inverse (conjugate transpose).
ComplexMatrix similarity_c();
ComplexMatrix similarity_c_inverse();

// The period conjugated entry-by-entry into real matrices:
//   rotation(delta2/2) B(sigma) rotation(delta1) B(-sigma) rotation(delta2/2)
// with B = squeeze_diag. Always equi-diagonal: the outer rotations act
// symmetrically on the equi-diagonal middle.
RayMatrix real_chain(const LayerCycleSpec& spec);

// Same matrix obtained as C * cycle_matrix * C^-1, with a hard error if
// the conjugation leaves a visible imaginary part (an implementation
// fault, not a domain case).
RayMatrix real_chain_via_conjugation(const LayerCycleSpec& spec, double imag_tol = 1e-9);

// Rotation-squeeze-rotation parameters of the period. The outer rotation
// angle of the three middle factors gains delta2/2 from the flanking
// rotations.
BargmannParams chain_bargmann(const LayerCycleSpec& spec);

// Core parameters of the period, any trace class.
CoreParams chain_wigner(const LayerCycleSpec& spec, double class_tol = kClassTol);

// real_chain(spec)^n in O(1) through the core power. n must be >= 1.
RayMatrix n_cycles(const LayerCycleSpec& spec, long n);

}  // namespace abcd
