#pragma once

#include "abcd/core.hpp"

namespace abcd {

// Two identical concave mirrors of curvature radius r facing each other at
// separation d, both in one length unit. Stable iff 0 < d < 2r.
struct CavitySpec {
    double d = 1.0;
    double r = 1.0;
};

// [[1, 0], [-2/r, 1]]: thin-mirror reflection. Throws ZeroRadius.
RayMatrix mirror_matrix(double r);

// [[1, d], [0, 1]]: free flight over distance d (a12 carries length units).
RayMatrix translation_matrix(double d);

// One full cycle, mirror * translation * mirror * translation.
RayMatrix round_trip(const CavitySpec& spec);

// round_trip = unit_transform * half_trip^2 * unit_transform^-1.
// half_trip is dimensionless and equi-diagonal; unit_transform carries
// sqrt(d) and absorbs the length unit of the translation entries.
struct CavityFactorization {
    RayMatrix unit_transform;
    RayMatrix half_trip;
};

// Throws NonPositiveSeparation (d <= 0) or ZeroRadius.
CavityFactorization cavity_factorize(const CavitySpec& spec);

// Core parameters of the dimensionless half-trip matrix, always elliptic
// on the stable range:
//   gamma = -2 acos(1 - d/r),  eta = ln((2r - d)/(4 d)) / 2.
// gamma is negative because the half-trip matrix has a positive upper-right
// entry; cavity_closed_form reports the positive-angle convention.
// Throws NonPositiveSeparation (d <= 0) or UnstableCavity (d >= 2r).
CoreParams cavity_core(const CavitySpec& spec);

// The same angle and rapidity with gamma measured positive:
//   cos(gamma/2) = 1 - d/r,  e^eta = sqrt((2r - d)/(4 d)).
// eta matches cavity_core exactly; gamma is its negation.
struct CavityClosedForm {
    double gamma = 0.0;
    double eta = 0.0;
};

CavityClosedForm cavity_closed_form(const CavitySpec& spec);

// True iff 0 < d < 2r. Boundary values count as unstable.
bool is_stable(const CavitySpec& spec);

// round_trip(spec)^n in O(1) via the factorization: the half-trip core is
// raised to the 2n-th power in closed form, then conjugated back.
// Throws for invalid or unstable specs; n must be >= 1.
RayMatrix n_round_trips(const CavitySpec& spec, long n);

}  // namespace abcd
