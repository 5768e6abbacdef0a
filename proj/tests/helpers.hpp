#pragma once

#include <array>
#include <cmath>
#include <random>

#include "abcd/core.hpp"
#include "abcd/lorentz.hpp"
#include "abcd/mat2.hpp"

namespace testutil {

// One fixed seed keeps every randomized check reproducible.
inline std::mt19937_64 make_rng(std::uint64_t salt = 0) {
    return std::mt19937_64{0x5eed2024u + salt};
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int coin_sign(std::mt19937_64& rng) {
    return std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? 1 : -1;
}

inline double max_diff(const abcd::RayMatrix& a, const abcd::RayMatrix& b) {
    return std::max(std::max(std::abs(a.a11 - b.a11), std::abs(a.a12 - b.a12)),
                    std::max(std::abs(a.a21 - b.a21), std::abs(a.a22 - b.a22)));
}

inline double max_diff(const abcd::ComplexMatrix& a, const abcd::ComplexMatrix& b) {
    return std::max(std::max(std::abs(a.a11 - b.a11), std::abs(a.a12 - b.a12)),
                    std::max(std::abs(a.a21 - b.a21), std::abs(a.a22 - b.a22)));
}

inline double max_diff(const abcd::LorentzMatrix& a, const abcd::LorentzMatrix& b) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            worst = std::max(worst, std::abs(a.m[i][j] - b.m[i][j]));
        }
    }
    return worst;
}

// Entrywise difference scaled by the magnitude of the reference matrix.
inline double rel_diff(const abcd::RayMatrix& got, const abcd::RayMatrix& want) {
    return max_diff(got, want) / std::max(1.0, abcd::max_abs(want));
}

// Random core parameters in canonical form. Elliptic and hyperbolic angles
// stay away from the |trace| = 2 band so the class survives a compose /
// extract round trip.
inline abcd::CoreParams random_core(std::mt19937_64& rng, abcd::TraceClass cls,
                                    double gamma_max = 3.0, double eta_max = 3.0) {
    constexpr double kGammaFloor = 2e-4;
    abcd::CoreParams p;
    p.cls = cls;
    switch (cls) {
        case abcd::TraceClass::Elliptic: {
            do {
                p.gamma = uniform(rng, -gamma_max, gamma_max);
            } while (std::abs(p.gamma) < kGammaFloor);
            p.sign = 1;
            p.eta = uniform(rng, -eta_max, eta_max);
            break;
        }
        case abcd::TraceClass::Hyperbolic: {
            do {
                p.gamma = uniform(rng, -gamma_max, gamma_max);
            } while (std::abs(p.gamma) < kGammaFloor);
            p.sign = coin_sign(rng);
            p.eta = uniform(rng, -eta_max, eta_max);
            break;
        }
        case abcd::TraceClass::Parabolic: {
            p.gamma = uniform(rng, -gamma_max, gamma_max);
            p.sign = coin_sign(rng);
            p.eta = 0.0;
            p.orientation = coin_sign(rng) > 0 ? abcd::ShearOrientation::Upper
                                               : abcd::ShearOrientation::Lower;
            break;
        }
    }
    return p;
}

// Generic unimodular matrix as rotation * squeeze * rotation.
inline abcd::RayMatrix random_unimodular(std::mt19937_64& rng, double eta_max = 2.0) {
    return abcd::rotation(uniform(rng, -6.28, 6.28)) *
           abcd::squeeze_diag(uniform(rng, -eta_max, eta_max)) *
           abcd::rotation(uniform(rng, -6.28, 6.28));
}

// Iterated-multiplication oracle for closed-form powers.
inline abcd::RayMatrix power_oracle(const abcd::RayMatrix& m, long n) {
    abcd::RayMatrix acc;
    for (long i = 0; i < n; ++i) {
        acc = acc * m;
    }
    return acc;
}

inline abcd::ComplexMatrix power_oracle(const abcd::ComplexMatrix& m, long n) {
    abcd::ComplexMatrix acc;
    for (long i = 0; i < n; ++i) {
        acc = acc * m;
    }
    return acc;
}

// Matrix exponential by scaling-and-squaring on a Taylor series; an
// independent oracle for the generator-built cores.
inline abcd::RayMatrix expm_oracle(const std::array<double, 4>& g) {
    std::array<double, 4> a = g;
    double norm = std::max(std::max(std::abs(a[0]), std::abs(a[1])),
                           std::max(std::abs(a[2]), std::abs(a[3])));
    int squarings = 0;
    while (norm > 0.25) {
        norm /= 2.0;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    for (double& v : a) {
        v *= scale;
    }

    const auto mul = [](const std::array<double, 4>& x, const std::array<double, 4>& y) {
        return std::array<double, 4>{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                                     x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
    };

    std::array<double, 4> sum{1.0, 0.0, 0.0, 1.0};
    std::array<double, 4> term{1.0, 0.0, 0.0, 1.0};
    for (int k = 1; k <= 24; ++k) {
        term = mul(term, a);
        for (double& v : term) {
            v /= static_cast<double>(k);
        }
        for (int i = 0; i < 4; ++i) {
            sum[i] += term[i];
        }
    }
    for (int i = 0; i < squarings; ++i) {
        sum = mul(sum, sum);
    }
    return {sum[0], sum[1], sum[2], sum[3]};
}

}  // namespace testutil
