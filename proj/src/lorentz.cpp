#include "abcd/lorentz.hpp"

#include <cmath>

#include "abcd/errors.hpp"

namespace abcd {

double euclidean_norm(const FourVector& v) {
    return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z + v.t * v.t);
}

double minkowski_norm(const FourVector& v) {
    return v.x * v.x + v.y * v.y + v.z * v.z - v.t * v.t;
}

LorentzMatrix operator*(const LorentzMatrix& m1, const LorentzMatrix& m2) {
    LorentzMatrix out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double sum = 0.0;
            for (int k = 0; k < 4; ++k) {
                sum += m1.m[i][k] * m2.m[k][j];
            }
            out.m[i][j] = sum;
        }
    }
    return out;
}

FourVector operator*(const LorentzMatrix& m, const FourVector& v) {
    const std::array<double, 4> in{v.x, v.y, v.z, v.t};
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            out[i] += m.m[i][k] * in[k];
        }
    }
    return {out[0], out[1], out[2], out[3]};
}

LorentzMatrix rot4_y(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    LorentzMatrix out;
    out.m = {{{c, 0.0, s, 0.0},
              {0.0, 1.0, 0.0, 0.0},
              {-s, 0.0, c, 0.0},
              {0.0, 0.0, 0.0, 1.0}}};
    return out;
}

LorentzMatrix boost4_x(double lambda) {
    const double ch = std::cosh(lambda);
    const double sh = std::sinh(lambda);
    LorentzMatrix out;
    out.m = {{{ch, 0.0, 0.0, sh},
              {0.0, 1.0, 0.0, 0.0},
              {0.0, 0.0, 1.0, 0.0},
              {sh, 0.0, 0.0, ch}}};
    return out;
}

LorentzMatrix boost4_z(double eta) {
    const double ch = std::cosh(eta);
    const double sh = std::sinh(eta);
    LorentzMatrix out;
    out.m = {{{1.0, 0.0, 0.0, 0.0},
              {0.0, 1.0, 0.0, 0.0},
              {0.0, 0.0, ch, sh},
              {0.0, 0.0, sh, ch}}};
    return out;
}

LorentzMatrix rot4_z(double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    LorentzMatrix out;
    out.m = {{{c, -s, 0.0, 0.0},
              {s, c, 0.0, 0.0},
              {0.0, 0.0, 1.0, 0.0},
              {0.0, 0.0, 0.0, 1.0}}};
    return out;
}

LorentzMatrix lift_wigner4(double eta, double theta) {
    return boost4_z(eta) * rot4_y(theta) * boost4_z(-eta);
}

FourVector four_momentum_massive(double m, double eta) {
    if (m <= 0.0) {
        throw NonPositiveMass("massive four-momentum requires m > 0");
    }
    return {0.0, 0.0, m * std::sinh(eta), m * std::cosh(eta)};
}

LorentzMatrix gauge_limit_matrix(double gamma) {
    const double half_sq = gamma * gamma / 2.0;
    LorentzMatrix out;
    out.m = {{{1.0, 0.0, -gamma, gamma},
              {0.0, 1.0, 0.0, 0.0},
              {gamma, 0.0, 1.0 - half_sq, half_sq},
              {gamma, 0.0, -half_sq, 1.0 + half_sq}}};
    return out;
}

bool is_little_group_element(const LorentzMatrix& m, const FourVector& v, double tol) {
    const FourVector mv = m * v;
    const FourVector diff{mv.x - v.x, mv.y - v.y, mv.z - v.z, mv.t - v.t};
    return euclidean_norm(diff) <= tol * euclidean_norm(v);
}

double metric_residual(const LorentzMatrix& m) {
    constexpr std::array<double, 4> g{1.0, 1.0, 1.0, -1.0};
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double sum = 0.0;
            for (int k = 0; k < 4; ++k) {
                sum += m.m[k][i] * g[k] * m.m[k][j];
            }
            const double expected = i == j ? g[i] : 0.0;
            worst = std::max(worst, std::abs(sum - expected));
        }
    }
    return worst;
}

}  // namespace abcd
