#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sisph/kernel.hpp"
#include "sisph/vec.hpp"

namespace sisph {

// Reference values computed once from a prototype particle with full lattice
// neighbors. All downstream boundary compensation and shifting scales hang
// off these.
struct ReferenceConstants {
    int dimension = 2;
    double d0 = 1.0;
    double h = 2.5;
    double alpha0 = 0.0;   // full-support weight sum
    double A0 = 0.0;       // full-support Laplacian diagonal scale
    double c0 = 0.0;       // full-support concentration (unnormalized)
    double delta0c = 0.0;  // |reference laplacian of c|, unnormalized
    double beta0 = 1.0;    // pressure force correction factor
    double lambda0 = 1.0;  // upper limit for the bulk coefficient
    double kappa0 = 1.0;   // upper limit for the squared-gradient coefficient
    double grad0c_mag = 0.0;  // lattice gradient of c, should vanish by symmetry

    // |Delta0 c| in the d0-scaled frame with concentration normalized by c0
    double scaled_delta0c() const { return delta0c * d0 * d0 / c0; }
};

// Cartesian lattice of spacing d0: the center particle at the origin plus
// every lattice neighbor with 0 < r < h. Center first.
template <int D>
std::vector<Vec<D>> build_prototype(double d0, double h) {
    if (!(h / d0 >= 1.0)) throw std::invalid_argument("prototype: h must be >= d0");
    std::vector<Vec<D>> pts;
    pts.push_back(Vec<D>{});
    const int m = static_cast<int>(std::ceil(h / d0));
    const double h2 = h * h;
    auto consider = [&](const Vec<D>& p) {
        const double r2 = squared_norm(p);
        if (r2 > 0.0 && r2 < h2) pts.push_back(p);
    };
    if constexpr (D == 2) {
        for (int j = -m; j <= m; ++j)
            for (int i = -m; i <= m; ++i) consider(Vec<D>{{i * d0, j * d0}});
    } else {
        for (int k = -m; k <= m; ++k)
            for (int j = -m; j <= m; ++j)
                for (int i = -m; i <= m; ++i) consider(Vec<D>{{i * d0, j * d0, k * d0}});
    }
    return pts;
}

template <int D>
std::pair<double, double> compute_alpha0_A0(const std::vector<Vec<D>>& proto, const KernelSpec& k) {
    double alpha0 = 0.0;
    double s = 0.0;
    for (std::size_t j = 1; j < proto.size(); ++j) {
        const double r = norm(proto[j]);
        alpha0 += omega(k, r);
        s += omega_over_r2(k, r);
    }
    if (!(alpha0 > 0.0)) throw std::runtime_error("calibration: empty prototype support");
    return {alpha0, 2.0 / alpha0 * s};
}

template <int D>
std::pair<double, double> compute_c0_delta0c(const std::vector<Vec<D>>& proto, const KernelSpec& k,
                                             const BigWTable& W, double alpha0) {
    double c0 = 0.0;
    double lap = 0.0;
    for (std::size_t j = 1; j < proto.size(); ++j) {
        const double r = norm(proto[j]);
        c0 += W(r);
        lap += omega_prime(k, r) / std::max(r, k.delta);
    }
    c0 /= alpha0;
    lap /= alpha0;
    return {c0, std::fabs(lap)};
}

// Impose p = x on the lattice, evaluate the interior pressure force with
// beta0 = 1 and scale so it matches the analytic (1/rho0, 0, ...).
template <int D>
double calibrate_beta0(const std::vector<Vec<D>>& proto, const KernelSpec& k, double rho0, double alpha0) {
    Vec<D> acc{};
    for (std::size_t j = 1; j < proto.size(); ++j) {
        const double r = norm(proto[j]);
        const Vec<D> n = proto[j] * (1.0 / r);
        const double pj = proto[j][0];  // p = x, p_i = 0 at the center
        acc += (2.0 / alpha0) * pj * omega_over_r(k, r) * n;
    }
    acc *= 1.0 / rho0;
    const double mag = norm(acc);
    if (!(std::fabs(acc[0]) > 1e-12 * mag) || !(mag > 0.0))
        throw std::runtime_error("calibration: degenerate kernel, pressure force has no x component");
    return (1.0 / rho0) / mag;
}

template <int D>
double lattice_grad_c_mag(const std::vector<Vec<D>>& proto, const KernelSpec& k, double alpha0) {
    Vec<D> g{};
    for (std::size_t j = 1; j < proto.size(); ++j) {
        const double r = norm(proto[j]);
        g += proto[j] * (omega_over_r(k, r) / r);
    }
    return norm(g) / alpha0;
}

template <int D>
ReferenceConstants calibrate_constants(double d0, double h, const KernelSpec& k, const BigWTable& W,
                                       double rho0) {
    validate(k);
    const auto proto = build_prototype<D>(d0, h);
    ReferenceConstants c;
    c.dimension = D;
    c.d0 = d0;
    c.h = h;
    std::tie(c.alpha0, c.A0) = compute_alpha0_A0<D>(proto, k);
    std::tie(c.c0, c.delta0c) = compute_c0_delta0c<D>(proto, k, W, c.alpha0);
    c.beta0 = calibrate_beta0<D>(proto, k, rho0, c.alpha0);
    c.grad0c_mag = lattice_grad_c_mag<D>(proto, k, c.alpha0);
    return c;
}

}  // namespace sisph
