#pragma once

#include <cmath>
#include <vector>

#include "sisph/calibration.hpp"
#include "sisph/classification.hpp"
#include "sisph/geometry.hpp"
#include "sisph/kernel.hpp"
#include "sisph/neighbors.hpp"
#include "sisph/particles.hpp"
#include "sisph/util.hpp"

namespace sisph {

struct ShiftConfig {
    double kappa = 0.0;   // squared-gradient (surface tension) coefficient, [0, 1]
    double lambda = 1.0;  // bulk energy coefficient, [0, 1]
    int iterations = 10;
};

// Concentration and its derivatives, evaluated in the d0-scaled frame and
// normalized by the lattice reference c0. In this frame the free-energy
// formulas are dimensionless and the behavior is independent of the metric
// size of d0. Ghost solids contribute exactly like fluid neighbors.
template <int D>
void compute_concentration_fields(ParticleSystem<D>& ps, const GhostSolidSet<D>& ghosts,
                                  const NeighborTable& table, const KernelSpec& k, const BigWTable& W,
                                  const ReferenceConstants& consts, int threads) {
    const double d0 = consts.d0;
    const double inv_c0 = 1.0 / consts.c0;
    parallel_for(ps.size(), threads, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            double c = 0.0;
            Vec<D> g{};
            double lap = 0.0;
            auto accumulate = [&](const Vec<D>& xj) {
                const Vec<D> d = xj - ps.pos[i];
                const double r = norm(d);
                c += W(r);
                g += d * (omega_over_r(k, r) / r);
                lap += omega_prime(k, r) / std::max(r, k.delta);
            };
            for (int j : table.fluid[i]) accumulate(ps.pos[j]);
            for (int j : table.solid[i]) accumulate(ghosts.pos[j]);
            const double s = inv_c0 / ps.alpha_hat[i];
            ps.conc[i] = c * s;
            ps.grad_c[i] = g * (s * d0);
            ps.lap_c[i] = lap * (s * d0 * d0);
        }
    });
}

// Gradient of the per-particle Helmholtz free energy in the scaled frame:
// momentum potential + bulk term + squared-gradient term. Vanishes on the
// reference lattice when the particle sits at its anchor.
template <int D>
Vec<D> free_energy_gradient(const Vec<D>& x, const Vec<D>& anchor, double conc, const Vec<D>& grad_c,
                            double lap_c, const ShiftConfig& cfg, double d0) {
    const double bulk = cfg.lambda * (conc * conc * conc - conc);
    return (x - anchor) * (1.0 / d0) + grad_c * (bulk + cfg.kappa * lap_c);
}

// Step coefficient of Eq. varsigma in the scaled frame; the denominator uses
// the fixed upper limits lambda0, kappa0, so one shifting iteration can never
// move a particle farther than d0.
inline double shifting_step_coefficient(const ReferenceConstants& consts) {
    return 1.0 / (1.0 + consts.lambda0 + consts.kappa0 * consts.scaled_delta0c());
}

// Iterative particle shifting. Positions move, velocities do not. Every
// iteration rebuilds neighbors against the frozen anchor potential, applies
// the Jacobi displacement, and projects escapees back onto the wall surface.
// Returns xi = sum ||dx|| / (d0 N) per iteration.
template <int D>
std::vector<double> shift_particles(ParticleSystem<D>& ps, const GhostSolidSet<D>& ghosts,
                                    const PointGrid<D>& ghost_grid, const SignedDistanceField<D>& sdf,
                                    const KernelSpec& k, const BigWTable& W,
                                    const ReferenceConstants& consts, const ShiftConfig& cfg,
                                    NeighborTable& table, int threads) {
    std::vector<double> xi_history;
    const std::size_t n = ps.size();
    if (cfg.iterations <= 0 || n == 0) return xi_history;

    const double d0 = consts.d0;
    const double varsigma = shifting_step_coefficient(consts);
    std::vector<Vec<D>> dx(n);

    for (int it = 0; it < cfg.iterations; ++it) {
        build_neighbors<D>(ps.pos, ghost_grid, ghosts.size() > 0, k.h, table, threads);
        compute_alpha_hat_pass<D>(ps, ghosts, table, k, consts.alpha0, threads);
        compute_concentration_fields<D>(ps, ghosts, table, k, W, consts, threads);

        parallel_for(n, threads, [&](std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) {
                const Vec<D> g = free_energy_gradient<D>(ps.pos[i], ps.anchor[i], ps.conc[i],
                                                         ps.grad_c[i], ps.lap_c[i], cfg, d0);
                Vec<D> step = g * (-varsigma * d0);
                const double len = norm(step);
                if (len > d0) step *= d0 / len;
                dx[i] = step;
            }
        });

        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            total += norm(dx[i]);
            ps.pos[i] += dx[i];
            if (!sdf.empty()) {
                auto q = sdf.query(ps.pos[i]);
                if (q.distance < 0.0) ps.pos[i] -= q.distance * q.gradient;
            }
        }
        xi_history.push_back(total / (d0 * static_cast<double>(n)));
    }
    return xi_history;
}

}  // namespace sisph
