#pragma once

#include <cmath>
#include <vector>

#include "sisph/geometry.hpp"
#include "sisph/kernel.hpp"
#include "sisph/neighbors.hpp"
#include "sisph/particles.hpp"
#include "sisph/util.hpp"

namespace sisph {

// alpha_hat_i = max(alpha0, sum of omega over fluid and ghost solid
// neighbors); the max compensates for the missing ghost air particles.
template <int D>
double alpha_hat_of(const std::vector<Vec<D>>& pos, const GhostSolidSet<D>& ghosts,
                    const NeighborTable& table, std::size_t i, const KernelSpec& k, double alpha0) {
    double a = 0.0;
    for (int j : table.fluid[i]) a += omega(k, norm(pos[j] - pos[i]));
    for (int j : table.solid[i]) a += omega(k, norm(ghosts.pos[j] - pos[i]));
    return std::max(alpha0, a);
}

// A_i^b and A_i^s; ghost solids borrow alpha_hat_i for their own weight.
template <int D>
std::pair<double, double> boundary_areas_of(const std::vector<Vec<D>>& pos, const GhostSolidSet<D>& ghosts,
                                            const NeighborTable& table, const std::vector<double>& alpha_hat,
                                            std::size_t i, const KernelSpec& k) {
    double ab = 0.0, as = 0.0;
    const double inv_i = 1.0 / alpha_hat[i];
    for (int j : table.fluid[i]) {
        const double r = norm(pos[j] - pos[i]);
        ab += (inv_i + 1.0 / alpha_hat[j]) * omega_over_r2(k, r);
    }
    for (int j : table.solid[i]) {
        const double r = norm(ghosts.pos[j] - pos[i]);
        as += 2.0 * inv_i * omega_over_r2(k, r);
    }
    return {ab, as};
}

inline ParticleClass classify(double area_fluid, double area_solid, bool has_solid_neighbors, double A0) {
    if (!has_solid_neighbors)
        return area_fluid >= A0 ? ParticleClass::interior : ParticleClass::surface;
    return area_fluid + area_solid >= A0 ? ParticleClass::wall : ParticleClass::surface_wall;
}

// A_hat per class; a deep wedge corner can drive A0 - A_i^s nonpositive, in
// which case the row is floored at 1e-6 A0 and flagged degenerate.
inline double area_hat_of(ParticleClass c, double area_fluid, double area_solid, double A0,
                          bool* degenerate = nullptr) {
    double a = 0.0;
    switch (c) {
        case ParticleClass::surface: a = A0; break;
        case ParticleClass::interior:
        case ParticleClass::wall: a = area_fluid; break;
        case ParticleClass::surface_wall: a = A0 - area_solid; break;
    }
    const double floor = 1e-6 * A0;
    if (a < floor) {
        if (degenerate) *degenerate = true;
        a = floor;
    }
    return a;
}

// Two data-parallel passes: alpha_hat first, then areas + class + A_hat.
// Returns the number of degenerate floored rows.
template <int D>
std::size_t classify_particles(ParticleSystem<D>& ps, const GhostSolidSet<D>& ghosts,
                               const NeighborTable& table, const KernelSpec& k, double alpha0, double A0,
                               int threads) {
    const std::size_t n = ps.size();
    parallel_for(n, threads, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i)
            ps.alpha_hat[i] = alpha_hat_of<D>(ps.pos, ghosts, table, i, k, alpha0);
    });
    std::vector<unsigned char> degen(n, 0);
    parallel_for(n, threads, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            auto [ab, as] = boundary_areas_of<D>(ps.pos, ghosts, table, ps.alpha_hat, i, k);
            ps.area_fluid[i] = ab;
            ps.area_solid[i] = as;
            ps.pclass[i] = classify(ab, as, !table.solid[i].empty(), A0);
            bool d = false;
            ps.area_hat[i] = area_hat_of(ps.pclass[i], ab, as, A0, &d);
            degen[i] = d ? 1 : 0;
        }
    });
    std::size_t count = 0;
    for (unsigned char d : degen) count += d;
    return count;
}

// alpha_hat only, for phases that need weights before any classification
// (XSPH and the shifting loop).
template <int D>
void compute_alpha_hat_pass(ParticleSystem<D>& ps, const GhostSolidSet<D>& ghosts,
                            const NeighborTable& table, const KernelSpec& k, double alpha0, int threads) {
    parallel_for(ps.size(), threads, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i)
            ps.alpha_hat[i] = alpha_hat_of<D>(ps.pos, ghosts, table, i, k, alpha0);
    });
}

}  // namespace sisph
