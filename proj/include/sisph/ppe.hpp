#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "sisph/classification.hpp"
#include "sisph/geometry.hpp"
#include "sisph/kernel.hpp"
#include "sisph/neighbors.hpp"
#include "sisph/particles.hpp"
#include "sisph/util.hpp"
#include "sisph/wall.hpp"

namespace sisph {

struct SolverAbort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dot product and mean-|.| reductions. Ordered mode accumulates strictly in
// index order so reruns are bitwise identical; fast mode reduces per chunk
// and combines chunks in order.
inline double reduce_dot(const std::vector<double>& a, const std::vector<double>& b, bool ordered,
                         int threads) {
    const std::size_t n = a.size();
    if (ordered || threads <= 1) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
        return s;
    }
    const std::size_t t = static_cast<std::size_t>(threads);
    std::vector<double> partial(t, 0.0);
    const std::size_t chunk = (n + t - 1) / t;
    parallel_for(n, threads, [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i];
        partial[lo / chunk] += s;
    });
    double s = 0.0;
    for (double p : partial) s += p;
    return s;
}

inline double mean_abs(const std::vector<double>& a) {
    if (a.empty()) return 0.0;
    double s = 0.0;
    for (double v : a) s += std::fabs(v);
    return s / static_cast<double>(a.size());
}

// Everything the matrix-free operator needs for one step. All references;
// classification must be current.
template <int D>
struct PpeContext {
    const std::vector<Vec<D>>& pos;
    const GhostSolidSet<D>& ghosts;
    const NeighborTable& table;
    const std::vector<double>& alpha_hat;
    const std::vector<double>& area_hat;
    const KernelSpec& kernel;
    double rho0 = 1000.0;
    int threads = 1;
    bool ordered_reduction = true;
};

// L_i = (A_hat_i p_i - sum_{j in fluid} (1/a_i + 1/a_j) omega/r^2 p_j) / rho0
template <int D>
void apply_laplacian(const PpeContext<D>& ctx, const std::vector<double>& p, std::vector<double>& out) {
    const std::size_t n = ctx.pos.size();
    out.resize(n);
    parallel_for(n, ctx.threads, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            double acc = ctx.area_hat[i] * p[i];
            const double inv_i = 1.0 / ctx.alpha_hat[i];
            for (int j : ctx.table.fluid[i]) {
                const double r = norm(ctx.pos[j] - ctx.pos[i]);
                acc -= (inv_i + 1.0 / ctx.alpha_hat[j]) * omega_over_r2(ctx.kernel, r) * p[j];
            }
            out[i] = acc / ctx.rho0;
        }
    });
}

// D_i per Eq. div: pairwise half velocity differences against fluid
// neighbors plus the wall constraint term for particles with solid
// neighbors. Compression makes D_i negative.
template <int D>
void compute_source(const PpeContext<D>& ctx, const std::vector<Vec<D>>& v_star, const WallCondition& wc,
                    double dt, std::vector<double>& out) {
    if (!(dt > 0.0)) throw std::invalid_argument("compute_source: dt must be positive");
    const std::size_t n = ctx.pos.size();
    out.resize(n);
    parallel_for(n, ctx.threads, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            double acc = 0.0;
            const double inv_i = 1.0 / ctx.alpha_hat[i];
            for (int j : ctx.table.fluid[i]) {
                const Vec<D> d = ctx.pos[j] - ctx.pos[i];
                const double r = norm(d);
                const Vec<D> nij = d * (1.0 / r);
                acc += (inv_i + 1.0 / ctx.alpha_hat[j]) * 0.5 * dot(v_star[j] - v_star[i], nij) *
                       omega_over_r(ctx.kernel, r);
            }
            for (int j : ctx.table.solid[i]) {
                const Vec<D> d = ctx.ghosts.pos[j] - ctx.pos[i];
                const double r = norm(d);
                const Vec<D> nij = d * (1.0 / r);
                const Vec<D> dv = wall_delta_v<D>(v_star[i], ctx.ghosts.vel[j], ctx.ghosts.normal[j], wc);
                acc += 2.0 * inv_i * dot(dv, nij) * omega_over_r(ctx.kernel, r);
            }
            out[i] = acc / dt;
        }
    });
}

// ECS_i = |rho_rel - 1| D_prev + |D_prev| (rho_rel - 1), applied only where
// the particle is denser than the rest density. rho_rel is the normalized
// concentration c_i / c0.
inline double compute_ecs(double rho_rel, double source_prev) {
    if (!(rho_rel > 1.0)) return 0.0;
    const double e = rho_rel - 1.0;
    return std::fabs(e) * source_prev + std::fabs(source_prev) * e;
}

inline void add_ecs(const std::vector<double>& rho_rel, const std::vector<double>& source_prev,
                    std::vector<double>& source) {
    for (std::size_t i = 0; i < source.size(); ++i)
        source[i] += compute_ecs(rho_rel[i], source_prev[i]);
}

inline double residual_eta(const std::vector<double>& lhs, const std::vector<double>& rhs) {
    if (lhs.empty()) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < lhs.size(); ++i) s += std::fabs(lhs[i] - rhs[i]);
    return s / static_cast<double>(lhs.size());
}

struct PressureSolveStats {
    int iterations = 0;
    double eta_final = 0.0;
    bool converged = false;
};

// Unpreconditioned conjugate gradient on the residual q = D - L(p).
// Stops when the mean absolute residual eta drops to eta0. Negative
// pressures are retained. eta_trace, when given, records eta at every
// iterate starting with the initial one.
template <int D>
PressureSolveStats solve_pressure(const PpeContext<D>& ctx, const std::vector<double>& rhs,
                                  std::vector<double>& p, double eta0, int max_iterations,
                                  std::vector<double>* eta_trace = nullptr) {
    const std::size_t n = rhs.size();
    p.resize(n, 0.0);
    std::vector<double> q(n), y(n), ly(n);

    apply_laplacian(ctx, p, ly);
    for (std::size_t i = 0; i < n; ++i) q[i] = rhs[i] - ly[i];

    PressureSolveStats stats;
    double eta = mean_abs(q);
    if (eta_trace) eta_trace->push_back(eta);
    if (!std::isfinite(eta)) throw SolverAbort("pressure solve: non-finite initial residual");

    double qq = reduce_dot(q, q, ctx.ordered_reduction, ctx.threads);
    y = q;
    while (eta > eta0 && stats.iterations < max_iterations) {
        apply_laplacian(ctx, y, ly);
        const double denom = reduce_dot(y, ly, ctx.ordered_reduction, ctx.threads);
        if (!(denom > 0.0)) {
            if (qq == 0.0) break;  // exact solution reached
            throw SolverAbort("pressure solve: operator lost positive definiteness (y.Ly = " +
                              std::to_string(denom) + ")");
        }
        const double beta = qq / denom;
        for (std::size_t i = 0; i < n; ++i) {
            p[i] += beta * y[i];
            q[i] -= beta * ly[i];
        }
        const double qq_next = reduce_dot(q, q, ctx.ordered_reduction, ctx.threads);
        const double gamma = qq_next / qq;
        for (std::size_t i = 0; i < n; ++i) y[i] = q[i] + gamma * y[i];
        qq = qq_next;
        ++stats.iterations;
        eta = mean_abs(q);
        if (eta_trace) eta_trace->push_back(eta);
        if (!std::isfinite(eta)) throw SolverAbort("pressure solve: non-finite residual at iteration " +
                                                   std::to_string(stats.iterations));
    }
    stats.eta_final = eta;
    stats.converged = eta <= eta0;
    return stats;
}

}  // namespace sisph
