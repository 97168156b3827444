#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sisph/geometry.hpp"
#include "sisph/util.hpp"
#include "sisph/vec.hpp"

namespace sisph {

// Uniform background grid with cell size equal to the query radius.
// Per-cell index lists are filled in ascending particle order and candidate
// cells are visited in a fixed order, so gathered neighbor lists are
// deterministic.
template <int D>
class PointGrid {
public:
    PointGrid() = default;

    PointGrid(const std::vector<Vec<D>>& points, double cell) { build(points, cell); }

    void build(const std::vector<Vec<D>>& points, double cell) {
        cell_ = cell;
        cells_.clear();
        points_ = &points;
        for (std::size_t i = 0; i < points.size(); ++i)
            cells_[key(points[i])].push_back(static_cast<int>(i));
    }

    // indices of stored points with |p - x_j| < radius (radius <= cell size)
    void gather(const Vec<D>& p, double radius, std::vector<int>& out, int exclude = -1) const {
        out.clear();
        if (!points_) return;
        const double r2 = radius * radius;
        std::int64_t base[D];
        for (int i = 0; i < D; ++i) base[i] = coord(p[i]);
        visit_cells(base, [&](std::int64_t k) {
            auto it = cells_.find(k);
            if (it == cells_.end()) return;
            for (int j : it->second) {
                if (j == exclude) continue;
                if (squared_norm((*points_)[j] - p) < r2) out.push_back(j);
            }
        });
    }

private:
    std::int64_t coord(double x) const { return static_cast<std::int64_t>(std::floor(x / cell_)); }

    std::int64_t key(const Vec<D>& p) const {
        std::int64_t c[D];
        for (int i = 0; i < D; ++i) c[i] = coord(p[i]);
        return pack(c);
    }

    static std::int64_t pack(const std::int64_t c[D]) {
        // 21 bits per axis, offset to keep coordinates positive
        const std::int64_t m = (std::int64_t{1} << 20);
        std::int64_t k = 0;
        for (int i = 0; i < D; ++i) k = (k << 21) | ((c[i] + m) & ((std::int64_t{1} << 21) - 1));
        return k;
    }

    template <typename F>
    void visit_cells(const std::int64_t base[D], F&& f) const {
        std::int64_t c[D];
        if constexpr (D == 2) {
            for (std::int64_t dy = -1; dy <= 1; ++dy)
                for (std::int64_t dx = -1; dx <= 1; ++dx) {
                    c[0] = base[0] + dx;
                    c[1] = base[1] + dy;
                    f(pack(c));
                }
        } else {
            for (std::int64_t dz = -1; dz <= 1; ++dz)
                for (std::int64_t dy = -1; dy <= 1; ++dy)
                    for (std::int64_t dx = -1; dx <= 1; ++dx) {
                        c[0] = base[0] + dx;
                        c[1] = base[1] + dy;
                        c[2] = base[2] + dz;
                        f(pack(c));
                    }
        }
    }

    double cell_ = 1.0;
    std::unordered_map<std::int64_t, std::vector<int>> cells_;
    const std::vector<Vec<D>>* points_ = nullptr;
};

// Per-particle adjacency: fluid neighbors N_i^b and ghost solid neighbors
// N_i^s. Ghost air neighbors are never materialized.
struct NeighborTable {
    std::vector<std::vector<int>> fluid;
    std::vector<std::vector<int>> solid;

    void resize(std::size_t n) {
        fluid.resize(n);
        solid.resize(n);
    }
};

template <int D>
void build_neighbors(const std::vector<Vec<D>>& positions, const PointGrid<D>& ghost_grid,
                     bool has_ghosts, double h, NeighborTable& table, int threads = 1) {
    const std::size_t n = positions.size();
    table.resize(n);
    PointGrid<D> grid(positions, h);
    parallel_for(n, threads, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            grid.gather(positions[i], h, table.fluid[i], static_cast<int>(i));
            if (has_ghosts)
                ghost_grid.gather(positions[i], h, table.solid[i]);
            else
                table.solid[i].clear();
        }
    });
}

}  // namespace sisph
