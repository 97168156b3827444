#pragma once

#include "sisph/vec.hpp"

namespace sisph {

// Slipperiness of the solid wall: cn scales the normal velocity constraint,
// ct the tangential one. cn is overridden to 1 whenever the fluid approaches
// the wall, so particles cannot interpenetrate.
struct WallCondition {
    double cn = 1.0;
    double ct = 1.0;
};

template <int D>
Vec<D> wall_delta_v(const Vec<D>& v_star_i, const Vec<D>& ghost_vel, const Vec<D>& ghost_normal,
                    const WallCondition& wc) {
    const Vec<D> rel = ghost_vel - v_star_i;
    const double vn = dot(rel, ghost_normal);
    const Vec<D> normal_part = vn * ghost_normal;
    const double cn = vn > 0.0 ? 1.0 : wc.cn;
    return cn * normal_part + wc.ct * (rel - normal_part);
}

}  // namespace sisph
