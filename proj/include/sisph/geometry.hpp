#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "sisph/vec.hpp"

namespace sisph {

template <int D>
struct Box {
    Vec<D> lo{}, hi{};
    bool contains(const Vec<D>& p) const {
        for (int i = 0; i < D; ++i)
            if (p[i] < lo[i] || p[i] > hi[i]) return false;
        return true;
    }
};

// Signed distance to the solid set, positive on the fluid side, negative
// inside solids. Gradient points toward the fluid.
template <int D>
class SignedDistanceField {
public:
    struct Query {
        double distance = std::numeric_limits<double>::infinity();
        Vec<D> gradient{};
    };

    void add_half_space(const Vec<D>& outward_normal, double offset) {
        Primitive p;
        p.kind = Kind::half_space;
        p.normal = outward_normal * (1.0 / norm(outward_normal));
        p.offset = offset;
        prims_.push_back(p);
    }

    // solid occupies the box interior
    void add_solid_box(const Box<D>& b) {
        Primitive p;
        p.kind = Kind::solid_box;
        p.box = b;
        prims_.push_back(p);
    }

    // solid occupies everything outside the box (a closed container)
    void add_container(const Box<D>& b) {
        Primitive p;
        p.kind = Kind::container;
        p.box = b;
        prims_.push_back(p);
    }

    void add_solid_sphere(const Vec<D>& center, double radius) {
        Primitive p;
        p.kind = Kind::solid_sphere;
        p.center = center;
        p.radius = radius;
        prims_.push_back(p);
    }

    bool empty() const { return prims_.empty(); }

    double distance(const Vec<D>& p) const { return query(p).distance; }

    Query query(const Vec<D>& p) const {
        Query best;
        for (const Primitive& pr : prims_) {
            Query q = eval(pr, p);
            if (q.distance < best.distance) best = q;
        }
        return best;
    }

private:
    enum class Kind { half_space, solid_box, container, solid_sphere };

    struct Primitive {
        Kind kind;
        Vec<D> normal{};
        double offset = 0.0;
        Box<D> box{};
        Vec<D> center{};
        double radius = 0.0;
    };

    static Query box_query(const Box<D>& b, const Vec<D>& p) {
        // distance positive outside the box, negative inside
        Query q;
        Vec<D> nearest = p;
        bool outside = false;
        for (int i = 0; i < D; ++i) {
            if (p[i] < b.lo[i]) { nearest[i] = b.lo[i]; outside = true; }
            else if (p[i] > b.hi[i]) { nearest[i] = b.hi[i]; outside = true; }
        }
        if (outside) {
            Vec<D> d = p - nearest;
            q.distance = norm(d);
            q.gradient = q.distance > 0.0 ? d * (1.0 / q.distance) : Vec<D>{};
            return q;
        }
        int axis = 0;
        double dmin = std::numeric_limits<double>::infinity();
        double sign = 1.0;
        for (int i = 0; i < D; ++i) {
            const double to_lo = p[i] - b.lo[i];
            const double to_hi = b.hi[i] - p[i];
            if (to_lo < dmin) { dmin = to_lo; axis = i; sign = -1.0; }
            if (to_hi < dmin) { dmin = to_hi; axis = i; sign = 1.0; }
        }
        q.distance = -dmin;
        q.gradient = Vec<D>{};
        q.gradient[axis] = sign;
        return q;
    }

    static Query eval(const Primitive& pr, const Vec<D>& p) {
        Query q;
        switch (pr.kind) {
            case Kind::half_space:
                q.distance = dot(pr.normal, p) - pr.offset;
                q.gradient = pr.normal;
                break;
            case Kind::solid_box:
                q = box_query(pr.box, p);
                break;
            case Kind::container: {
                q = box_query(pr.box, p);
                q.distance = -q.distance;
                q.gradient = -q.gradient;
                break;
            }
            case Kind::solid_sphere: {
                Vec<D> d = p - pr.center;
                const double n = norm(d);
                q.distance = n - pr.radius;
                q.gradient = n > 0.0 ? d * (1.0 / n) : Vec<D>{};
                break;
            }
        }
        return q;
    }

    std::vector<Primitive> prims_;
};

// Visit every cell-centered lattice point of spacing d0 inside the box,
// anchored at box.lo. Fluid fill and ghost seeding share this anchor so the
// first fluid row and the first ghost layer sit exactly d0 apart.
template <int D>
void for_each_lattice_point(const Box<D>& box, double d0, const std::function<void(const Vec<D>&)>& fn) {
    int n[D];
    for (int i = 0; i < D; ++i) {
        const double extent = box.hi[i] - box.lo[i];
        n[i] = extent > 0.0 ? static_cast<int>(std::floor(extent / d0 + 1e-12)) : 0;
    }
    if constexpr (D == 2) {
        for (int j = 0; j < n[1]; ++j)
            for (int i = 0; i < n[0]; ++i) {
                Vec<D> p;
                p[0] = box.lo[0] + (i + 0.5) * d0;
                p[1] = box.lo[1] + (j + 0.5) * d0;
                fn(p);
            }
    } else {
        for (int k = 0; k < n[2]; ++k)
            for (int j = 0; j < n[1]; ++j)
                for (int i = 0; i < n[0]; ++i) {
                    Vec<D> p;
                    p[0] = box.lo[0] + (i + 0.5) * d0;
                    p[1] = box.lo[1] + (j + 0.5) * d0;
                    p[2] = box.lo[2] + (k + 0.5) * d0;
                    fn(p);
                }
    }
}

template <int D>
struct GhostSolidSet {
    std::vector<Vec<D>> pos;
    std::vector<Vec<D>> vel;
    std::vector<Vec<D>> normal;
    std::size_t size() const { return pos.size(); }
};

// Static boundary samples: lattice points in the band -h <= sdf < 0, normals
// from the sdf gradient, velocities from the prescribed wall motion.
template <int D>
GhostSolidSet<D> seed_ghost_solids(const SignedDistanceField<D>& sdf, const Box<D>& domain, double d0,
                                   double h, const Vec<D>& wall_velocity = {}) {
    GhostSolidSet<D> out;
    if (sdf.empty()) return out;
    for_each_lattice_point<D>(domain, d0, [&](const Vec<D>& p) {
        auto q = sdf.query(p);
        if (q.distance >= -h && q.distance < 0.0) {
            out.pos.push_back(p);
            out.vel.push_back(wall_velocity);
            out.normal.push_back(q.gradient);
        }
    });
    return out;
}

}  // namespace sisph
