#pragma once

#include <cstddef>
#include <vector>

#include "sisph/vec.hpp"

namespace sisph {

// The four fluid-particle subsets: interior, truncated only by the free
// surface, truncated only by a wall, truncated by both.
enum class ParticleClass : unsigned char { interior, surface, wall, surface_wall };

inline const char* to_string(ParticleClass c) {
    switch (c) {
        case ParticleClass::interior: return "interior";
        case ParticleClass::surface: return "surface";
        case ParticleClass::wall: return "wall";
        case ParticleClass::surface_wall: return "surface_wall";
    }
    return "?";
}

// Structure-of-sequences fluid state. Particles are never reordered, so the
// array index is the stable particle id.
template <int D>
struct ParticleSystem {
    std::vector<Vec<D>> pos;
    std::vector<Vec<D>> vel;
    std::vector<Vec<D>> v_star;   // intermediate velocity
    std::vector<Vec<D>> anchor;   // advected position before shifting (x*)
    std::vector<double> pressure;
    std::vector<ParticleClass> pclass;
    std::vector<double> alpha_hat;
    std::vector<double> area_fluid;   // A_i^b
    std::vector<double> area_solid;   // A_i^s
    std::vector<double> area_hat;     // A_hat_i
    std::vector<double> conc;         // normalized concentration c_i / c0
    std::vector<Vec<D>> grad_c;       // d0-scaled, normalized
    std::vector<double> lap_c;        // d0^2-scaled, normalized
    std::vector<double> source;       // PPE source of the current step (divergence part)
    std::vector<double> source_prev;  // previous step's divergence source, for ECS

    std::size_t size() const { return pos.size(); }

    void resize(std::size_t n) {
        pos.resize(n);
        vel.resize(n);
        v_star.resize(n);
        anchor.resize(n);
        pressure.resize(n, 0.0);
        pclass.resize(n, ParticleClass::interior);
        alpha_hat.resize(n, 0.0);
        area_fluid.resize(n, 0.0);
        area_solid.resize(n, 0.0);
        area_hat.resize(n, 0.0);
        conc.resize(n, 0.0);
        grad_c.resize(n);
        lap_c.resize(n, 0.0);
        source.resize(n, 0.0);
        source_prev.resize(n, 0.0);
    }
};

}  // namespace sisph
