#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace sisph {

template <int D>
struct Vec {
    static_assert(D == 2 || D == 3, "only 2D and 3D are supported");
    std::array<double, D> c{};

    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < D; ++i) c[i] += o.c[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < D; ++i) c[i] -= o.c[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (int i = 0; i < D; ++i) c[i] *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(Vec a, double s) { return a *= s; }
    friend Vec operator*(double s, Vec a) { return a *= s; }
    friend Vec operator/(Vec a, double s) { return a *= (1.0 / s); }
    friend Vec operator-(Vec a) { return a *= -1.0; }
    friend bool operator==(const Vec& a, const Vec& b) { return a.c == b.c; }
};

template <int D>
inline double dot(const Vec<D>& a, const Vec<D>& b) {
    double s = 0.0;
    for (int i = 0; i < D; ++i) s += a.c[i] * b.c[i];
    return s;
}

template <int D>
inline double squared_norm(const Vec<D>& a) {
    return dot(a, a);
}

template <int D>
inline double norm(const Vec<D>& a) {
    return std::sqrt(squared_norm(a));
}

template <int D>
inline bool is_finite(const Vec<D>& a) {
    for (int i = 0; i < D; ++i)
        if (!std::isfinite(a.c[i])) return false;
    return true;
}

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;

}  // namespace sisph
