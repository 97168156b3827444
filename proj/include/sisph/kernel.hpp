#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace sisph {

// Pair-weight kernels. omega is the bare pair weight used by every operator;
// the divided forms omega/r and omega/r^2 are clamped below the threshold
// delta so close pairs cannot blow up, and W (bigW) is the integrated weight
// driving the concentration field, with dW/dr = -omega/r and W(h) = 0.
enum class KernelFamily {
    proposed_quartic,  // 1 - (r/h)^4
    cubic_spline,      // cubic B-spline, normalized to omega(0) = 1
    wendland_c2,       // (1-q)^3 (1+3q)
    classic_quartic,   // 4 q^2 (1-q^2); -r dW/dr of the quartic bell (1-q^2)^2
};

struct KernelSpec {
    KernelFamily family = KernelFamily::proposed_quartic;
    double h = 1.0;      // smoothing radius, support of omega
    double delta = 0.4;  // clamp threshold for omega/r and omega/r^2
};

inline void validate(const KernelSpec& k) {
    if (!(k.h > 0.0)) throw std::invalid_argument("kernel: h must be positive");
    if (!(k.delta > 0.0 && k.delta < k.h))
        throw std::invalid_argument("kernel: delta must satisfy 0 < delta < h");
}

inline double omega(const KernelSpec& k, double r) {
    if (r >= k.h) return 0.0;
    const double q = r / k.h;
    switch (k.family) {
        case KernelFamily::proposed_quartic: {
            const double q2 = q * q;
            return 1.0 - q2 * q2;
        }
        case KernelFamily::cubic_spline: {
            if (q <= 0.5) return 1.0 - 6.0 * q * q + 6.0 * q * q * q;
            const double u = 1.0 - q;
            return 2.0 * u * u * u;
        }
        case KernelFamily::wendland_c2: {
            const double u = 1.0 - q;
            return u * u * u * (1.0 + 3.0 * q);
        }
        case KernelFamily::classic_quartic: {
            const double q2 = q * q;
            return 4.0 * q2 * (1.0 - q2);
        }
    }
    return 0.0;
}

inline double omega_prime(const KernelSpec& k, double r) {
    if (r >= k.h) return 0.0;
    const double q = r / k.h;
    switch (k.family) {
        case KernelFamily::proposed_quartic:
            return -4.0 * q * q * q / k.h;
        case KernelFamily::cubic_spline: {
            if (q <= 0.5) return (-12.0 * q + 18.0 * q * q) / k.h;
            const double u = 1.0 - q;
            return -6.0 * u * u / k.h;
        }
        case KernelFamily::wendland_c2: {
            const double u = 1.0 - q;
            return -12.0 * q * u * u / k.h;
        }
        case KernelFamily::classic_quartic:
            return (8.0 * q - 16.0 * q * q * q) / k.h;
    }
    return 0.0;
}

inline double omega_over_r(const KernelSpec& k, double r) {
    const double w = omega(k, r);
    return w / (r > k.delta ? r : k.delta);
}

inline double omega_over_r2(const KernelSpec& k, double r) {
    const double w = omega(k, r);
    const double d = r > k.delta ? r : k.delta;
    return w / (d * d);
}

// Omega_w(r) = omega/r^2 - omega'/r, unclamped. Positive everywhere on (0, h]
// means the family resists pairing under compression.
inline double stability_indicator(const KernelSpec& k, double r) {
    if (!(r > 0.0)) throw std::domain_error("stability_indicator: r must be positive");
    return omega(k, r) / (r * r) - omega_prime(k, r) / r;
}

// W(r) = integral from r to h of the clamped omega(s)/s ds, tabulated on a
// uniform grid with linearly interpolated lookups. Nodal values come from
// per-interval 5-point Gauss-Legendre, with intervals split at delta where
// the clamped integrand has its kink.
class BigWTable {
public:
    BigWTable() = default;

    BigWTable(const KernelSpec& k, std::size_t samples = 4096) : h_(k.h) {
        if (samples < 8) samples = 8;
        dr_ = k.h / static_cast<double>(samples);
        w_.assign(samples + 1, 0.0);
        for (std::size_t i = samples; i-- > 0;) {
            const double a = static_cast<double>(i) * dr_;
            const double b = a + dr_;
            double piece;
            if (a < k.delta && k.delta < b)
                piece = gauss(k, a, k.delta) + gauss(k, k.delta, b);
            else
                piece = gauss(k, a, b);
            w_[i] = w_[i + 1] + piece;
        }
    }

    double operator()(double r) const {
        if (r >= h_) return 0.0;
        if (r < 0.0) r = 0.0;
        const double x = r / dr_;
        std::size_t i = static_cast<std::size_t>(x);
        if (i >= w_.size() - 1) i = w_.size() - 2;
        const double t = x - static_cast<double>(i);
        return w_[i] * (1.0 - t) + w_[i + 1] * t;
    }

    double at_zero() const { return w_.empty() ? 0.0 : w_.front(); }

private:
    static double gauss(const KernelSpec& k, double a, double b) {
        // 5-point Gauss-Legendre on [a, b]
        static const double xs[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                     0.5384693101056831, 0.9061798459386640};
        static const double ws[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                     0.4786286704993665, 0.2369268850561891};
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        double s = 0.0;
        for (int i = 0; i < 5; ++i) s += ws[i] * omega_over_r(k, mid + half * xs[i]);
        return s * half;
    }

    std::vector<double> w_;
    double h_ = 1.0;
    double dr_ = 1.0;
};

inline std::string to_string(KernelFamily f) {
    switch (f) {
        case KernelFamily::proposed_quartic: return "proposed_quartic";
        case KernelFamily::cubic_spline: return "cubic_spline";
        case KernelFamily::wendland_c2: return "wendland_c2";
        case KernelFamily::classic_quartic: return "classic_quartic";
    }
    return "?";
}

inline KernelFamily parse_kernel_family(const std::string& s) {
    if (s == "proposed_quartic") return KernelFamily::proposed_quartic;
    if (s == "cubic_spline") return KernelFamily::cubic_spline;
    if (s == "wendland_c2") return KernelFamily::wendland_c2;
    if (s == "classic_quartic") return KernelFamily::classic_quartic;
    throw std::invalid_argument("unknown kernel family: " + s);
}

}  // namespace sisph
