#include <catch2/catch_amalgamated.hpp>

#include "sisph/kernel.hpp"

using namespace sisph;

namespace {

// Independent quadrature oracle: composite midpoint rule for
// integral_r^h of clamped omega(s)/s ds.
double bigw_midpoint_oracle(const KernelSpec& k, double r, std::size_t panels) {
    const double w = (k.h - r) / static_cast<double>(panels);
    double s = 0.0;
    for (std::size_t i = 0; i < panels; ++i) {
        const double m = r + (static_cast<double>(i) + 0.5) * w;
        s += omega_over_r(k, m);
    }
    return s * w;
}

const KernelFamily kAllFamilies[] = {
    KernelFamily::proposed_quartic,
    KernelFamily::cubic_spline,
    KernelFamily::wendland_c2,
    KernelFamily::classic_quartic,
};

}  // namespace

TEST_CASE("omega: proposed quartic point values") {
    KernelSpec k{KernelFamily::proposed_quartic, 1.0, 0.4};
    CHECK(omega(k, 0.0) == 1.0);
    CHECK(omega(k, 1.0) == 0.0);
    CHECK(omega(k, 0.5) == Catch::Approx(0.9375).epsilon(1e-14));
}

TEST_CASE("omega_prime: proposed quartic point values") {
    KernelSpec k{KernelFamily::proposed_quartic, 1.0, 0.4};
    CHECK(omega_prime(k, 0.0) == 0.0);
    CHECK(omega_prime(k, 0.5) == Catch::Approx(-0.5).epsilon(1e-14));
    for (KernelFamily f : kAllFamilies) {
        KernelSpec s{f, 1.0, 0.4};
        CHECK(omega_prime(s, 2.0) == 0.0);
    }
}

TEST_CASE("omega and omega_prime vanish at and beyond the support") {
    for (KernelFamily f : kAllFamilies) {
        KernelSpec k{f, 0.7, 0.2};
        for (double r : {0.7, 0.75, 1.4, 100.0}) {
            CHECK(omega(k, r) == 0.0);
            CHECK(omega_prime(k, r) == 0.0);
        }
        // continuous approach to zero at r = h
        CHECK(omega(k, 0.7 * (1.0 - 1e-9)) == Catch::Approx(0.0).margin(1e-7));
    }
}

TEST_CASE("omega is continuous across interior branch points") {
    KernelSpec k{KernelFamily::cubic_spline, 1.0, 0.4};
    const double e = 1e-10;
    CHECK(omega(k, 0.5 - e) == Catch::Approx(omega(k, 0.5 + e)).margin(1e-8));
    CHECK(omega_prime(k, 0.5 - e) == Catch::Approx(omega_prime(k, 0.5 + e)).margin(1e-8));
}

TEST_CASE("clamped omega/r and omega/r^2") {
    KernelSpec k{KernelFamily::proposed_quartic, 1.0, 0.4};
    CHECK(omega_over_r(k, 0.8) == Catch::Approx(0.5904 / 0.8).epsilon(1e-14));
    CHECK(omega_over_r(k, 0.0) == Catch::Approx(2.5).epsilon(1e-14));
    CHECK(omega_over_r2(k, 0.8) == Catch::Approx(0.5904 / 0.64).epsilon(1e-14));
    CHECK(omega_over_r2(k, 0.0) == Catch::Approx(1.0 / 0.16).epsilon(1e-14));
    for (KernelFamily f : kAllFamilies) {
        KernelSpec s{f, 1.0, 0.4};
        CHECK(omega_over_r(s, 1.0) == 0.0);
        CHECK(omega_over_r2(s, 1.0) == 0.0);
    }
}

TEST_CASE("clamped forms are bounded") {
    // For the monotone families omega(0)/delta is the ceiling; classic_quartic
    // has omega(0) = 0, use its supremum instead.
    for (KernelFamily f : kAllFamilies) {
        KernelSpec k{f, 1.3, 0.5};
        double wmax = 0.0;
        for (int i = 0; i <= 5000; ++i) wmax = std::max(wmax, omega(k, 1.3 * i / 5000.0));
        const double cap = (f == KernelFamily::classic_quartic) ? wmax : omega(k, 0.0);
        for (int i = 0; i <= 5000; ++i) {
            const double r = 1.3 * i / 5000.0;
            CHECK(omega_over_r(k, r) <= cap / 0.5 + 1e-12);
            CHECK(omega_over_r2(k, r) <= cap / 0.25 + 1e-12);
        }
    }
}

TEST_CASE("stability indicator: proposed quartic") {
    KernelSpec k{KernelFamily::proposed_quartic, 1.0, 0.4};
    CHECK(stability_indicator(k, 0.5) == Catch::Approx(4.75).epsilon(1e-14));
    CHECK(stability_indicator(k, 1.0) == Catch::Approx(4.0).epsilon(1e-14));
    CHECK_THROWS_AS(stability_indicator(k, 0.0), std::domain_error);
    // closed form 1/r^2 + 3 r^2 / h^4 and positivity on a dense grid
    for (int i = 1; i <= 10000; ++i) {
        const double r = i / 10000.0;
        const double v = stability_indicator(k, r);
        CHECK(v == Catch::Approx(1.0 / (r * r) + 3.0 * r * r).epsilon(1e-12));
        CHECK(v > 0.0);
    }
}

TEST_CASE("stability indicator: classic quartic goes negative near the center") {
    KernelSpec k{KernelFamily::classic_quartic, 1.0, 0.4};
    // Omega_w = (12 q^2 - 4)/h^2: negative below q = 1/sqrt(3)
    CHECK(stability_indicator(k, 0.2) < 0.0);
    CHECK(stability_indicator(k, 0.9) > 0.0);
}

TEST_CASE("bigW: endpoints and quadrature oracle") {
    KernelSpec k{KernelFamily::proposed_quartic, 1.0, 0.4};
    BigWTable W(k, 4096);
    CHECK(W(1.0) == 0.0);
    CHECK(W(2.0) == 0.0);
    CHECK(W(0.0) > 0.0);
    CHECK(W(0.0) <= omega(k, 0.0) / k.delta * k.h);

    const double oracle = bigw_midpoint_oracle(k, k.delta, 1000000);
    CHECK(W(k.delta) == Catch::Approx(oracle).epsilon(1e-6));

    // spot-check a second family at another radius
    KernelSpec kc{KernelFamily::cubic_spline, 0.9, 0.3};
    BigWTable Wc(kc, 4096);
    CHECK(Wc(0.45) == Catch::Approx(bigw_midpoint_oracle(kc, 0.45, 1000000)).epsilon(1e-6));
}

TEST_CASE("bigW is monotone nonincreasing") {
    for (KernelFamily f : kAllFamilies) {
        KernelSpec k{f, 1.0, 0.4};
        BigWTable W(k, 1024);
        double prev = W(0.0);
        for (int i = 1; i <= 2000; ++i) {
            const double cur = W(i / 2000.0);
            CHECK(cur <= prev + 1e-15);
            prev = cur;
        }
    }
}

TEST_CASE("kernel spec validation") {
    KernelSpec bad{KernelFamily::proposed_quartic, 1.0, 1.5};
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = {KernelFamily::proposed_quartic, -1.0, 0.1};
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    KernelSpec good{KernelFamily::wendland_c2, 1.0, 0.4};
    CHECK_NOTHROW(validate(good));
}

TEST_CASE("kernel family names round-trip") {
    for (KernelFamily f : kAllFamilies) CHECK(parse_kernel_family(to_string(f)) == f);
    CHECK_THROWS_AS(parse_kernel_family("gaussian"), std::invalid_argument);
}
