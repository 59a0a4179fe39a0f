#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "cll/field.hpp"
#include "helpers.hpp"

using namespace cll;
using testutil::plane_wave;
using testutil::random_smooth;
using testutil::rel_err;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TEST_CASE("make_grid validates and derives spacing") {
    const GridSpec g = make_grid(-20.0, 40.0, 256);
    CHECK(g.h() == 0.15625);
    CHECK(g.point(0) == -20.0);
    CHECK(g.point(128) == doctest::Approx(0.0).epsilon(1e-15));

    const GridSpec gp = make_grid(0.0, kTwoPi, 64);
    CHECK(gp.fundamental_wavenumber() == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(make_grid(0.0, 40.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(0.0, 40.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(0.0, 0.0, 64), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(0.0, -1.0, 64), std::invalid_argument);
    CHECK_NOTHROW(make_grid(0.0, 1.0, 8));
}

TEST_CASE("field constructors enforce the sample count") {
    const GridSpec g = make_grid(0.0, 1.0, 8);
    CHECK_THROWS_AS(ComplexField(g, std::vector<Complex>(7)), std::invalid_argument);
    CHECK_THROWS_AS(RealField(g, std::vector<double>(9)), std::invalid_argument);
    const ComplexField f(g, Complex{1.0, -2.0});
    CHECK(f.size() == 8);
    CHECK(f[3] == Complex{1.0, -2.0});
}

TEST_CASE("diff reproduces the eigenvalue of an admissible plane wave") {
    const GridSpec g = make_grid(-20.0, 40.0, 256);
    const double kappa = 5 * g.fundamental_wavenumber();
    const ComplexField f = plane_wave(g, 5);
    const ComplexField expected1 = Complex{0.0, kappa} * f;
    CHECK(sup_norm(diff(f, 1) - expected1) < 1e-12);
    const ComplexField expected2 = (-kappa * kappa) * f;
    CHECK(sup_norm(diff(f, 2) - expected2) < 1e-12);
}

TEST_CASE("diff of a constant vanishes identically") {
    const GridSpec g = make_grid(-20.0, 40.0, 64);
    const ComplexField c(g, Complex{0.7, -1.3});
    CHECK(sup_norm(diff(c, 1)) == 0.0);
    CHECK(sup_norm(diff(c, 2)) == 0.0);
}

TEST_CASE("diff rejects unsupported orders") {
    const GridSpec g = make_grid(0.0, 1.0, 8);
    const ComplexField f(g);
    CHECK_THROWS_AS(diff(f, 0), std::invalid_argument);
    CHECK_THROWS_AS(diff(f, 3), std::invalid_argument);
}

TEST_CASE("second derivative of a sech profile matches a centered difference oracle") {
    // Independent oracle: 4th-order 5-point stencil on the periodic samples.
    auto fd4 = [](const ComplexField& f) {
        const int n = f.grid.n;
        const double h = f.grid.h();
        ComplexField out(f.grid);
        auto at = [&](int m) { return f[((m % n) + n) % n]; };
        for (int m = 0; m < n; ++m) {
            out[m] = (-at(m - 2) + 16.0 * at(m - 1) - 30.0 * at(m) + 16.0 * at(m + 1) -
                      at(m + 2)) /
                     (12.0 * h * h);
        }
        return out;
    };
    double err[2];
    int idx = 0;
    for (int n : {256, 512}) {
        const GridSpec g = make_grid(-20.0, 40.0, n);
        const ComplexField f =
            sample_complex(g, [](double x) { return Complex{1.0 / std::cosh(x), 0.0}; });
        err[idx++] = sup_norm(diff(f, 2) - fd4(f));
    }
    // max|d^6 sech| = 61, so the n=256 error is about 61/90 * h^4 = 4.1e-4
    CHECK(err[0] < 1e-3);
    CHECK(err[0] > 1e-5);
    CHECK(err[0] / err[1] > 10.0);  // 4th-order decay under grid doubling
}

TEST_CASE("diff is linear") {
    const GridSpec g = make_grid(-10.0, 20.0, 128);
    std::mt19937 rng(42);
    const ComplexField f = random_smooth(g, rng, 6, 1.0);
    const ComplexField h = random_smooth(g, rng, 6, 1.0);
    const Complex a{0.7, -0.3};
    const Complex b{-1.1, 2.0};
    for (int order : {1, 2}) {
        const ComplexField lhs = diff(a * f + b * h, order);
        const ComplexField rhs = a * diff(f, order) + b * diff(h, order);
        CHECK(rel_err(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("two first derivatives agree with one second derivative") {
    const GridSpec g = make_grid(-10.0, 20.0, 128);
    std::mt19937 rng(7);
    const ComplexField f = random_smooth(g, rng, 8, 1.0);
    CHECK(rel_err(diff(diff(f, 1), 1), diff(f, 2)) < 1e-10);
}

TEST_CASE("norms: constants, zero field, plane wave") {
    const GridSpec g = make_grid(0.0, kTwoPi, 64);
    const Complex c{3.0, -4.0};
    CHECK(sup_norm(ComplexField(g, c)) == std::abs(c));
    CHECK(sup_norm(ComplexField(g)) == 0.0);
    CHECK(l2_norm(ComplexField(g)) == 0.0);
    CHECK(l2_norm(plane_wave(g, 3)) == doctest::Approx(std::sqrt(kTwoPi)).epsilon(1e-12));
}

TEST_CASE("norms are absolutely homogeneous") {
    const GridSpec g = make_grid(0.0, kTwoPi, 64);
    std::mt19937 rng(3);
    const ComplexField f = random_smooth(g, rng, 5, 2.0);
    const Complex c{-2.5, 1.25};
    CHECK(sup_norm(c * f) == doctest::Approx(std::abs(c) * sup_norm(f)).epsilon(1e-12));
    CHECK(l2_norm(c * f) == doctest::Approx(std::abs(c) * l2_norm(f)).epsilon(1e-12));
}

TEST_CASE("binary field operations require a shared grid") {
    const ComplexField a(make_grid(0.0, 1.0, 8));
    const ComplexField b(make_grid(0.0, 2.0, 8));
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("is_finite flags NaN and infinity") {
    const GridSpec g = make_grid(0.0, 1.0, 8);
    ComplexField f(g, Complex{1.0, 0.0});
    CHECK(is_finite(f));
    f[3] = Complex{std::nan(""), 0.0};
    CHECK_FALSE(is_finite(f));
    RealField r(g, 2.0);
    CHECK(is_finite(r));
    r[0] = std::numeric_limits<double>::infinity();
    CHECK_FALSE(is_finite(r));
}

TEST_CASE("real-field derivative agrees with the complex path") {
    const GridSpec g = make_grid(-10.0, 20.0, 128);
    std::mt19937 rng(11);
    const RealField f = testutil::random_smooth_real(g, rng, 6, 1.0);
    const RealField d = diff(f, 2);
    const ComplexField dc = diff(to_complex(f), 2);
    CHECK(rel_err(to_complex(d), dc) < 1e-13);
}
