#include "squiral/kernel.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace squiral;

namespace {

constexpr double tau = 2.0 * std::numbers::pi;

double squiral_theta_closed_form(double x, double y) {
    const double s = 1.0 + 2.0 * std::cos(tau * x) + 2.0 * std::cos(tau * y) -
                     2.0 * std::cos(tau * (x + y)) - 2.0 * std::cos(tau * (x - y));
    return s * s / 9.0;
}

} // namespace

TEST_CASE("the planar kernel matches its closed square form") {
    const TrigKernel k = build_kernel(recursion_coeffs(builtin_squiral()));
    REQUIRE(k.size == Dims{3, 3});
    for (int i = 0; i < 25; ++i) {
        const double x = static_cast<double>(i % 5) / 5.0 + 0.013;
        const double y = static_cast<double>(i / 5) / 5.0 + 0.037;
        CHECK(k.eval({x, y}) ==
              doctest::Approx(squiral_theta_closed_form(x, y)).epsilon(1e-12));
    }
    // Zero frequency: (1 + 2 + 2 - 2 - 2)^2 / 9 = 1/9, a genuine zero-order dip.
    CHECK(k.eval({0.0, 0.0}) == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
    CHECK(k.eval({0.5, 0.0}) == doctest::Approx(squiral_theta_closed_form(0.5, 0.0)));
}

TEST_CASE("kernel coefficients are the zero-shift recursion column") {
    const CoeffTable t = recursion_coeffs(builtin_squiral());
    const TrigKernel k = build_kernel(t);
    CHECK(k.at({0, 0}) == Rational(1));
    CHECK(k.at({1, 0}) == Rational(-2, 9));
    CHECK(k.at({2, 0}) == Rational(1, 3));
    CHECK(k.at({1, 1}) == Rational(0));
    CHECK(k.at({2, 2}) == Rational(1, 9));
}

TEST_CASE("the kernel is nonnegative and averages to one on the grid") {
    const TrigKernel k = build_kernel(recursion_coeffs(builtin_squiral()));
    const Int G = 243;
    const auto samples = k.sample_grid(G);
    REQUIRE(samples.size() == static_cast<std::size_t>(G * G));
    double mean = 0.0;
    for (double v : samples) {
        CHECK(v >= -1e-12);
        mean += v;
    }
    mean /= static_cast<double>(samples.size());
    // Only the constant Fourier mode survives grid averaging (G > bandwidth).
    CHECK(mean == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("grid samples agree with pointwise evaluation") {
    const TrigKernel k = build_kernel(recursion_coeffs(builtin_squiral()));
    const Int G = 27;
    const auto samples = k.sample_grid(G);
    for (Int i = 0; i < G; i += 5)
        for (Int j = 0; j < G; j += 7) {
            const double x = static_cast<double>(i) / static_cast<double>(G);
            const double y = static_cast<double>(j) / static_cast<double>(G);
            CHECK(samples[static_cast<std::size_t>(i * G + j)] ==
                  doctest::Approx(k.eval({x, y})).epsilon(1e-13));
        }
}

TEST_CASE("the 1D section kernel has the minus-four-ninths profile") {
    const CoeffTable section = axis_section(recursion_coeffs(builtin_squiral()), 0);
    const TrigKernel k = build_kernel(section);
    for (double x : {0.0, 0.1, 0.25, 0.4, 0.77}) {
        const double expected =
            1.0 - (4.0 / 9.0) * std::cos(tau * x) + (2.0 / 3.0) * std::cos(2.0 * tau * x);
        CHECK(k.eval({x}) == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("kernel symmetry: both reflections fix the squiral kernel") {
    const TrigKernel k = build_kernel(recursion_coeffs(builtin_squiral()));
    for (int i = 1; i < 7; ++i) {
        const double x = 0.31 * i, y = 0.17 * i;
        CHECK(k.eval({x, y}) == doctest::Approx(k.eval({y, x})).epsilon(1e-12));
        CHECK(k.eval({x, y}) == doctest::Approx(k.eval({1.0 - x, y})).epsilon(1e-12));
    }
}
