#include "squiral/errors.hpp"
#include "squiral/eta_table.hpp"
#include "squiral/substitution.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace squiral;

namespace {

EtaTable squiral_eta() { return EtaTable(recursion_coeffs(builtin_squiral())); }

} // namespace

TEST_CASE("core solve pins the landmark autocorrelation values") {
    const EtaTable t = squiral_eta();
    CHECK(t.eta({0, 0}) == Rational(1));
    CHECK(t.eta({1, 0}) == Rational(-1, 3));
    CHECK(t.eta({0, 1}) == Rational(-1, 3));
    CHECK(t.eta({1, 1}) == Rational(1, 6));
    CHECK(t.eta({1, -1}) == Rational(1, 6));
}

TEST_CASE("descent reproduces deeper exact values") {
    const EtaTable t = squiral_eta();
    CHECK(t.eta({2, 0}) == Rational(11, 27));
    CHECK(t.eta({2, 2}) == Rational(7, 27));
    CHECK(t.eta({3, 0}) == Rational(-1, 3));  // eta(K*m) = eta(m)
    CHECK(t.eta({3, 3}) == Rational(1, 6));
    CHECK(t.eta({9, 0}) == Rational(-1, 3));
    CHECK(t.eta({1, 2}) == Rational(-8, 27));
    CHECK(t.eta({27, 27}) == Rational(1, 6));
}

TEST_CASE("self-similarity under the expansive map holds everywhere sampled") {
    const EtaTable t = squiral_eta();
    for (Int m = -6; m <= 6; ++m)
        for (Int n = -6; n <= 6; ++n) CHECK(t.eta({3 * m, 3 * n}) == t.eta({m, n}));
}

TEST_CASE("the autocorrelation inherits the full square symmetry") {
    const EtaTable t = squiral_eta();
    for (Int m = 0; m <= 8; ++m)
        for (Int n = 0; n <= 8; ++n) {
            const Rational v = t.eta({m, n});
            CHECK(t.eta({-m, n}) == v);
            CHECK(t.eta({m, -n}) == v);
            CHECK(t.eta({-m, -n}) == v);
            CHECK(t.eta({n, m}) == v);
        }
}

TEST_CASE("signs alternate with lag parity and axis values dominate") {
    const EtaTable t = squiral_eta();
    for (Int m = -8; m <= 8; ++m)
        for (Int n = -8; n <= 8; ++n) {
            const Rational v = t.eta({m, n});
            CHECK(((m + n) % 2 == 0 ? v > 0 : v < 0));
            CHECK(t.eta({m, Int{0}}) * t.eta({m, Int{0}}) >= v * v);
        }
}

TEST_CASE("exact values match finite-window averages of an actual patch") {
    const BlockMap map = builtin_squiral();
    const EtaTable t = squiral_eta();
    const SeedCycle cycle = find_seed_cycle(map);
    // 3^6 window needs the patch to cover [0, 729) plus lags up to 10.
    const LatticePatch patch = generate_fixed_patch(map, cycle, 7);
    const Int window = 729;
    for (Int m = -3; m <= 10; m += 3)
        for (Int n = -2; n <= 10; n += 4) {
            const double brute = eta_bruteforce(patch, {m, n}, window);
            const double exact = to_double(t.eta({m, n}));
            // Finite-window error contracts like C * (lag+1) / window.
            const double bound = 5.0 * (static_cast<double>(std::max(std::abs(m), std::abs(n))) + 1.0) /
                                 static_cast<double>(window);
            CHECK(std::abs(brute - exact) <= bound);
        }
}

TEST_CASE("brute-force averaging validates its coverage precondition") {
    const BlockMap map = builtin_squiral();
    const SeedCycle cycle = find_seed_cycle(map);
    const LatticePatch patch = generate_fixed_patch(map, cycle, 2);
    CHECK_THROWS_AS(eta_bruteforce(patch, {0, 0}, 10), input_error);     // [0,10) exceeds 9
    CHECK_THROWS_AS(eta_bruteforce(patch, {5, 0}, 9), input_error);      // shift exits the box
    CHECK(eta_bruteforce(patch, {0, 0}, 9) == doctest::Approx(1.0));     // w_k^2 = 1
}

TEST_CASE("a random bijective rule still solves and obeys the recursion") {
    std::mt19937_64 rng(20260814);
    for (int trial = 0; trial < 8; ++trial) {
        BlockMap map;
        map.size = {3, 3};
        do {
            map.entries.clear();
            for (int i = 0; i < 9; ++i)
                map.entries.push_back(rng() & 1 ? 1 : -1);
        } while ([&] {
            bool plus = false, minus = false;
            for (auto v : map.entries) (v > 0 ? plus : minus) = true;
            return !(plus && minus);
        }());

        const CoeffTable coeffs = recursion_coeffs(map);
        EtaTable t(coeffs);
        CHECK(t.eta({0, 0}) == Rational(1));
        // Spot-check the defining recursion at random lags.
        for (int k = 0; k < 20; ++k) {
            const Int m = static_cast<Int>(rng() % 41) - 20;
            const Int n = static_cast<Int>(rng() % 41) - 20;
            Point q{floor_div(m, 3), floor_div(n, 3)};
            Point r{m - 3 * q[0], n - 3 * q[1]};
            Rational acc(0);
            for (unsigned s = 0; s < 4; ++s)
                acc += coeffs.at(r, s) * t.eta({q[0] + (s & 1), q[1] + ((s >> 1) & 1)});
            CHECK(acc == t.eta({m, n}));
            CHECK(abs(t.eta({m, n})) <= Rational(1));
        }
    }
}

TEST_CASE("an underdetermined core system is reported as an internal error") {
    // A hand-built table whose recursion fails to pin down the core:
    // alpha(1, 1) = 1 turns the row for lag 1 into eta(1) = eta(1),
    // leaving that unknown free.
    CoeffTable broken;
    broken.size = {2};
    broken.alpha.assign(4, Rational(0));
    broken.alpha[0] = Rational(1); // r = 0, s = 0
    broken.alpha[3] = Rational(1); // r = 1, s = 1
    CHECK_THROWS_AS(solve_core(broken), internal_error);
}

TEST_CASE("the memo budget guards unbounded descent") {
    EtaTable t(recursion_coeffs(builtin_squiral()), 4);
    CHECK_THROWS_AS(t.eta({1000000, 999999}), budget_error);
}

TEST_CASE("eta values feed a positive semidefinite correlation matrix") {
    // Autocorrelations of a real configuration: the Gram-like matrix
    // [eta(m_i - m_j)] over a small lag set must be positive semidefinite.
    // Check x^T A x >= 0 for a few deterministic vectors.
    const EtaTable t = squiral_eta();
    std::vector<Point> lags;
    for (Int a = 0; a < 3; ++a)
        for (Int b = 0; b < 3; ++b) lags.push_back({a, b});
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> x;
        for (std::size_t i = 0; i < lags.size(); ++i)
            x.push_back(Rational(static_cast<Int>(rng() % 7) - 3));
        Rational form(0);
        for (std::size_t i = 0; i < lags.size(); ++i)
            for (std::size_t j = 0; j < lags.size(); ++j)
                form += x[i] * x[j] *
                        t.eta({lags[i][0] - lags[j][0], lags[i][1] - lags[j][1]});
        CHECK(form >= 0);
    }
}
