#pragma once

#include "squiral/eta_table.hpp"

#include <functional>
#include <string>

namespace squiral {

using EtaFn = std::function<Rational(const Point&)>;

enum class WienerVerdict { continuous, has_point_part, inconclusive };

struct WienerLevel {
    int level = 0;
    Dims window;     // [0, K_i^level) per axis
    Rational sigma;  // sum of eta^2 over the window, exact
    double sigma_float = 0.0;
    double quotient = 0.0; // sigma / window cardinality
};

struct WienerReport {
    std::vector<WienerLevel> levels;
    double fitted_exponent = 0.0; // least-squares slope of log sigma vs log N
    WienerVerdict verdict = WienerVerdict::inconclusive;
};

// Exact Wiener sums over one-sided windows at levels 1..L; summation order
// is lexicographic so results are bit-reproducible.
WienerReport wiener_sums(const EtaFn& eta, const Dims& K, int levels);
WienerReport wiener_sums(const EtaTable& table, int levels);

// True iff some eta(m) != 0 with m != 0 inside |m|_inf <= box: such a value
// recurs along K-power orbits and rules out decay at infinity.
bool riemann_lebesgue_check(const EtaTable& table, Int box);

enum class SpectralConclusion { singular_continuous, pure_point, inconclusive };

struct SpectralVerdict {
    std::string purity;   // "pure" when the spectral-purity theorem applies
    bool singular = false;
    WienerVerdict continuous = WienerVerdict::inconclusive;
    SpectralConclusion conclusion = SpectralConclusion::inconclusive;
    std::string notes;
};

SpectralVerdict classify(const BlockMap& map, int levels);

// Same numerics for a caller-supplied eta source (synthetic tables); purity
// and singularity are only asserted when the caller vouches for them.
SpectralVerdict classify_source(const EtaFn& eta, const Dims& K, int levels, bool theorems_apply);

const char* to_string(WienerVerdict v);
const char* to_string(SpectralConclusion c);

} // namespace squiral
