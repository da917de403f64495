#pragma once

#include "squiral/coeff_table.hpp"
#include "squiral/lattice_patch.hpp"

#include <mutex>
#include <unordered_map>

namespace squiral {

// Exact autocorrelation values on {-1,0,1}^d, lexicographic order (the core
// is closed under the descent m -> floor(m/K) + s, so it solves as one
// linear system with the normalization eta(0) = 1).
std::vector<Rational> solve_core(const CoeffTable& coeffs);

// Exact autocorrelation coefficients of a block-substitution fixed point,
// computed by memoized floor-division descent into the solved core.
class EtaTable {
public:
    explicit EtaTable(CoeffTable coeffs, std::size_t memo_budget_entries = 1u << 24);

    const CoeffTable& coeffs() const { return coeffs_; }
    int dim() const { return coeffs_.dim(); }

    // Thread-safe; concurrent callers see identical values.
    Rational eta(const Point& m) const;

    std::size_t memo_size() const;

private:
    Rational eta_locked(const Point& m) const;

    CoeffTable coeffs_;
    std::vector<Rational> core_; // indexed over {-1,0,1}^d, lexicographic
    std::size_t memo_budget_;
    mutable std::recursive_mutex mutex_;
    mutable std::unordered_map<Point, Rational, PointHash> memo_;
};

// Window average (1/N^d) sum_{k in [0,N)^d} w_k * w_{k+m}; the patch must
// cover [0,N)^d and its shift by m.
double eta_bruteforce(const LatticePatch& patch, const Point& m, Int window);

} // namespace squiral
