#pragma once

#include "squiral/block_map.hpp"
#include "squiral/rational.hpp"

namespace squiral {

// Exact coefficients alpha(r, s) of the linear autocorrelation recursion
//   eta(K*m + r) = sum_{s in {0,1}^d} alpha(r, s) * eta(m + s).
// Stored flat: index r runs over prod[0,K_i) (last axis fastest), s is a
// bitmask with bit i for axis i.
struct CoeffTable {
    Dims size; // K per axis
    std::vector<Rational> alpha;

    int dim() const { return static_cast<int>(size.size()); }
    unsigned shift_count() const { return 1u << dim(); }

    const Rational& at(Int r_flat, unsigned s_mask) const {
        return alpha[static_cast<std::size_t>(r_flat) * shift_count() + s_mask];
    }
    const Rational& at(const Point& r, unsigned s_mask) const {
        return at(flat_index(r, size), s_mask);
    }
};

// alpha(r,s) = (1/prod K_i) * sum_t kappa_t * kappa_{t + r - s*K}, the t_i
// ranging over [s_i(K_i - r_i), K_i - 1 - r_i(1 - s_i)]; empty ranges give 0.
CoeffTable recursion_coeffs(const BlockMap& map);

// 1D recursion obeyed by eta restricted to a coordinate axis: keep the
// given axis of r and s, zero elsewhere. (Valid because alpha(r, s) = 0
// whenever some s_i = 1 with r_i = 0.)
CoeffTable axis_section(const CoeffTable& table, int axis);

} // namespace squiral
