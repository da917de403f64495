#pragma once

#include "squiral/coeff_table.hpp"

#include <cstddef>

namespace squiral {

// Exact sine-series coefficients beta^(N) of the level-N distribution
// approximant, built from beta^(0) = delta_0 by the same recursion that
// drives eta:  beta^(N+1)(K*m + r) = sum_s alpha(r, s) beta^(N)(m + s),
// with out-of-table entries read as 0.
struct SeriesCoeffs {
    int level = 0;
    Dims size;        // K per axis
    Dims table_shape; // K_i^level per axis
    std::vector<Rational> beta;

    int dim() const { return static_cast<int>(size.size()); }

    Rational at(const Point& m) const {
        for (std::size_t i = 0; i < table_shape.size(); ++i)
            if (m[i] < 0 || m[i] >= table_shape[i]) return Rational(0);
        return beta[flat_index(m, table_shape)];
    }
};

SeriesCoeffs series_coeffs(const CoeffTable& coeffs, int level,
                           std::size_t memory_budget = 0); // 0 = default budget

} // namespace squiral
