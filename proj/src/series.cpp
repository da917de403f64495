#include "squiral/series.hpp"

#include "squiral/errors.hpp"
#include "squiral/substitution.hpp"

namespace squiral {

SeriesCoeffs series_coeffs(const CoeffTable& coeffs, int level, std::size_t memory_budget) {
    if (level < 0) throw input_error("series level must be >= 0");
    if (memory_budget == 0) memory_budget = default_memory_budget();
    const int d = coeffs.dim();

    SeriesCoeffs cur;
    cur.level = 0;
    cur.size = coeffs.size;
    cur.table_shape.assign(d, 1);
    cur.beta.assign(1, Rational(1));

    for (int lev = 0; lev < level; ++lev) {
        SeriesCoeffs next;
        next.level = lev + 1;
        next.size = coeffs.size;
        next.table_shape.resize(d);
        std::size_t bytes = sizeof(Rational);
        for (int i = 0; i < d; ++i) {
            next.table_shape[i] = cur.table_shape[i] * coeffs.size[i];
            const double cells = static_cast<double>(bytes) * static_cast<double>(next.table_shape[i]);
            if (cells > static_cast<double>(memory_budget))
                throw budget_error("series table exceeds memory budget");
            bytes = static_cast<std::size_t>(cells);
        }
        next.beta.assign(static_cast<std::size_t>(checked_product(next.table_shape)), Rational(0));

        // Each target K*m + r is produced by exactly one (m, r) pair.
        Point m(d, 0);
        do {
            Point shifted(d), target(d);
            for (unsigned s = 0; s < coeffs.shift_count(); ++s) {
                bool inside = true;
                for (int i = 0; i < d; ++i) {
                    shifted[i] = m[i] + ((s >> i) & 1);
                    inside = inside && shifted[i] < cur.table_shape[i];
                }
                if (!inside) continue;
                const Rational& source = cur.beta[flat_index(shifted, cur.table_shape)];
                if (source == 0) continue;
                Point r(d, 0);
                Int r_flat = 0;
                do {
                    const Rational& alpha = coeffs.at(r_flat, s);
                    if (alpha != 0) {
                        for (int i = 0; i < d; ++i) target[i] = coeffs.size[i] * m[i] + r[i];
                        next.beta[flat_index(target, next.table_shape)] += alpha * source;
                    }
                    ++r_flat;
                } while (next_cell(r, coeffs.size));
            }
        } while (next_cell(m, cur.table_shape));

        cur = std::move(next);
    }
    return cur;
}

} // namespace squiral
