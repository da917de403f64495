#include "squiral/coeff_table.hpp"

#include "squiral/errors.hpp"

namespace squiral {

CoeffTable recursion_coeffs(const BlockMap& map) {
    validate(map);
    const int d = map.dim();
    const Int cells = map.cells();

    CoeffTable table;
    table.size = map.size;
    table.alpha.assign(static_cast<std::size_t>(cells) << d, Rational(0));

    // kappa_t * kappa_{t + r - s*K} summed over the t-box where both factors
    // are in range; per axis t_i runs over [s_i*(K_i - r_i), K_i - 1 - r_i*(1 - s_i)].
    Point r(d, 0);
    Int r_flat = 0;
    do {
        for (unsigned s_mask = 0; s_mask < (1u << d); ++s_mask) {
            Point lo(d), hi(d); // inclusive bounds
            bool empty = false;
            for (int i = 0; i < d; ++i) {
                const Int s = (s_mask >> i) & 1;
                lo[i] = s * (map.size[i] - r[i]);
                hi[i] = map.size[i] - 1 - r[i] * (1 - s);
                if (lo[i] > hi[i]) empty = true;
            }
            if (empty) continue;

            Int sum = 0;
            Point t = lo;
            while (true) {
                Int a = 0, b = 0;
                for (int i = 0; i < d; ++i) {
                    const Int s = (s_mask >> i) & 1;
                    a = a * map.size[i] + t[i];
                    b = b * map.size[i] + t[i] + r[i] - s * map.size[i];
                }
                sum += static_cast<Int>(map.entries[a]) * map.entries[b];

                int axis = d - 1;
                while (axis >= 0 && t[axis] == hi[axis]) t[axis] = lo[axis], --axis;
                if (axis < 0) break;
                ++t[axis];
            }
            table.alpha[(static_cast<std::size_t>(r_flat) << d) | s_mask] = Rational(sum, cells);
        }
        ++r_flat;
    } while (next_cell(r, map.size));

    return table;
}

CoeffTable axis_section(const CoeffTable& table, int axis) {
    const int d = table.dim();
    if (axis < 0 || axis >= d) throw input_error("section axis out of range");

    CoeffTable out;
    out.size = {table.size[axis]};
    out.alpha.assign(static_cast<std::size_t>(table.size[axis]) * 2, Rational(0));
    for (Int r = 0; r < table.size[axis]; ++r) {
        Point full_r(d, 0);
        full_r[axis] = r;
        for (unsigned s = 0; s < 2; ++s)
            out.alpha[static_cast<std::size_t>(r) * 2 + s] =
                table.at(full_r, s << axis);
    }
    return out;
}

} // namespace squiral
