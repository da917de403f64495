#include "squiral/factor.hpp"

#include "squiral/errors.hpp"

#include <random>
#include <set>

namespace squiral {

LatticePatch psi(const LatticePatch& patch) {
    if (patch.dim() != 2) throw input_error("sliding-product factor map needs a 2D patch");
    if (patch.shape[0] < 2 || patch.shape[1] < 2)
        throw input_error("patch too small for the 2x2 sliding product");

    LatticePatch out;
    out.origin = patch.origin;
    out.shape = {patch.shape[0] - 1, patch.shape[1] - 1};
    out.values.resize(static_cast<std::size_t>(out.shape[0] * out.shape[1]));

    const Int cols = patch.shape[1];
    for (Int i = 0; i + 1 < patch.shape[0]; ++i)
        for (Int j = 0; j + 1 < cols; ++j) {
            const std::size_t p = static_cast<std::size_t>(i * cols + j);
            const int prod = patch.values[p] * patch.values[p + 1] *
                             patch.values[p + cols] * patch.values[p + cols + 1];
            out.values[static_cast<std::size_t>(i * (cols - 1) + j)] =
                static_cast<std::int8_t>(prod);
        }
    return out;
}

LatticePatch induced_substitute(const LatticePatch& factor_patch) {
    if (factor_patch.dim() != 2) throw input_error("induced inflation needs a 2D patch");

    LatticePatch out;
    out.origin = {3 * factor_patch.origin[0], 3 * factor_patch.origin[1]};
    out.shape = {3 * factor_patch.shape[0], 3 * factor_patch.shape[1]};
    out.values.resize(static_cast<std::size_t>(out.shape[0] * out.shape[1]));

    const Int cols = factor_patch.shape[1];
    for (Int i = 0; i < factor_patch.shape[0]; ++i)
        for (Int j = 0; j < cols; ++j) {
            const std::int8_t a = factor_patch.values[static_cast<std::size_t>(i * cols + j)];
            for (Int r = 0; r < 3; ++r)
                for (Int s = 0; s < 3; ++s) {
                    std::int8_t v;
                    if (r < 2 && s < 2) v = -1;
                    else if (r == 2 && s == 2) v = a;
                    else v = 1;
                    out.values[static_cast<std::size_t>((3 * i + r) * out.shape[1] + 3 * j + s)] = v;
                }
        }
    return out;
}

bool lambda_membership(Int m, Int n, int sign, ModelSetBranch branch) {
    if (sign != 1 && sign != -1) throw input_error("sign must be +1 or -1");
    while (true) {
        if (m == -1 && n == -1)
            return branch == ModelSetBranch::A_plus_nonempty ? sign > 0 : sign < 0;
        const Int r = floor_mod(m, 3), s = floor_mod(n, 3);
        if (r == 2 && s == 2) {
            m = floor_div(m - 2, 3);
            n = floor_div(n - 2, 3);
            continue;
        }
        if (r < 2 && s < 2) return sign < 0; // block value -1
        return sign > 0;                     // block value +1
    }
}

FiberReport fiber_statistics(const LatticePatch& patch, Int window, int samples,
                             std::uint64_t rng_seed) {
    if (patch.dim() != 2) throw input_error("fiber statistics needs a 2D patch");
    if (window < 1) throw input_error("window must be >= 1");
    if (samples < 1) throw input_error("need at least one sample");

    const LatticePatch image = psi(patch);
    const Int rows = image.shape[0] - window + 1;
    const Int cols = image.shape[1] - window + 1;
    if (rows < 1 || cols < 1) throw input_error("patch too small for the requested window");

    const Int icols = image.shape[1];
    const Int pcols = patch.shape[1];
    auto factor_window = [&](Int i, Int j) {
        std::vector<std::int8_t> w;
        w.reserve(static_cast<std::size_t>(window * window));
        for (Int a = 0; a < window; ++a)
            for (Int b = 0; b < window; ++b)
                w.push_back(image.values[static_cast<std::size_t>((i + a) * icols + j + b)]);
        return w;
    };
    auto source_window = [&](Int i, Int j) {
        std::vector<std::int8_t> w;
        w.reserve(static_cast<std::size_t>((window + 1) * (window + 1)));
        for (Int a = 0; a <= window; ++a)
            for (Int b = 0; b <= window; ++b)
                w.push_back(patch.values[static_cast<std::size_t>((i + a) * pcols + j + b)]);
        return w;
    };

    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<Int> pick_row(0, rows - 1), pick_col(0, cols - 1);

    FiberReport report;
    report.samples = samples;
    for (int s = 0; s < samples; ++s) {
        const Int ti = pick_row(rng), tj = pick_col(rng);
        const auto target = factor_window(ti, tj);
        std::set<std::vector<std::int8_t>> sources;
        for (Int i = 0; i < rows; ++i)
            for (Int j = 0; j < cols; ++j) {
                bool match = true;
                for (Int a = 0; match && a < window; ++a)
                    for (Int b = 0; b < window; ++b)
                        if (image.values[static_cast<std::size_t>((i + a) * icols + j + b)] !=
                            target[static_cast<std::size_t>(a * window + b)]) {
                            match = false;
                            break;
                        }
                if (match) sources.insert(source_window(i, j));
            }
        const int count = static_cast<int>(sources.size());
        report.max_preimages = std::max(report.max_preimages, count);
        report.min_preimages =
            report.min_preimages == 0 ? count : std::min(report.min_preimages, count);
        for (const auto& src : sources) {
            std::vector<std::int8_t> flipped(src.size());
            for (std::size_t k = 0; k < src.size(); ++k)
                flipped[k] = static_cast<std::int8_t>(-src[k]);
            if (!sources.count(flipped)) report.flip_closed = false;
        }
        if (count == 2) ++report.exactly_two;
        if (count > 2) ++report.more_than_two;
    }
    report.fraction_exactly_two =
        static_cast<double>(report.exactly_two) / static_cast<double>(samples);
    return report;
}

} // namespace squiral
