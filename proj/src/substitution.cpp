#include "squiral/substitution.hpp"

#include "squiral/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

namespace squiral {

std::size_t default_memory_budget() {
    if (const char* env = std::getenv("SQUIRAL_MEMORY_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw input_error("SQUIRAL_MEMORY_BUDGET must be a positive byte count");
    }
    return std::size_t{2} << 30;
}

LatticePatch substitute(const LatticePatch& patch, const BlockMap& map) {
    const int d = patch.dim();
    if (d != map.dim()) throw input_error("patch and block map dimensions differ");
    LatticePatch out;
    out.origin.resize(d);
    out.shape.resize(d);
    for (int i = 0; i < d; ++i) {
        if (patch.shape[i] > (Int{1} << 40) / map.size[i])
            throw budget_error("substituted patch exceeds index range");
        out.origin[i] = map.size[i] * patch.origin[i];
        out.shape[i] = map.size[i] * patch.shape[i];
    }
    out.values.resize(checked_product(out.shape));

    Point rel(d, 0), scaled(d), r(d, 0);
    Int in_idx = 0;
    do {
        const std::int8_t v = patch.values[in_idx++];
        for (int i = 0; i < d; ++i) scaled[i] = map.size[i] * rel[i];
        std::fill(r.begin(), r.end(), 0);
        Int block_idx = 0;
        do {
            Int idx = 0;
            for (int i = 0; i < d; ++i) idx = idx * out.shape[i] + scaled[i] + r[i];
            out.values[idx] = static_cast<std::int8_t>(map.entries[block_idx++] * v);
        } while (next_cell(r, map.size));
    } while (next_cell(rel, patch.shape));
    return out;
}

std::vector<std::vector<std::int8_t>> legal_seed_windows(const BlockMap& map, int scan_cap) {
    const int d = map.dim();
    const Dims win_shape(d, 2);
    std::set<std::vector<std::int8_t>> found;
    LatticePatch patch = single_cell(d, 1);
    for (int n = 1; n <= scan_cap; ++n) {
        patch = substitute(patch, map);
        Dims starts(d);
        for (int i = 0; i < d; ++i) starts[i] = patch.shape[i] - 1;
        Point lo(d, 0);
        do {
            Point global(d);
            for (int i = 0; i < d; ++i) global[i] = patch.origin[i] + lo[i];
            LatticePatch w = restrict_to(patch, global, win_shape);
            found.insert(w.values);
            for (auto& v : w.values) v = static_cast<std::int8_t>(-v);
            found.insert(w.values); // windows of the flipped letter image
        } while (next_cell(lo, starts));
    }
    return {found.begin(), found.end()};
}

namespace {

bool is_balanced(const std::vector<std::int8_t>& v) {
    Int sum = 0;
    for (auto x : v) sum += x;
    return sum == 0;
}

// Invariance under the central inversion c -> -1-c of the seed box, which
// reverses every axis and hence the flat value order.
bool is_inversion_symmetric(const std::vector<std::int8_t>& v) {
    for (std::size_t i = 0, j = v.size() - 1; i < j; ++i, --j)
        if (v[i] != v[j]) return false;
    return true;
}

int seed_rank(const std::vector<std::int8_t>& v) {
    const bool bal = is_balanced(v), inv = is_inversion_symmetric(v);
    if (bal && inv) return 0;
    if (inv) return 1;
    if (bal) return 2;
    return 3;
}

// Central 2^d cells of a patch, re-anchored at {-1,0}^d.
LatticePatch central_seed(const LatticePatch& patch) {
    const int d = patch.dim();
    return restrict_to(patch, Point(d, -1), Dims(d, 2));
}

} // namespace

SeedCycle find_seed_cycle(const BlockMap& map, int scan_cap, int period_cap) {
    validate(map);
    const int d = map.dim();
    auto windows = legal_seed_windows(map, scan_cap);
    std::stable_sort(windows.begin(), windows.end(),
                     [](const auto& a, const auto& b) {
                         int ra = seed_rank(a), rb = seed_rank(b);
                         return ra != rb ? ra < rb : a < b;
                     });

    for (const auto& values : windows) {
        LatticePatch seed;
        seed.origin.assign(d, -1);
        seed.shape.assign(d, 2);
        seed.values = values;

        SeedCycle cycle;
        cycle.seeds.push_back(seed);
        LatticePatch cur = seed;
        for (int step = 1; step <= period_cap; ++step) {
            cur = central_seed(substitute(cur, map));
            if (same_patch(cur, seed)) {
                cycle.period = step;
                return cycle;
            }
            cycle.seeds.push_back(cur);
        }
    }
    throw internal_error("no seed cycle within caps (scan " + std::to_string(scan_cap) +
                         ", period " + std::to_string(period_cap) + ")");
}

LatticePatch generate_fixed_patch(const BlockMap& map, const SeedCycle& cycle, int iterations,
                                  std::size_t memory_budget) {
    if (iterations < 1) throw input_error("iterations must be >= 1");
    if (cycle.period < 1 || cycle.seeds.empty()) throw input_error("invalid seed cycle");

    std::size_t bytes = 1;
    for (int i = 0; i < map.dim(); ++i) {
        double side = 2.0;
        for (int n = 0; n < iterations; ++n) side *= static_cast<double>(map.size[i]);
        if (side > 1e18 || (bytes = static_cast<std::size_t>(side) * bytes) > memory_budget)
            throw budget_error("fixed patch exceeds memory budget");
    }

    // Start from the cycle element that lands back on seeds[0] after
    // `iterations` steps, so all generated boxes are nested around it.
    const int phase = (cycle.period - iterations % cycle.period) % cycle.period;
    LatticePatch patch = cycle.seeds[static_cast<std::size_t>(phase) % cycle.seeds.size()];
    for (int n = 0; n < iterations; ++n) patch = substitute(patch, map);

    return patch;
}

} // namespace squiral
