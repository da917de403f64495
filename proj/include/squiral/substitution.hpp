#pragma once

#include "squiral/block_map.hpp"
#include "squiral/lattice_patch.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace squiral {

std::size_t default_memory_budget(); // SQUIRAL_MEMORY_BUDGET env var, else 2 GiB

// One inflation step: output cell K*m + r carries kappa_r * (input cell m).
LatticePatch substitute(const LatticePatch& patch, const BlockMap& map);

// All distinct 2^d windows (flat values, lexicographic cell order) occurring
// in the n-fold images of either letter, n = 1..scan_cap. These are exactly
// the legal seed candidates; sorted ascending with -1 < +1.
std::vector<std::vector<std::int8_t>> legal_seed_windows(const BlockMap& map, int scan_cap = 4);

// A 2x...x2 seed whose central cells reproduce after `period` steps. The
// seeds are anchored at {-1,0}^d so each orthant of Z^d holds one cell;
// seeds[i+1] is the central restriction of one step applied to seeds[i].
struct SeedCycle {
    std::vector<LatticePatch> seeds;
    int period = 0;
};

// Searches the legal 2^d windows of the n-fold letter images (n up to
// scan_cap, both letters) for a seed with a finite substitution cycle.
// Candidates are ranked so that balanced inversion-symmetric windows come
// first; this pins down the canonical centered fixed point deterministically.
SeedCycle find_seed_cycle(const BlockMap& map, int scan_cap = 4, int period_cap = 64);

// n-fold image of the appropriate cycle element, covering [-K_i^n, K_i^n)
// per axis and extending seeds[0] at the center for every n (nested boxes).
LatticePatch generate_fixed_patch(const BlockMap& map, const SeedCycle& cycle, int iterations,
                                  std::size_t memory_budget = default_memory_budget());

} // namespace squiral
