#pragma once

#include "squiral/geometry.hpp"

#include <cstdint>
#include <vector>

namespace squiral {

// A bijective binary block substitution on Z^d: the letter +1 maps to the
// sign array K (entries kappa_r), and -1 maps to the flipped array.
struct BlockMap {
    Dims size;                        // K_i per axis, each >= 2
    std::vector<std::int8_t> entries; // prod(size) signs, lexicographic, last axis fastest

    int dim() const { return static_cast<int>(size.size()); }
    Int cells() const { return static_cast<Int>(entries.size()); }

    std::int8_t entry(const Point& r) const { return entries[flat_index(r, size)]; }
};

// Throws input_error unless all K_i >= 2 and both signs occur.
void validate(const BlockMap& map);

// The 3x3 rule with -1 exactly where both coordinates are even.
BlockMap builtin_squiral();

BlockMap flipped(const BlockMap& map);

} // namespace squiral
