#pragma once

#include "squiral/errors.hpp"

#include <cassert>
#include <cstdint>
#include <vector>

namespace squiral {

using Int = std::int64_t;
using Point = std::vector<Int>; // lattice point, one entry per axis
using Dims = std::vector<Int>;  // positive extents, one entry per axis

inline Int checked_product(const Dims& d) {
    Int p = 1;
    for (Int x : d) {
        assert(x > 0);
        if (x != 0 && p > (Int{1} << 62) / x)
            throw budget_error("box size overflows index arithmetic");
        p *= x;
    }
    return p;
}

// Flat row-major index, last axis fastest.
inline Int flat_index(const Point& rel, const Dims& shape) {
    Int idx = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        assert(rel[i] >= 0 && rel[i] < shape[i]);
        idx = idx * shape[i] + rel[i];
    }
    return idx;
}

// Odometer over [0, shape); returns false after the last cell wraps to 0.
inline bool next_cell(Point& r, const Dims& shape) {
    for (std::size_t i = shape.size(); i-- > 0;) {
        if (++r[i] < shape[i]) return true;
        r[i] = 0;
    }
    return false;
}

inline Int floor_div(Int a, Int b) {
    assert(b > 0);
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline Int floor_mod(Int a, Int b) { return a - b * floor_div(a, b); }

// FNV-1a over coordinates; good enough for memo tables keyed by small points.
struct PointHash {
    std::size_t operator()(const Point& p) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (Int v : p) {
            std::uint64_t x = static_cast<std::uint64_t>(v);
            for (int k = 0; k < 8; ++k) {
                h ^= (x >> (8 * k)) & 0xff;
                h *= 0x100000001b3ull;
            }
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace squiral
