#pragma once

#include "squiral/geometry.hpp"

#include <cstdint>
#include <vector>

namespace squiral {

// A box of signs on Z^d with an explicit anchor: cell coordinates run over
// origin + [0, shape). Values are stored row-major, last axis fastest.
struct LatticePatch {
    Point origin;
    Dims shape;
    std::vector<std::int8_t> values;

    int dim() const { return static_cast<int>(shape.size()); }
    Int cells() const { return static_cast<Int>(values.size()); }

    bool contains(const Point& global) const {
        for (std::size_t i = 0; i < shape.size(); ++i)
            if (global[i] < origin[i] || global[i] >= origin[i] + shape[i]) return false;
        return true;
    }

    Int index_of(const Point& global) const {
        Int idx = 0;
        for (std::size_t i = 0; i < shape.size(); ++i) {
            Int rel = global[i] - origin[i];
            assert(rel >= 0 && rel < shape[i]);
            idx = idx * shape[i] + rel;
        }
        return idx;
    }

    std::int8_t at(const Point& global) const { return values[index_of(global)]; }
};

LatticePatch single_cell(int dims, std::int8_t value);

LatticePatch flipped(const LatticePatch& patch);

// Copy of the sub-box [lo, lo+shape) (must lie inside the patch).
LatticePatch restrict_to(const LatticePatch& patch, const Point& lo, const Dims& shape);

bool same_patch(const LatticePatch& a, const LatticePatch& b);

} // namespace squiral
