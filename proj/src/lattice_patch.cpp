#include "squiral/lattice_patch.hpp"

namespace squiral {

LatticePatch single_cell(int dims, std::int8_t value) {
    LatticePatch p;
    p.origin.assign(dims, 0);
    p.shape.assign(dims, 1);
    p.values.assign(1, value);
    return p;
}

LatticePatch flipped(const LatticePatch& patch) {
    LatticePatch out = patch;
    for (auto& v : out.values) v = static_cast<std::int8_t>(-v);
    return out;
}

LatticePatch restrict_to(const LatticePatch& patch, const Point& lo, const Dims& shape) {
    LatticePatch out;
    out.origin = lo;
    out.shape = shape;
    out.values.resize(checked_product(shape));
    Point rel(shape.size(), 0);
    Point global(shape.size());
    Int idx = 0;
    do {
        for (std::size_t i = 0; i < shape.size(); ++i) global[i] = lo[i] + rel[i];
        out.values[idx++] = patch.at(global);
    } while (next_cell(rel, shape));
    return out;
}

bool same_patch(const LatticePatch& a, const LatticePatch& b) {
    return a.origin == b.origin && a.shape == b.shape && a.values == b.values;
}

} // namespace squiral
