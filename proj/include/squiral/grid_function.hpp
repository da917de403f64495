#pragma once

#include "squiral/geometry.hpp"

#include <vector>

namespace squiral {

enum class GridKind { density, distribution };

// Sampled function on the uniform grid {k/G} of [0,1]^d. Densities are
// periodic and sampled at k in [0,G); distribution functions include the
// right endpoint, k in [0,G].
struct GridFunction {
    int dims = 0;
    Int resolution = 0; // G
    GridKind kind = GridKind::density;
    std::vector<double> samples; // flat row-major, last axis fastest

    Int points_per_axis() const {
        return kind == GridKind::density ? resolution : resolution + 1;
    }
    Int point_count() const {
        Int p = 1;
        for (int i = 0; i < dims; ++i) p *= points_per_axis();
        return p;
    }
    double at(const Point& k) const {
        Dims shape(static_cast<std::size_t>(dims), points_per_axis());
        return samples[flat_index(k, shape)];
    }
};

} // namespace squiral
