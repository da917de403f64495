#pragma once

#include "squiral/coeff_table.hpp"

namespace squiral {

// Non-negative trigonometric kernel built from the zero-shift recursion
// coefficients: theta(x) = sum over signed r, |r_i| <= K_i - 1, of
// alpha(|r|, 0) * prod_i cos(2 pi r_i x_i). Constant term 1, so the kernel
// integrates to 1 over the torus.
struct TrigKernel {
    Dims size;                   // K per axis
    std::vector<Rational> coeff; // alpha(|r|, 0), flat over prod[0,K_i)

    int dim() const { return static_cast<int>(size.size()); }
    const Rational& at(const Point& abs_r) const { return coeff[flat_index(abs_r, size)]; }

    double eval(const std::vector<double>& x) const;

    // Kernel on the uniform G^d grid {k/G}, flat row-major (last axis fastest).
    std::vector<double> sample_grid(Int G) const;
};

TrigKernel build_kernel(const CoeffTable& coeffs);

} // namespace squiral
