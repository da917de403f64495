#include "squiral/kernel.hpp"

#include "squiral/errors.hpp"

#include <cmath>
#include <numbers>

namespace squiral {

TrigKernel build_kernel(const CoeffTable& coeffs) {
    TrigKernel kernel;
    kernel.size = coeffs.size;
    const Int cells = checked_product(coeffs.size);
    kernel.coeff.reserve(static_cast<std::size_t>(cells));
    for (Int r = 0; r < cells; ++r) kernel.coeff.push_back(coeffs.at(r, 0));
    return kernel;
}

namespace {

// Sum over signed r with |r_i| < K_i of coeff(|r|) * prod_i cos(2 pi r_i x_i).
// Signed tuples fold into the absolute table with multiplicity
// 2^{#nonzero components}; cosines[i][a] holds cos(2 pi a x_i).
double fold_signed(const Dims& size, const std::vector<double>& coeff,
                   const std::vector<std::vector<double>>& cosines) {
    const int d = static_cast<int>(size.size());
    double total = 0.0;
    Point a(d, 0);
    std::size_t flat = 0;
    do {
        const double c = coeff[flat++];
        if (c != 0.0) {
            double prod = c;
            for (int i = 0; i < d; ++i) {
                prod *= cosines[i][static_cast<std::size_t>(a[i])];
                if (a[i] != 0) prod *= 2.0;
            }
            total += prod;
        }
    } while (next_cell(a, size));
    return total;
}

std::vector<double> to_doubles(const std::vector<Rational>& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const Rational& r : v) out.push_back(to_double(r));
    return out;
}

} // namespace

double TrigKernel::eval(const std::vector<double>& x) const {
    const int d = dim();
    if (static_cast<int>(x.size()) != d) throw input_error("evaluation point dimension mismatch");
    std::vector<std::vector<double>> cosines(d);
    for (int i = 0; i < d; ++i) {
        cosines[i].resize(static_cast<std::size_t>(size[i]));
        for (Int a = 0; a < size[i]; ++a)
            cosines[i][static_cast<std::size_t>(a)] =
                std::cos(2.0 * std::numbers::pi * static_cast<double>(a) * x[i]);
    }
    return fold_signed(size, to_doubles(coeff), cosines);
}

std::vector<double> TrigKernel::sample_grid(Int G) const {
    const int d = dim();
    if (G < 1) throw input_error("grid resolution must be >= 1");
    const Dims grid_shape(d, G);
    const Int points = checked_product(grid_shape);
    const std::vector<double> c = to_doubles(coeff);

    // cos(2 pi a k / G) per axis, indexed [a * G + k].
    std::vector<std::vector<double>> lines(d);
    for (int i = 0; i < d; ++i) {
        lines[i].resize(static_cast<std::size_t>(size[i] * G));
        for (Int a = 0; a < size[i]; ++a)
            for (Int k = 0; k < G; ++k)
                lines[i][static_cast<std::size_t>(a * G + k)] =
                    std::cos(2.0 * std::numbers::pi * static_cast<double>(a) *
                             static_cast<double>(k) / static_cast<double>(G));
    }

    std::vector<double> out(static_cast<std::size_t>(points), 0.0);
    std::vector<std::vector<double>> cosines(d);
    for (int i = 0; i < d; ++i) cosines[i].resize(static_cast<std::size_t>(size[i]));

    Point k(d, 0);
    std::size_t idx = 0;
    do {
        for (int i = 0; i < d; ++i)
            for (Int a = 0; a < size[i]; ++a)
                cosines[i][static_cast<std::size_t>(a)] =
                    lines[i][static_cast<std::size_t>(a * G + k[i])];
        out[idx++] = fold_signed(size, c, cosines);
    } while (next_cell(k, grid_shape));
    return out;
}

} // namespace squiral
