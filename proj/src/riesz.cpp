#include "squiral/riesz.hpp"

#include "squiral/errors.hpp"
#include "squiral/parallel.hpp"

#include <cmath>
#include <numbers>

namespace squiral {

namespace {

// Decode a flat index (last axis fastest) into per-axis digits.
void decode(Int flat, const Dims& shape, Point& out) {
    for (int i = static_cast<int>(shape.size()); i-- > 0;) {
        out[i] = flat % shape[i];
        flat /= shape[i];
    }
}

// Contract a flat row-major tensor along every axis in turn:
// out[..., j, ...] = sum_m line[m * cols + j] * data[..., m, ...].
// `shape` is updated in place; cols is the number of output samples per axis.
std::vector<double> contract_all_axes(std::vector<double> data, Dims shape,
                                      const std::vector<std::vector<double>>& lines, Int cols,
                                      int threads) {
    const int d = static_cast<int>(shape.size());
    for (int axis = 0; axis < d; ++axis) {
        Int lead = 1, trail = 1;
        for (int i = 0; i < axis; ++i) lead *= shape[i];
        for (int i = axis + 1; i < d; ++i) trail *= shape[i];
        const Int rows = shape[axis];
        const std::vector<double>& line = lines[axis];

        std::vector<double> next(static_cast<std::size_t>(lead * cols * trail), 0.0);
        parallel_for(lead * cols, threads, [&](Int lo, Int hi) {
            for (Int lj = lo; lj < hi; ++lj) {
                const Int l = lj / cols, j = lj % cols;
                double* out_row = next.data() + (l * cols + j) * trail;
                const double* base = data.data() + l * rows * trail;
                for (Int m = 0; m < rows; ++m) {
                    const double w = line[static_cast<std::size_t>(m * cols + j)];
                    if (w == 0.0) continue;
                    const double* in_row = base + m * trail;
                    for (Int t = 0; t < trail; ++t) out_row[t] += w * in_row[t];
                }
            }
        });
        data = std::move(next);
        shape[axis] = cols;
    }
    return data;
}

} // namespace

GridFunction density(const TrigKernel& kernel, int level, Int G, int threads) {
    const int d = kernel.dim();
    if (level < 0) throw input_error("density level must be >= 0");
    if (G < 2) throw input_error("grid resolution must be >= 2");
    const Dims grid_shape(d, G);
    const Int points = checked_product(grid_shape);

    GridFunction out;
    out.dims = d;
    out.resolution = G;
    out.kind = GridKind::density;
    out.samples.assign(static_cast<std::size_t>(points), 1.0);
    if (level == 0) return out;

    const std::vector<double> theta = kernel.sample_grid(G);

    // Multiply theta(K^l x) factor by factor; on the grid the argument map is
    // the exact index map k -> (K^l mod G) * k mod G per axis.
    std::vector<Int> strides(d);
    Int s = 1;
    for (int i = d - 1; i >= 0; --i) {
        strides[i] = s;
        s *= G;
    }
    std::vector<Int> scale(d, 1);
    for (int lev = 0; lev < level; ++lev) {
        // offset[i][k] = ((scale_i * k) mod G) * stride_i
        std::vector<std::vector<Int>> offset(d, std::vector<Int>(static_cast<std::size_t>(G)));
        for (int i = 0; i < d; ++i)
            for (Int k = 0; k < G; ++k)
                offset[i][static_cast<std::size_t>(k)] = ((scale[i] * k) % G) * strides[i];

        parallel_for(points, threads, [&](Int lo, Int hi) {
            Point k(d);
            for (Int flat = lo; flat < hi; ++flat) {
                decode(flat, grid_shape, k);
                Int mapped = 0;
                for (int i = 0; i < d; ++i) mapped += offset[i][static_cast<std::size_t>(k[i])];
                out.samples[static_cast<std::size_t>(flat)] *=
                    theta[static_cast<std::size_t>(mapped)];
            }
        });
        for (int i = 0; i < d; ++i) scale[i] = (scale[i] * (kernel.size[i] % G)) % G;
    }
    return out;
}

GridFunction distribution(const SeriesCoeffs& series, Int G, int threads) {
    const int d = series.dim();
    if (G < 2) throw input_error("grid resolution must be >= 2");
    const Int cols = G + 1;

    // g_m(j/G) tables per axis: g_0(t) = t, g_m(t) = sin(2 pi m t) / (pi m).
    std::vector<std::vector<double>> lines(d);
    for (int axis = 0; axis < d; ++axis) {
        const Int rows = series.table_shape[axis];
        lines[axis].resize(static_cast<std::size_t>(rows * cols));
        for (Int m = 0; m < rows; ++m)
            for (Int j = 0; j <= G; ++j) {
                const double t = static_cast<double>(j) / static_cast<double>(G);
                lines[axis][static_cast<std::size_t>(m * cols + j)] =
                    m == 0 ? t
                           : std::sin(2.0 * std::numbers::pi * static_cast<double>(m) * t) /
                                 (std::numbers::pi * static_cast<double>(m));
            }
    }

    std::vector<double> data;
    data.reserve(series.beta.size());
    for (const Rational& b : series.beta) data.push_back(to_double(b));

    GridFunction out;
    out.dims = d;
    out.resolution = G;
    out.kind = GridKind::distribution;
    out.samples = contract_all_axes(std::move(data), series.table_shape, lines, cols, threads);
    return out;
}

namespace {

// h_m tables over signed m in [-M, M] for arbitrary real arguments.
double h_factor(Int m, double t) {
    return m == 0 ? t
                  : std::sin(2.0 * std::numbers::pi * static_cast<double>(m) * t) /
                        (2.0 * std::numbers::pi * static_cast<double>(m));
}

std::vector<double> eta_box_doubles(const EtaTable& table, Int M) {
    const int d = table.dim();
    const Dims shape(d, 2 * M + 1);
    const Int cells = checked_product(shape);
    std::vector<double> out(static_cast<std::size_t>(cells));
    Point rel(d, 0);
    Int flat = 0;
    do {
        Point m(d);
        for (int i = 0; i < d; ++i) m[i] = rel[i] - M;
        out[static_cast<std::size_t>(flat++)] = to_double(table.eta(m));
    } while (next_cell(rel, shape));
    return out;
}

} // namespace

GridFunction distribution_via_eta(const EtaTable& table, Int M, Int G, int threads) {
    const int d = table.dim();
    if (M < 0) throw input_error("truncation order must be >= 0");
    if (G < 2) throw input_error("grid resolution must be >= 2");
    const Int rows = 2 * M + 1, cols = G + 1;

    std::vector<std::vector<double>> lines(d);
    for (int axis = 0; axis < d; ++axis) {
        lines[axis].resize(static_cast<std::size_t>(rows * cols));
        for (Int m = -M; m <= M; ++m)
            for (Int j = 0; j <= G; ++j)
                lines[axis][static_cast<std::size_t>((m + M) * cols + j)] =
                    h_factor(m, static_cast<double>(j) / static_cast<double>(G));
    }

    GridFunction out;
    out.dims = d;
    out.resolution = G;
    out.kind = GridKind::distribution;
    out.samples = contract_all_axes(eta_box_doubles(table, M), Dims(d, rows), lines, cols, threads);
    return out;
}

double distribution_via_eta_at(const EtaTable& table, Int M, const std::vector<double>& x) {
    const int d = table.dim();
    if (static_cast<int>(x.size()) != d) throw input_error("evaluation point dimension mismatch");
    if (M < 0) throw input_error("truncation order must be >= 0");

    // Axis-by-axis contraction of the eta box against h_{m_i}(x_i).
    const Int rows = 2 * M + 1;
    std::vector<double> data = eta_box_doubles(table, M);
    Int cells = 1;
    for (int i = 0; i < d; ++i) cells *= rows;
    for (int axis = d - 1; axis >= 0; --axis) {
        std::vector<double> h(static_cast<std::size_t>(rows));
        for (Int m = -M; m <= M; ++m) h[static_cast<std::size_t>(m + M)] = h_factor(m, x[axis]);
        cells /= rows;
        std::vector<double> next(static_cast<std::size_t>(cells), 0.0);
        for (Int c = 0; c < cells; ++c) {
            double acc = 0.0;
            const double* row = data.data() + c * rows;
            for (Int m = 0; m < rows; ++m) acc += row[m] * h[static_cast<std::size_t>(m)];
            next[static_cast<std::size_t>(c)] = acc;
        }
        data = std::move(next);
    }
    return data[0];
}

GridFunction cumulative_trapezoid(const GridFunction& dens) {
    if (dens.kind != GridKind::density) throw input_error("expected a density grid");
    const int d = dens.dims;
    const Int G = dens.resolution;
    const Dims ext_shape(d, G + 1);
    const Dims in_shape(d, G);

    GridFunction out;
    out.dims = d;
    out.resolution = G;
    out.kind = GridKind::distribution;
    out.samples.assign(static_cast<std::size_t>(checked_product(ext_shape)), 0.0);

    // Periodic extension onto the closed grid.
    {
        Point k(d, 0);
        Int flat = 0;
        do {
            Point src(d);
            for (int i = 0; i < d; ++i) src[i] = k[i] % G;
            out.samples[static_cast<std::size_t>(flat++)] =
                dens.samples[static_cast<std::size_t>(flat_index(src, in_shape))];
        } while (next_cell(k, ext_shape));
    }

    // Running trapezoidal sums along each axis in turn, step 1/G.
    const double h = 1.0 / static_cast<double>(G);
    for (int axis = 0; axis < d; ++axis) {
        Int lead = 1, trail = 1;
        for (int i = 0; i < axis; ++i) lead *= G + 1;
        for (int i = axis + 1; i < d; ++i) trail *= G + 1;
        for (Int l = 0; l < lead; ++l)
            for (Int t = 0; t < trail; ++t) {
                double* line = out.samples.data() + l * (G + 1) * trail + t;
                double prev = line[0];
                line[0] = 0.0;
                for (Int j = 1; j <= G; ++j) {
                    const double cur = line[j * trail];
                    line[j * trail] = line[(j - 1) * trail] + 0.5 * h * (prev + cur);
                    prev = cur;
                }
            }
    }
    return out;
}

MarginalReport marginal_check(const CoeffTable& coeffs, int level, Int G) {
    if (coeffs.dim() != 2) throw input_error("marginal check needs a two-dimensional rule");
    if (level < 2) throw input_error("marginal check needs level >= 2");

    MarginalReport report;
    const SeriesCoeffs full = series_coeffs(coeffs, level);
    const CoeffTable sec0 = axis_section(coeffs, 0);
    const CoeffTable sec1 = axis_section(coeffs, 1);
    const SeriesCoeffs line0 = series_coeffs(sec0, level);
    const SeriesCoeffs line1 = series_coeffs(sec1, level);

    // Exact identity: the axis lines of beta reproduce the section series.
    report.coefficients_exact = true;
    for (Int m = 0; m < full.table_shape[0]; ++m)
        if (full.at({m, 0}) != line0.at({m})) report.coefficients_exact = false;
    for (Int m = 0; m < full.table_shape[1]; ++m)
        if (full.at({0, m}) != line1.at({m})) report.coefficients_exact = false;

    // Numeric cross-check of F^(N)(x, 1) and F^(N)(1, y) against the 1D route.
    const GridFunction f2 = distribution(full, G);
    const GridFunction phi0 = distribution(line0, G);
    const GridFunction phi1 = distribution(line1, G);
    double dev0 = 0.0, dev1 = 0.0;
    for (Int k = 0; k <= G; ++k) {
        dev0 = std::max(dev0, std::abs(f2.at({k, G}) - phi0.at({k})));
        dev1 = std::max(dev1, std::abs(f2.at({G, k}) - phi1.at({k})));
    }
    report.max_deviation = {dev0, dev1};

    // Convergence of the 1D approximants on axis 0.
    for (int n = 1; n < level; ++n) {
        const GridFunction a = distribution(series_coeffs(sec0, n), G);
        const GridFunction b = distribution(series_coeffs(sec0, n + 1), G);
        double gap = 0.0;
        for (Int k = 0; k <= G; ++k) gap = std::max(gap, std::abs(a.at({k}) - b.at({k})));
        report.phi_gaps.push_back(gap);
    }
    report.suspicious = report.phi_gaps.size() >= 2 &&
                        report.phi_gaps.back() > 0.6 * report.phi_gaps.front();
    return report;
}

} // namespace squiral
