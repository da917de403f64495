#include "squiral/eta_table.hpp"

#include "squiral/errors.hpp"

#include <utility>

namespace squiral {

namespace {

// Flat index of m in {-1,0,1}^d, lexicographic with the last axis fastest.
std::size_t core_index(const Point& m) {
    std::size_t idx = 0;
    for (Int c : m) idx = idx * 3 + static_cast<std::size_t>(c + 1);
    return idx;
}

} // namespace

std::vector<Rational> solve_core(const CoeffTable& coeffs) {
    const int d = coeffs.dim();
    std::size_t n = 1;
    for (int i = 0; i < d; ++i) n *= 3;

    // Row for m: eta(m) - sum_s alpha(r, s) eta(q + s) = 0 with m = K*q + r,
    // except the normalization row eta(0) = 1.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1, Rational(0)));
    const Dims box(d, 3);
    Point rel(d, 0);
    do {
        Point m(d), q(d), r(d);
        bool origin = true;
        for (int i = 0; i < d; ++i) {
            m[i] = rel[i] - 1;
            q[i] = floor_div(m[i], coeffs.size[i]);
            r[i] = m[i] - coeffs.size[i] * q[i];
            origin = origin && m[i] == 0;
        }
        const std::size_t row = core_index(m);
        if (origin) {
            a[row][row] = 1;
            a[row][n] = 1;
            continue;
        }
        a[row][row] += 1;
        for (unsigned s = 0; s < coeffs.shift_count(); ++s) {
            const Rational& alpha = coeffs.at(r, s);
            if (alpha == 0) continue;
            Point target(d);
            for (int i = 0; i < d; ++i) target[i] = q[i] + ((s >> i) & 1);
            a[row][core_index(target)] -= alpha;
        }
    } while (next_cell(rel, box));

    // Exact Gaussian elimination with partial (first nonzero) pivoting.
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw internal_error("recursion does not determine the core system");
        if (pivot != col) std::swap(a[pivot], a[col]);
        const Rational inv = a[col][col];
        for (std::size_t j = col; j <= n; ++j) a[col][j] /= inv;
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            const Rational f = a[i][col];
            for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational v = a[i][n];
        for (std::size_t j = i + 1; j < n; ++j) v -= a[i][j] * x[j];
        x[i] = std::move(v);
    }
    return x;
}

EtaTable::EtaTable(CoeffTable coeffs, std::size_t memo_budget_entries)
    : coeffs_(std::move(coeffs)), core_(solve_core(coeffs_)), memo_budget_(memo_budget_entries) {}

Rational EtaTable::eta(const Point& m) const {
    if (static_cast<int>(m.size()) != dim()) throw input_error("lag dimension mismatch");
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    return eta_locked(m);
}

Rational EtaTable::eta_locked(const Point& m) const {
    bool in_core = true;
    for (Int c : m)
        if (c < -1 || c > 1) {
            in_core = false;
            break;
        }
    if (in_core) return core_[core_index(m)];

    if (auto it = memo_.find(m); it != memo_.end()) return it->second;

    const int d = dim();
    Point q(d), r(d);
    for (int i = 0; i < d; ++i) {
        q[i] = floor_div(m[i], coeffs_.size[i]);
        r[i] = m[i] - coeffs_.size[i] * q[i];
    }
    Rational acc(0);
    Point target(d);
    for (unsigned s = 0; s < coeffs_.shift_count(); ++s) {
        const Rational& alpha = coeffs_.at(r, s);
        if (alpha == 0) continue;
        for (int i = 0; i < d; ++i) target[i] = q[i] + ((s >> i) & 1);
        acc += alpha * eta_locked(target);
    }
    if (memo_.size() >= memo_budget_)
        throw budget_error("autocorrelation memo budget exceeded");
    memo_.emplace(m, acc);
    return acc;
}

std::size_t EtaTable::memo_size() const {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    return memo_.size();
}

double eta_bruteforce(const LatticePatch& patch, const Point& m, Int window) {
    const int d = patch.dim();
    if (static_cast<int>(m.size()) != d) throw input_error("lag dimension mismatch");
    if (window < 1) throw input_error("window must be >= 1");
    for (int i = 0; i < d; ++i) {
        const Int lo = std::min<Int>(0, m[i]);
        const Int hi = std::max<Int>(window, window + m[i]); // exclusive
        if (patch.origin[i] > lo || patch.origin[i] + patch.shape[i] < hi)
            throw input_error("patch does not cover the averaging window and its shift");
    }

    std::vector<Int> stride(d);
    Int s = 1;
    for (int i = d - 1; i >= 0; --i) {
        stride[i] = s;
        s *= patch.shape[i];
    }
    Int base_a = 0, base_b = 0;
    for (int i = 0; i < d; ++i) {
        base_a += (0 - patch.origin[i]) * stride[i];
        base_b += (m[i] - patch.origin[i]) * stride[i];
    }

    const auto& v = patch.values;
    Int total = 0;
    // Row-recursive walk with a tight unit-stride inner loop.
    auto walk = [&](auto&& self, int axis, Int off_a, Int off_b) -> void {
        if (axis == d - 1) {
            Int acc = 0;
            for (Int k = 0; k < window; ++k)
                acc += static_cast<Int>(v[off_a + k]) * v[off_b + k];
            total += acc;
            return;
        }
        for (Int k = 0; k < window; ++k)
            self(self, axis + 1, off_a + k * stride[axis], off_b + k * stride[axis]);
    };
    walk(walk, 0, base_a, base_b);

    double card = 1.0;
    for (int i = 0; i < d; ++i) card *= static_cast<double>(window);
    return static_cast<double>(total) / card;
}

} // namespace squiral
