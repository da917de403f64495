#pragma once

#include "squiral/eta_table.hpp"
#include "squiral/grid_function.hpp"
#include "squiral/kernel.hpp"
#include "squiral/series.hpp"

namespace squiral {

// Level-N density approximant f^(N)(x) = prod_{l=0}^{N-1} theta(K^l * x),
// sampled on the G^d grid. N = 0 gives the constant 1.
GridFunction density(const TrigKernel& kernel, int level, Int G, int threads = 1);

// Distribution approximant F^(N) from its sine series: F^(N)(x) =
// sum_m beta(m) prod_i g_{m_i}(x_i) with g_0(t) = t, g_m(t) = sin(2 pi m t)/(pi m).
GridFunction distribution(const SeriesCoeffs& series, Int G, int threads = 1);

// Distribution function straight from autocorrelation values, truncated to
// |m_i| <= M:  F(x) ~= sum_m eta(m) prod_i h_{m_i}(x_i), h_0(t) = t,
// h_m(t) = sin(2 pi m t)/(2 pi m). Valid for arguments outside [0,1] too.
GridFunction distribution_via_eta(const EtaTable& table, Int M, Int G, int threads = 1);
double distribution_via_eta_at(const EtaTable& table, Int M, const std::vector<double>& x);

// Cumulative trapezoidal integral of a periodic density sample; result is a
// distribution-kind grid on (G+1)^d points.
GridFunction cumulative_trapezoid(const GridFunction& dens);

struct MarginalReport {
    bool coefficients_exact = false;   // beta on each axis line == section series
    std::vector<double> max_deviation; // sampled |F^(N)(..,1,..) - Phi_N| per axis
    std::vector<double> phi_gaps;      // sup|Phi_{n+1} - Phi_n| for n = 1..level-1 (axis 0)
    bool suspicious = false;           // gaps fail to shrink: distribution route unreliable
};

// Cross-checks the marginals of the 2D approximant against the 1D axis
// sections, exactly at coefficient level and numerically on a grid.
MarginalReport marginal_check(const CoeffTable& coeffs, int level, Int G);

} // namespace squiral
