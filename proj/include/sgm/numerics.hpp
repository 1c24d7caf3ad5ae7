#pragma once

#include <cstdint>
#include <functional>

// Small self-contained numeric kernels shared by the model/bound modules.
// Everything here is deterministic: same inputs, same bits.

namespace sgm::num {

// Hurwitz zeta  zeta(s, q) = sum_{j>=0} (q + j)^{-s}  for s > 1, q > 0.
// Euler-Maclaurin with a short leading sum; ~1e-15 relative accuracy.
double hurwitz_zeta(double s, double q);

// Gauss hypergeometric 2F1(a, b; c; w) by direct series.
// Intended for a, b, c > 0 and 0 <= w <= 0.6 (positive terms, geometric decay).
double gauss_2f1_pos(double a, double b, double c, double w);

// sum_{k>N} k^mu * rho^k for 0 < rho < 1, mu >= 0.
// Returns an upper envelope: the partial sum plus a rigorous geometric
// remainder bound, so the result is >= the true tail (relative overshoot
// below 1e-15 in practice).
double poly_geometric_tail(std::int64_t n, double mu, double rho);

// Adaptive Simpson quadrature of f over [lo, hi].
double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                        double rel_tol, int max_depth = 48);

struct MinResult {
    double x = 0.0;
    double fx = 0.0;
};

// Golden-section minimum of a unimodal f on [lo, hi]; rel_tol is on x.
MinResult golden_min(const std::function<double(double)>& f, double lo, double hi,
                     double rel_tol, int max_iter = 400);

// Minimum of a convex f over (0, inf): bracket by doubling from x0, then
// golden-section refinement. f(0+) need not be finite; lo edge stays > 0.
MinResult golden_min_positive(const std::function<double(double)>& f, double x0,
                              double rel_tol, int max_iter = 400);

// Counter-based deterministic draws: the value for (seed, path, k) does not
// depend on how many other draws were made (couples models across N).
std::uint64_t mix64(std::uint64_t seed, std::uint64_t path, std::uint64_t k);
double uniform01(std::uint64_t key);                                         // in (0,1)
double gaussian_draw(std::uint64_t seed, std::uint64_t path, std::uint64_t k);  // N(0,1)
double uniform_sym_draw(std::uint64_t seed, std::uint64_t path, std::uint64_t k);  // U(-1,1)

// Max of f over [0, T]: 4097-point scan plus one golden refinement pass in
// the winning cell. A lower envelope of the true sup; used as a test oracle
// and as the default for user-supplied coefficient handles.
double grid_sup(const std::function<double(double)>& f, double T);

}  // namespace sgm::num
