#pragma once

#include <cstdint>

namespace sgm::geometry {

// the interval (0, T) with |t - s| distance
struct IntervalSpace {
    double T = 1.0;
};

// covering count bound N(u) <= T/(2u) + 1 for u <= T/2
double covering_count(const IntervalSpace& space, double u);

// exact minimal closed-ball covering count ceil(T/(2u))
std::int64_t covering_count_exact(const IntervalSpace& space, double u);

// sigma(h) = C h^alpha, C >= 0, 0 < alpha < 1
struct Modulus {
    double C = 1.0;
    double alpha = 1.0;

    double operator()(double h) const;
    double inverse(double y) const; // (y/C)^(1/alpha)
};

// beta = sigma(T/2), the span of the entropy integral
double beta_span(const IntervalSpace& space, const Modulus& mod);

// weight r(t) = t^a with 0 < a < alpha
struct PowerWeight {
    double a = 0.5;

    double operator()(double t) const;
    double inverse(double y) const;
};

// I(U) = integral_0^U r(N(sigma^{-1}(u))) du for the interval space
double entropy_integral(const IntervalSpace& space, const Modulus& mod, const PowerWeight& r,
                        double U);

// same integral by adaptive quadrature, for cross checks
double entropy_integral_quad(const IntervalSpace& space, const Modulus& mod, const PowerWeight& r,
                             double U, double rel_tol = 1e-12);

// r^{-1}( I(beta p) / (beta p) ), depends only on (alpha, a, p)
double averaged_entropy_factor(const IntervalSpace& space, const Modulus& mod,
                               const PowerWeight& r, double p);

// 2 (e/p)^(1/alpha), the a -> 0 limit of the averaged factor
double limiting_entropy_factor(double alpha, double p);

} // namespace sgm::geometry
