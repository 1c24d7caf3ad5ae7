#pragma once

#include <cstdint>
#include <vector>

namespace sgm::orlicz {

enum class PhiClass : std::uint8_t {
    PowerAtLeastTwo,   // exponent >= 2, pairs with quadratic norm sums
    PowerBetweenOneTwo // exponent in (1, 2], pairs with matching-power sums
};

// phi(t) = |t|^zeta / zeta, zeta > 1
struct PhiFunction {
    double zeta = 2.0;
    PhiClass cls = PhiClass::PowerAtLeastTwo;

    double operator()(double t) const;
    double conjugate(double t) const;        // |t|^(zeta/(zeta-1)) * (zeta-1)/zeta
    double conjugate_exponent() const;       // zeta/(zeta-1)
    double sum_exponent() const;             // 2 for PowerAtLeastTwo, zeta otherwise
};

PhiFunction phi_power(double zeta);

// s admissible for the norm-sum inequality under phi
bool phi_sum_exponent_valid(const PhiFunction& phi, double s);

enum class CoefDist : std::uint8_t {
    StandardGaussian,
    SymmetricBounded
};

// independent centered xi_k with sub-gaussian standard tau_k
struct RandomCoefficient {
    CoefDist dist = CoefDist::StandardGaussian;
    double param = 1.0; // scale for gaussian, halfwidth for bounded
    double tau = 1.0;
};

RandomCoefficient coef_gaussian(double scale);
RandomCoefficient coef_bounded(double halfwidth);

// ( sum_k (|w_k| tau_k)^s )^(1/s)
double sum_standard(const std::vector<double>& taus, const std::vector<double>& weights, double s);

} // namespace sgm::orlicz
