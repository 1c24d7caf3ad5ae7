#include "sgm/orlicz.hpp"

#include <cmath>
#include <stdexcept>

namespace sgm::orlicz {

double PhiFunction::operator()(double t) const {
    return std::pow(std::fabs(t), zeta) / zeta;
}

double PhiFunction::conjugate_exponent() const {
    return zeta / (zeta - 1.0);
}

double PhiFunction::conjugate(double t) const {
    const double q = conjugate_exponent();
    return std::pow(std::fabs(t), q) / q;
}

double PhiFunction::sum_exponent() const {
    return cls == PhiClass::PowerAtLeastTwo ? 2.0 : zeta;
}

PhiFunction phi_power(double zeta) {
    if (!(zeta > 1.0)) throw std::invalid_argument("phi_power: zeta must exceed 1");
    PhiFunction phi;
    phi.zeta = zeta;
    phi.cls = zeta >= 2.0 ? PhiClass::PowerAtLeastTwo : PhiClass::PowerBetweenOneTwo;
    return phi;
}

bool phi_sum_exponent_valid(const PhiFunction& phi, double s) {
    if (!(s > 0.0) || s > 2.0) return false;
    return phi.zeta >= s;
}

RandomCoefficient coef_gaussian(double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("coef_gaussian: scale must be positive");
    return RandomCoefficient{CoefDist::StandardGaussian, scale, scale};
}

RandomCoefficient coef_bounded(double halfwidth) {
    if (!(halfwidth > 0.0)) throw std::invalid_argument("coef_bounded: halfwidth must be positive");
    return RandomCoefficient{CoefDist::SymmetricBounded, halfwidth, halfwidth};
}

double sum_standard(const std::vector<double>& taus, const std::vector<double>& weights, double s) {
    if (taus.size() != weights.size())
        throw std::invalid_argument("sum_standard: size mismatch");
    if (!(s > 0.0)) throw std::invalid_argument("sum_standard: s must be positive");
    double acc = 0.0;
    for (std::size_t k = 0; k < taus.size(); ++k)
        acc += std::pow(std::fabs(weights[k]) * taus[k], s);
    return std::pow(acc, 1.0 / s);
}

} // namespace sgm::orlicz
