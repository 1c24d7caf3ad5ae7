#include "sgm/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "sgm/numerics.hpp"

namespace sgm::geometry {

namespace {

void check_space(const IntervalSpace& space) {
    if (!(space.T > 0.0)) throw std::invalid_argument("geometry: T must be positive");
}

void check_modulus(const Modulus& mod) {
    if (!(mod.C >= 0.0))
        throw std::invalid_argument("geometry: modulus constant must be non-negative");
    if (!(mod.alpha > 0.0) || !(mod.alpha < 1.0))
        throw std::invalid_argument("geometry: modulus exponent must lie in (0, 1)");
}

} // namespace

double covering_count(const IntervalSpace& space, double u) {
    check_space(space);
    if (!(u > 0.0)) throw std::invalid_argument("geometry: radius must be positive");
    return space.T / (2.0 * u) + 1.0;
}

std::int64_t covering_count_exact(const IntervalSpace& space, double u) {
    check_space(space);
    if (!(u > 0.0)) throw std::invalid_argument("geometry: radius must be positive");
    if (u >= space.T / 2.0) return 1;
    return static_cast<std::int64_t>(std::ceil(space.T / (2.0 * u)));
}

double Modulus::operator()(double h) const {
    return C * std::pow(h, alpha);
}

double Modulus::inverse(double y) const {
    if (!(C > 0.0)) throw std::invalid_argument("geometry: cannot invert a zero modulus");
    return std::pow(y / C, 1.0 / alpha);
}

double beta_span(const IntervalSpace& space, const Modulus& mod) {
    check_space(space);
    check_modulus(mod);
    return mod(space.T / 2.0);
}

double PowerWeight::operator()(double t) const {
    return std::pow(t, a);
}

double PowerWeight::inverse(double y) const {
    return std::pow(y, 1.0 / a);
}

namespace {

void check_weight(const Modulus& mod, const PowerWeight& r) {
    if (!(r.a > 0.0) || !(r.a < mod.alpha))
        throw std::invalid_argument("geometry: weight exponent must lie in (0, alpha)");
}

} // namespace

double entropy_integral(const IntervalSpace& space, const Modulus& mod, const PowerWeight& r,
                        double U) {
    check_space(space);
    check_modulus(mod);
    check_weight(mod, r);
    if (!(U > 0.0)) throw std::invalid_argument("geometry: integral endpoint must be positive");

    // I(U) = alpha beta int_0^z (1+w)^a w^(c-1) dw, z = (U/beta)^(1/alpha), c = alpha - a
    const double beta = beta_span(space, mod);
    if (beta == 0.0) return U; // flat modulus: one ball covers, integrand is 1
    const double z = std::pow(U / beta, 1.0 / mod.alpha);
    const double c = mod.alpha - r.a;
    const double arg = z / (1.0 + z);
    if (arg > 0.6) return entropy_integral_quad(space, mod, r, U, 1e-13);
    const double hyp = num::gauss_2f1_pos(r.a + c + 1.0, c, c + 1.0, arg);
    return mod.alpha * beta * std::pow(z, c) / c * std::pow(1.0 + z, -c) * hyp;
}

double entropy_integral_quad(const IntervalSpace& space, const Modulus& mod, const PowerWeight& r,
                             double U, double rel_tol) {
    check_space(space);
    check_modulus(mod);
    check_weight(mod, r);
    if (!(U > 0.0)) throw std::invalid_argument("geometry: integral endpoint must be positive");

    // substitute v = u^(1 - a/alpha); the transformed integrand
    // (1/w)(v^(1/(w alpha)) + beta^(1/alpha))^a is finite on [0, U^w]
    const double w = 1.0 - r.a / mod.alpha;
    const double beta = beta_span(space, mod);
    if (beta == 0.0) return U;
    const double broot = std::pow(beta, 1.0 / mod.alpha);
    const double ex = 1.0 / (w * mod.alpha);
    auto g = [&](double v) { return std::pow(std::pow(v, ex) + broot, r.a) / w; };
    return num::adaptive_simpson(g, 0.0, std::pow(U, w), rel_tol);
}

double averaged_entropy_factor(const IntervalSpace& space, const Modulus& mod,
                               const PowerWeight& r, double p) {
    if (!(p > 0.0) || p > 1.0)
        throw std::invalid_argument("geometry: split fraction must lie in (0, 1]");
    const double beta = beta_span(space, mod);
    if (beta == 0.0) return 1.0;
    const double avg = entropy_integral(space, mod, r, beta * p) / (beta * p);
    return r.inverse(avg);
}

double limiting_entropy_factor(double alpha, double p) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("geometry: modulus exponent must lie in (0, 1)");
    if (!(p > 0.0) || p > 1.0)
        throw std::invalid_argument("geometry: split fraction must lie in (0, 1]");
    return 2.0 * std::pow(std::exp(1.0) / p, 1.0 / alpha);
}

} // namespace sgm::geometry
