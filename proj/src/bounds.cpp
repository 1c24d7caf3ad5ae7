#include "sgm/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sgm/numerics.hpp"

namespace sgm::bounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double side_mult(Side s) { return s == Side::Abs ? 2.0 : 1.0; }

void check_query(const TailQuery& q) {
    if (!(q.phi.zeta > 1.0)) throw std::invalid_argument("bounds: phi exponent must exceed 1");
    if (!(q.gamma >= 0.0) || !std::isfinite(q.gamma))
        throw std::invalid_argument("bounds: gamma must be finite and non-negative");
    if (!(q.beta >= 0.0) || !std::isfinite(q.beta))
        throw std::invalid_argument("bounds: beta must be finite and non-negative");
    if (!(q.p > 0.0) || !(q.p < 1.0)) throw std::invalid_argument("bounds: p must lie in (0, 1)");
    if (!(q.x > 0.0)) throw std::invalid_argument("bounds: level x must be positive");
}

double entropy_factor_of(const TailQuery& q) {
    if (q.entropy.limiting) return geometry::limiting_entropy_factor(q.mod.alpha, q.p);
    geometry::PowerWeight r{q.entropy.weight_a};
    return geometry::averaged_entropy_factor(q.space, q.mod, r, q.p);
}

TailBound zero_process_bound(Side side) {
    TailBound b;
    b.value = 0.0;
    b.exp_factor = 0.0;
    b.entropy_factor = 1.0;
    b.lambda_opt = 0.0;
    b.threshold_x = 0.0;
    b.valid = true;
    b.side = side;
    return b;
}

} // namespace

double split_threshold(const orlicz::PhiFunction& phi, double gamma, double beta, double p) {
    if (phi.cls == orlicz::PhiClass::PowerBetweenOneTwo) return 0.0;
    const double v = std::min(beta, gamma);
    if (v == 0.0) return kInf;
    const double zeta = phi.zeta;
    const double D = std::pow(gamma, zeta) * (1.0 - p) + p * std::pow(beta, zeta);
    return D / ((1.0 - p) * std::pow(v, zeta - 1.0));
}

double matched_threshold(const orlicz::PhiFunction& phi, double gamma, double beta,
                         bool printed_variant) {
    if (phi.cls == orlicz::PhiClass::PowerBetweenOneTwo) return gamma;
    const double zeta = phi.zeta;
    const double v = std::min(beta, gamma);
    const double w = std::pow(v, zeta - 1.0);
    if (w == 0.0) return kInf;
    const double bz = std::pow(beta, zeta);
    if (printed_variant) {
        const double disc = gamma * gamma * (w - 1.0) * (w - 1.0) + 4.0 * w * bz;
        return (gamma * (w + 1.0) + std::sqrt(disc)) / (2.0 * w);
    }
    const double g = std::pow(gamma, zeta - 1.0);
    const double disc = gamma * gamma * (w - g) * (w - g) + 4.0 * w * gamma * bz;
    return (gamma * (w + g) + std::sqrt(disc)) / (2.0 * w);
}

TailBound sup_tail_numeric(const TailQuery& q) {
    check_query(q);
    if (q.gamma == 0.0 && q.beta == 0.0) return zero_process_bound(q.side);
    const double q1 = 1.0 - q.p;
    // h(lambda) = (1-p) phi(lambda gamma/(1-p)) + p phi(lambda beta/(1-p)) - lambda x
    auto h = [&](double lam) {
        return q1 * q.phi(lam * q.gamma / q1) + q.p * q.phi(lam * q.beta / q1) - lam * q.x;
    };
    const auto m = num::golden_min_positive(h, 1e-9, 1e-12);
    TailBound b;
    b.side = q.side;
    b.lambda_opt = m.x;
    b.exp_factor = std::exp(m.fx);
    b.entropy_factor = entropy_factor_of(q);
    b.threshold_x = split_threshold(q.phi, q.gamma, q.beta, q.p);
    b.valid = q.x > b.threshold_x;
    b.value = side_mult(q.side) * b.entropy_factor * b.exp_factor;
    b.vacuous = b.valid && b.value > 1.0;
    return b;
}

TailBound sup_tail_split(const TailQuery& q) {
    check_query(q);
    if (q.gamma == 0.0 && q.beta == 0.0) return zero_process_bound(q.side);
    const double zeta = q.phi.zeta;
    const double q1 = 1.0 - q.p;
    const double D = std::pow(q.gamma, zeta) * q1 + q.p * std::pow(q.beta, zeta);
    TailBound b;
    b.side = q.side;
    b.lambda_opt = std::pow(q.x * std::pow(q1, zeta) / D, 1.0 / (zeta - 1.0));
    const double expo = (1.0 - zeta) / zeta * std::pow(q.x * q1, zeta / (zeta - 1.0)) /
                        std::pow(D, 1.0 / (zeta - 1.0));
    b.exp_factor = std::exp(expo);
    b.entropy_factor = entropy_factor_of(q);
    b.threshold_x = split_threshold(q.phi, q.gamma, q.beta, q.p);
    b.valid = q.x > b.threshold_x;
    b.value = side_mult(q.side) * b.entropy_factor * b.exp_factor;
    b.vacuous = b.valid && b.value > 1.0;
    return b;
}

TailBound sup_tail_matched(const orlicz::PhiFunction& phi, double gamma, double x,
                           const geometry::IntervalSpace& space, const geometry::Modulus& mod,
                           const MatchedOptions& opt) {
    if (!(phi.zeta > 1.0)) throw std::invalid_argument("bounds: phi exponent must exceed 1");
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("bounds: gamma must be finite and non-negative");
    if (!(x > 0.0)) throw std::invalid_argument("bounds: level x must be positive");
    const double beta = geometry::beta_span(space, mod);
    if (gamma == 0.0 && beta == 0.0) return zero_process_bound(opt.side);
    if (gamma == 0.0)
        throw std::invalid_argument("bounds: matched bound needs a positive sup standard");
    TailBound b;
    b.side = opt.side;
    b.threshold_x = matched_threshold(phi, gamma, beta, opt.printed_variant);
    if (!(x > gamma)) {
        // p = gamma/x leaves (0,1); nothing to evaluate
        b.value = kNaN;
        b.exp_factor = kNaN;
        b.entropy_factor = kNaN;
        b.lambda_opt = kNaN;
        return b;
    }
    const double zeta = phi.zeta;
    const double dx = x - gamma;
    const double denom = std::pow(gamma, zeta) * dx + std::pow(beta, zeta) * gamma;
    const double expo = -(zeta - 1.0) / zeta * std::pow(dx, zeta / (zeta - 1.0)) *
                        std::pow(x, 1.0 / (zeta - 1.0)) / std::pow(denom, 1.0 / (zeta - 1.0));
    b.exp_factor = std::exp(expo);
    b.lambda_opt =
        std::pow(std::pow(dx, zeta) * std::pow(x, 2.0 - zeta) / denom, 1.0 / (zeta - 1.0));
    b.entropy_factor = opt.printed_variant
                           ? 2.0 * std::pow(std::exp(1.0) * x, 1.0 / mod.alpha)
                           : geometry::limiting_entropy_factor(mod.alpha, gamma / x);
    b.valid = x > b.threshold_x;
    b.value = side_mult(opt.side) * b.entropy_factor * b.exp_factor;
    b.vacuous = b.valid && b.value > 1.0;
    return b;
}

} // namespace sgm::bounds
