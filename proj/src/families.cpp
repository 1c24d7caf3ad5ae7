#include "sgm/process.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sgm/numerics.hpp"

namespace sgm::process {

namespace {

double pi() { return 3.141592653589793238462643383279502884; }

void check_options(const FamilyOptions& opt) {
    if (!(opt.T > 0.0)) throw std::invalid_argument("families: T must be positive");
    if (!(opt.zeta > 1.0)) throw std::invalid_argument("families: zeta must exceed 1");
    if (!(opt.alpha > 0.0) || !(opt.alpha < 1.0))
        throw std::invalid_argument("families: alpha must lie in (0, 1)");
    if (!(opt.dist_param > 0.0))
        throw std::invalid_argument("families: distribution parameter must be positive");
    if (!(opt.coef_error >= 0.0))
        throw std::invalid_argument("families: coefficient error must be non-negative");
}

// shared skeleton: space, phi, modulus, xi, constant-offset error model
ProcessSpec base_spec(const FamilyOptions& opt, const std::string& family) {
    check_options(opt);
    ProcessSpec spec;
    spec.family = family;
    spec.space = geometry::IntervalSpace{opt.T};
    spec.phi = orlicz::phi_power(opt.zeta);
    spec.mod.alpha = opt.alpha;
    if (opt.mod_C >= 0.0) {
        spec.mod.C = opt.mod_C;
        spec.mod_C_override = true;
    } else {
        spec.mod.C = 0.0;
    }
    spec.entropy_a = opt.entropy_a < 0.0 ? opt.alpha / 2.0 : opt.entropy_a;
    if (!(spec.entropy_a > 0.0) || !(spec.entropy_a < opt.alpha))
        throw std::invalid_argument("families: entropy weight exponent must lie in (0, alpha)");
    spec.coef_error = opt.coef_error;

    const orlicz::RandomCoefficient rc = opt.dist == orlicz::CoefDist::StandardGaussian
                                             ? orlicz::coef_gaussian(opt.dist_param)
                                             : orlicz::coef_bounded(opt.dist_param);
    spec.xi = [rc](std::int64_t) { return rc; };
    return spec;
}

// constant-offset error model: approx_k = a_k + eps, so the error has zero increments
void attach_error_model(ProcessSpec& spec) {
    const double eps = spec.coef_error;
    const double tau = spec.xi(1).tau;
    const std::int64_t cap = spec.max_terms;
    const auto coord = spec.coord;
    spec.coord_approx = [coord, eps, cap](std::int64_t k, double t) {
        if (cap >= 0 && k > cap) return 0.0;
        return coord(k, t) + eps;
    };
    spec.error_env = [eps, cap](std::int64_t k) {
        if (cap >= 0 && k > cap) return 0.0;
        return eps;
    };
    spec.hoelder_error = [](std::int64_t) { return 0.0; };
    spec.head_error_pow = [eps, tau, cap](std::int64_t N, double s) {
        const double n = cap >= 0 ? static_cast<double>(std::min(N, cap)) : static_cast<double>(N);
        return n * std::pow(tau * eps, s);
    };
    spec.head_hoelder_error_pow = [](std::int64_t, double) { return 0.0; };
}

void check_tail_s(double s) {
    if (!(s > 0.0)) throw std::domain_error("families: sum exponent must be positive");
}

} // namespace

bool samplable(const ProcessSpec& spec) {
    const auto rc = spec.xi(1);
    if (rc.dist == orlicz::CoefDist::StandardGaussian) return spec.phi.zeta == 2.0;
    return spec.phi.zeta <= 2.0;
}

ProcessSpec make_wiener_kl(const FamilyOptions& opt) {
    ProcessSpec spec = base_spec(opt, "wiener-kl");
    const double T = opt.T;
    const double alpha = opt.alpha;
    const double tau = opt.dist_param;
    const double s_used = spec.sum_exponent();
    if (!(s_used * (1.0 - alpha) > 1.0))
        throw std::invalid_argument(
            "families: wiener-kl increment tail is not summable; need alpha < 1 - 1/s or the "
            "reliability guarantee has no sound modulus");

    const double amp = std::sqrt(2.0 * T);
    spec.coord = [T, amp](std::int64_t k, double t) {
        const double f = (static_cast<double>(k) - 0.5) * pi();
        return amp / f * std::sin(f * t / T);
    };
    spec.sup_coord = [amp](std::int64_t k) {
        return amp / ((static_cast<double>(k) - 0.5) * pi());
    };
    // |a_k(t)-a_k(s)| <= (amp/f) min(2, f|t-s|/T) <= c_k |t-s|^alpha
    const double hoeld = amp * std::pow(2.0, 1.0 - alpha) * std::pow(pi(), alpha - 1.0) *
                         std::pow(T, -alpha);
    spec.hoelder_coord = [hoeld, alpha](std::int64_t k) {
        return hoeld * std::pow(static_cast<double>(k) - 0.5, alpha - 1.0);
    };
    spec.tail_sup_pow = [amp, tau](std::int64_t N, double s) {
        check_tail_s(s);
        if (!(s > 1.0)) throw std::domain_error("families: wiener-kl sup tail needs s > 1");
        return std::pow(tau * amp / pi(), s) *
               num::hurwitz_zeta(s, static_cast<double>(N) + 0.5);
    };
    spec.tail_hoelder_pow = [hoeld, tau, alpha](std::int64_t N, double s) {
        check_tail_s(s);
        const double se = s * (1.0 - alpha);
        if (!(se > 1.0)) throw std::domain_error("families: wiener-kl increment tail needs s(1-alpha) > 1");
        return std::pow(tau * hoeld, s) * num::hurwitz_zeta(se, static_cast<double>(N) + 0.5);
    };
    attach_error_model(spec);
    return spec;
}

ProcessSpec make_damped_trig(const FamilyOptions& opt, double q, double amp) {
    if (!(q > 0.0) || !(q < 1.0))
        throw std::invalid_argument("families: damping ratio must lie in (0, 1)");
    if (!(amp > 0.0)) throw std::invalid_argument("families: amplitude must be positive");
    ProcessSpec spec = base_spec(opt, "damped-trig");
    const double T = opt.T;
    const double alpha = opt.alpha;
    const double tau = opt.dist_param;

    spec.coord = [T, q, amp](std::int64_t k, double t) {
        return amp * std::pow(q, static_cast<double>(k)) *
               std::sin(static_cast<double>(k) * pi() * t / T);
    };
    spec.sup_coord = [q, amp](std::int64_t k) {
        return amp * std::pow(q, static_cast<double>(k));
    };
    const double hc = amp * std::pow(2.0, 1.0 - alpha) * std::pow(pi() / T, alpha);
    spec.hoelder_coord = [hc, q, alpha](std::int64_t k) {
        return hc * std::pow(q, static_cast<double>(k)) * std::pow(static_cast<double>(k), alpha);
    };
    spec.tail_sup_pow = [q, amp, tau](std::int64_t N, double s) {
        check_tail_s(s);
        const double rho = std::pow(q, s);
        return std::pow(tau * amp, s) * std::pow(rho, static_cast<double>(N) + 1.0) / (1.0 - rho);
    };
    spec.tail_hoelder_pow = [hc, q, tau, alpha](std::int64_t N, double s) {
        check_tail_s(s);
        return std::pow(tau * hc, s) * num::poly_geometric_tail(N, alpha * s, std::pow(q, s));
    };
    attach_error_model(spec);
    return spec;
}

ProcessSpec make_finite(const FamilyOptions& opt, const std::vector<double>& amplitudes) {
    if (amplitudes.empty()) throw std::invalid_argument("families: finite family needs terms");
    ProcessSpec spec = base_spec(opt, "finite");
    const double T = opt.T;
    const double alpha = opt.alpha;
    const double tau = opt.dist_param;
    const auto K = static_cast<std::int64_t>(amplitudes.size());
    spec.max_terms = K;

    const std::vector<double> c = amplitudes;
    spec.coord = [T, c, K](std::int64_t k, double t) {
        if (k < 1 || k > K) return 0.0;
        return c[static_cast<std::size_t>(k - 1)] *
               std::cos(static_cast<double>(k - 1) * pi() * t / T);
    };
    spec.sup_coord = [c, K](std::int64_t k) {
        if (k < 1 || k > K) return 0.0;
        return std::fabs(c[static_cast<std::size_t>(k - 1)]);
    };
    const double hf = std::pow(2.0, 1.0 - alpha) * std::pow(pi() / T, alpha);
    spec.hoelder_coord = [c, K, hf, alpha](std::int64_t k) {
        if (k < 2 || k > K) return 0.0; // the k=1 term is constant in t
        return std::fabs(c[static_cast<std::size_t>(k - 1)]) * hf *
               std::pow(static_cast<double>(k - 1), alpha);
    };
    spec.tail_sup_pow = [c, K, tau](std::int64_t N, double s) {
        check_tail_s(s);
        double acc = 0.0;
        for (std::int64_t k = std::max<std::int64_t>(N, 0) + 1; k <= K; ++k)
            acc += std::pow(tau * std::fabs(c[static_cast<std::size_t>(k - 1)]), s);
        return acc;
    };
    spec.tail_hoelder_pow = [spec_h = spec.hoelder_coord, K, tau](std::int64_t N, double s) {
        check_tail_s(s);
        double acc = 0.0;
        for (std::int64_t k = std::max<std::int64_t>(N, 0) + 1; k <= K; ++k)
            acc += std::pow(tau * spec_h(k), s);
        return acc;
    };
    attach_error_model(spec);
    return spec;
}

} // namespace sgm::process
