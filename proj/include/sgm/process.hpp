#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sgm/geometry.hpp"
#include "sgm/orlicz.hpp"

namespace sgm::process {

// series description X(t) = sum_k xi_k a_k(t) on [0,T], k = 1,2,...
// All sums over k use closed forms or certified envelopes; the per-term
// handles exist for sampling and for cross-checking the envelopes.
struct ProcessSpec {
    std::string family;
    geometry::IntervalSpace space;
    orlicz::PhiFunction phi;
    geometry::Modulus mod;        // alpha of the increment modulus; C used when overridden
    bool mod_C_override = false;  // user pinned the modulus constant
    double entropy_a = 0.0;       // weight exponent for the averaged entropy factor
    std::int64_t max_terms = -1;  // >= 0 for finite families, -1 for infinite series
    double coef_error = 0.0;      // constant-offset approximation error per coefficient

    std::function<orlicz::RandomCoefficient(std::int64_t)> xi;

    std::function<double(std::int64_t, double)> coord;        // a_k(t)
    std::function<double(std::int64_t, double)> coord_approx; // approximation used by the model
    std::function<double(std::int64_t)> sup_coord;            // sup_t |a_k(t)|
    std::function<double(std::int64_t)> hoelder_coord;        // increment constant of a_k
    std::function<double(std::int64_t)> error_env;            // sup_t |a_k - approx|
    std::function<double(std::int64_t)> hoelder_error;        // increment constant of the error

    // sum_{k>N} (tau_k sup|a_k|)^s, closed form or certified upper envelope
    std::function<double(std::int64_t, double)> tail_sup_pow;
    // sum_{k>N} (tau_k hoelder_coord(k))^s, same soundness contract
    std::function<double(std::int64_t, double)> tail_hoelder_pow;
    // sum_{k<=N} (tau_k error_env(k))^s
    std::function<double(std::int64_t, double)> head_error_pow;
    // sum_{k<=N} (tau_k hoelder_error(k))^s
    std::function<double(std::int64_t, double)> head_hoelder_error_pow;

    bool has_approx() const { return coef_error > 0.0; }
    double sum_exponent() const { return phi.sum_exponent(); }
};

// can the declared standards be realized by an actual sampler
bool samplable(const ProcessSpec& spec);

struct FamilyOptions {
    double T = 1.0;
    double zeta = 2.0;
    double alpha = 0.4;
    double entropy_a = -1.0;      // < 0 selects alpha/2
    double coef_error = 0.0;      // constant-offset error on every coefficient
    double mod_C = -1.0;          // >= 0 pins the modulus constant
    orlicz::CoefDist dist = orlicz::CoefDist::StandardGaussian;
    double dist_param = 1.0;      // scale or halfwidth
};

// Brownian-motion eigenbasis: a_k(t) = sqrt(2T) sin((k-1/2) pi t / T) / ((k-1/2) pi)
ProcessSpec make_wiener_kl(const FamilyOptions& opt);

// geometric damping: a_k(t) = amp q^k sin(k pi t / T)
ProcessSpec make_damped_trig(const FamilyOptions& opt, double q, double amp);

// finite cosine sum: a_k(t) = c_k cos((k-1) pi t / T), k = 1..K
ProcessSpec make_finite(const FamilyOptions& opt, const std::vector<double>& amplitudes);

} // namespace sgm::process
