#pragma once

#include <cstdint>

#include "sgm/geometry.hpp"
#include "sgm/orlicz.hpp"

namespace sgm::bounds {

enum class Side : std::uint8_t { Sup, Inf, Abs };

// which non-exponential multiplier goes in front of the bound
struct EntropySpec {
    bool limiting = false; // 2(e/p)^(1/alpha) instead of the averaged integral
    double weight_a = 0.0; // exponent of r(t) = t^a for the averaged form
};

struct TailQuery {
    orlicz::PhiFunction phi;
    double gamma = 0.0; // sup over the interval of the standard of X(t)
    double beta = 0.0;  // modulus at half the interval length
    double p = 0.5;
    double x = 1.0;
    geometry::IntervalSpace space;
    geometry::Modulus mod; // alpha backing the entropy factor
    EntropySpec entropy;
    Side side = Side::Abs;
};

struct TailBound {
    double value = 0.0;          // probability bound; may exceed 1, then vacuous
    double exp_factor = 0.0;     // exp of the minimized exponent
    double entropy_factor = 0.0; // one-sided non-exponential multiplier
    double lambda_opt = 0.0;
    double threshold_x = 0.0;    // least level the bound is proven at
    bool valid = false;
    bool vacuous = false;
    Side side = Side::Abs;
};

struct MatchedOptions {
    // published form of the trailing factor, (ex)^(1/alpha) without the gamma
    // divisor, together with the matching published threshold
    bool printed_variant = false;
    Side side = Side::Abs;
};

// least x for which the split-parameter bound is proven; 0 for PowerBetweenOneTwo
double split_threshold(const orlicz::PhiFunction& phi, double gamma, double beta, double p);

// least x for which the matched-parameter bound is proven; gamma for PowerBetweenOneTwo
double matched_threshold(const orlicz::PhiFunction& phi, double gamma, double beta,
                         bool printed_variant = false);

// exponent minimized over lambda by golden-section search
TailBound sup_tail_numeric(const TailQuery& q);

// closed-form optimal lambda for phi(t) = |t|^zeta / zeta
TailBound sup_tail_split(const TailQuery& q);

// split bound at p = gamma/x with the limiting entropy factor
TailBound sup_tail_matched(const orlicz::PhiFunction& phi, double gamma, double x,
                           const geometry::IntervalSpace& space, const geometry::Modulus& mod,
                           const MatchedOptions& opt = {});

} // namespace sgm::bounds
