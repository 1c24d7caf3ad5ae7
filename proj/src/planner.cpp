#include "sgm/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "sgm/numerics.hpp"

namespace sgm::planner {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::int64_t kLevelCap = std::int64_t{1} << 26;

void check_class(const process::ProcessSpec& spec, Condition cond) {
    const bool spec_one = spec.phi.cls == orlicz::PhiClass::PowerAtLeastTwo;
    if (condition_is_class_one(cond) != spec_one)
        throw std::invalid_argument("planner: condition class does not match the phi class");
}

struct LevelData {
    GammaParts parts;
    geometry::Modulus mod_N;
    double beta_N = 0.0;
};

LevelData level_data(const process::ProcessSpec& spec, std::int64_t N) {
    LevelData d;
    d.parts = gamma_N(spec, N);
    d.mod_N = remainder_modulus(spec, N);
    d.beta_N = geometry::beta_span(spec.space, d.mod_N);
    return d;
}

ConditionCheck eval_at(const process::ProcessSpec& spec, const LevelData& d, double delta,
                       Condition cond, double p) {
    ConditionCheck r;
    r.parts = d.parts;
    r.beta_N = d.beta_N;
    r.p_used = p;
    if (d.parts.gamma == 0.0) {
        // the remainder vanishes almost surely
        r.nu_bound = 0.0;
        r.valid = true;
        r.threshold = 0.0;
        return r;
    }
    if (condition_has_free_p(cond)) {
        bounds::TailQuery q;
        q.phi = spec.phi;
        q.gamma = d.parts.gamma;
        q.beta = d.beta_N;
        q.p = p;
        q.x = delta;
        q.space = spec.space;
        q.mod = d.mod_N;
        q.entropy = bounds::EntropySpec{false, spec.entropy_a};
        q.side = bounds::Side::Abs;
        const auto b = bounds::sup_tail_split(q);
        r.nu_bound = b.value;
        r.valid = b.valid;
        r.threshold = b.threshold_x;
    } else {
        const auto b = bounds::sup_tail_matched(spec.phi, d.parts.gamma, delta, spec.space,
                                                d.mod_N, bounds::MatchedOptions{});
        r.nu_bound = b.value;
        r.valid = b.valid;
        r.threshold = b.threshold_x;
    }
    return r;
}

// best split fraction at a fixed level: coarse grid, two shrinking rounds,
// then a golden polish; invalid fractions score +inf
ConditionCheck search_p(const process::ProcessSpec& spec, const LevelData& d, double delta,
                        Condition cond) {
    ConditionCheck best;
    best.nu_bound = kInf;
    ConditionCheck closest;
    closest.threshold = kInf;
    bool have_closest = false;
    auto consider = [&](double p) {
        const auto c = eval_at(spec, d, delta, cond, p);
        if (c.valid && (!best.valid || c.nu_bound < best.nu_bound)) best = c;
        if (!c.valid && c.threshold < closest.threshold) {
            closest = c;
            have_closest = true;
        }
    };
    double lo = 1e-6;
    double hi = 1.0 - 1e-6;
    double step = (hi - lo) / 20.0;
    for (int round = 0; round < 3; ++round) {
        step = (hi - lo) / 20.0;
        for (int i = 0; i <= 20; ++i) consider(lo + step * i);
        if (!best.valid) break;
        lo = std::max(1e-6, best.p_used - step);
        hi = std::min(1.0 - 1e-6, best.p_used + step);
    }
    if (best.valid) {
        auto f = [&](double p) {
            const auto c = eval_at(spec, d, delta, cond, p);
            return c.valid ? c.nu_bound : kInf;
        };
        const auto m = num::golden_min(f, lo, hi, 1e-10);
        consider(m.x);
        return best;
    }
    if (have_closest) return closest;
    return best;
}

ConditionCheck eval_level(const process::ProcessSpec& spec, std::int64_t N, double delta,
                          Condition cond) {
    const auto d = level_data(spec, N);
    if (condition_has_free_p(cond)) return search_p(spec, d, delta, cond);
    return eval_at(spec, d, delta, cond, kNaN);
}

// minimum of a unimodal integer sequence: geometric rungs until the values
// stop falling, then ternary narrowing and a final sweep
template <class F>
std::pair<std::int64_t, double> unimodal_min(F&& f, std::int64_t cap) {
    std::int64_t best = 0;
    double best_v = f(std::int64_t{0});
    double prev_v = best_v;
    std::int64_t last = 0;
    int rising = 0;
    for (std::int64_t N = 1; N <= cap; N *= 2) {
        last = N;
        const double v = f(N);
        if (v < best_v) {
            best_v = v;
            best = N;
        }
        if (prev_v < kInf && v >= prev_v * (1.0 - 1e-12)) {
            if (++rising >= 2) break;
        } else {
            rising = 0;
        }
        prev_v = v;
    }
    std::int64_t lo = best / 2;
    std::int64_t hi = std::min(best * 2, last);
    if (hi < lo) hi = lo;
    while (hi - lo > 4) {
        const std::int64_t m1 = lo + (hi - lo) / 3;
        const std::int64_t m2 = hi - (hi - lo) / 3;
        if (f(m1) <= f(m2)) hi = m2; else lo = m1;
    }
    std::int64_t arg = lo;
    double val = kInf;
    for (std::int64_t N = lo; N <= hi; ++N) {
        const double v = f(N);
        if (v < val) {
            val = v;
            arg = N;
        }
    }
    return {arg, val};
}

void fill_from(PlanResult& res, std::int64_t N, const ConditionCheck& c) {
    res.N = N;
    res.p_opt = c.p_used;
    res.nu_achieved = c.nu_bound;
    res.parts = c.parts;
    res.beta_N = c.beta_N;
    res.delta_threshold = c.threshold;
}

} // namespace

bool condition_has_free_p(Condition c) {
    return c == Condition::SplitClassI || c == Condition::SplitClassII;
}

bool condition_is_class_one(Condition c) {
    return c == Condition::SplitClassI || c == Condition::MatchedClassI ||
           c == Condition::CombinedClassI;
}

GammaParts gamma_N(const process::ProcessSpec& spec, std::int64_t N) {
    if (N < 0) throw std::invalid_argument("planner: level must be non-negative");
    if (!spec.tail_sup_pow)
        throw std::invalid_argument(
            "planner: spec lacks a closed-form tail envelope; refusing a silently truncated tail");
    const double s = spec.sum_exponent();
    const double A = spec.head_error_pow ? spec.head_error_pow(N, s) : 0.0;
    const double B = spec.tail_sup_pow(N, s);
    GammaParts g;
    g.approx = std::pow(A, 1.0 / s);
    g.tail = std::pow(B, 1.0 / s);
    g.gamma = std::pow(A + B, 1.0 / s);
    return g;
}

geometry::Modulus remainder_modulus(const process::ProcessSpec& spec, std::int64_t N) {
    if (N < 0) throw std::invalid_argument("planner: level must be non-negative");
    if (spec.mod_C_override) return geometry::Modulus{spec.mod.C, spec.mod.alpha};
    if (!spec.tail_hoelder_pow)
        throw std::invalid_argument("planner: spec lacks increment constants for the tail");
    const double s = spec.sum_exponent();
    const double H = spec.head_hoelder_error_pow ? spec.head_hoelder_error_pow(N, s) : 0.0;
    const double C = std::pow(H + spec.tail_hoelder_pow(N, s), 1.0 / s);
    return geometry::Modulus{C, spec.mod.alpha};
}

ConditionCheck check_condition(const process::ProcessSpec& spec, std::int64_t N, double delta,
                               Condition cond, std::optional<double> p) {
    if (N < 0) throw std::invalid_argument("planner: level must be non-negative");
    if (!(delta > 0.0)) throw std::invalid_argument("planner: accuracy must be positive");
    check_class(spec, cond);
    if (condition_has_free_p(cond)) {
        if (!p) throw std::invalid_argument("planner: this condition needs a split fraction p");
        if (!(*p > 0.0) || !(*p < 1.0))
            throw std::invalid_argument("planner: split fraction must lie in (0, 1)");
    } else if (p) {
        throw std::invalid_argument("planner: this condition has no free split fraction");
    }
    const auto d = level_data(spec, N);
    return eval_at(spec, d, delta, cond, p ? *p : kNaN);
}

ConditionCheck check_condition_optimized(const process::ProcessSpec& spec, std::int64_t N,
                                         double delta, Condition cond) {
    if (N < 0) throw std::invalid_argument("planner: level must be non-negative");
    if (!(delta > 0.0)) throw std::invalid_argument("planner: accuracy must be positive");
    check_class(spec, cond);
    return eval_level(spec, N, delta, cond);
}

PlanResult plan_minimal_N(const process::ProcessSpec& spec, double delta, double nu_target,
                          Condition cond) {
    if (!(delta > 0.0)) throw std::invalid_argument("planner: accuracy must be positive");
    if (!(nu_target > 0.0) || !(nu_target < 1.0))
        throw std::invalid_argument("planner: target reliability defect must lie in (0, 1)");
    check_class(spec, cond);

    PlanResult res;
    res.condition = cond;
    res.p_opt = kNaN;
    res.nu_achieved = kNaN;
    res.delta_threshold = kNaN;
    res.floor_nu = kNaN;
    res.gamma_min = kNaN;

    auto is_ok = [&](const ConditionCheck& c) { return c.valid && c.nu_bound <= nu_target; };

    std::int64_t below = -1; // last ladder rung that failed
    std::int64_t found_hi = -1;
    ConditionCheck found_eval;
    bool ever_valid = false;
    double prev_nu = kInf;
    int rising = 0;
    for (std::int64_t N = 0; N <= kLevelCap; N = (N == 0 ? 1 : N * 2)) {
        const auto e = eval_level(spec, N, delta, cond);
        ever_valid = ever_valid || e.valid;
        if (is_ok(e)) {
            found_hi = N;
            found_eval = e;
            break;
        }
        if (e.valid && prev_nu < kInf && e.nu_bound >= prev_nu * (1.0 - 1e-12)) {
            if (++rising >= 2) break;
        } else {
            rising = 0;
        }
        prev_nu = e.valid ? e.nu_bound : kInf;
        below = N;
    }

    if (found_hi >= 0) {
        std::int64_t lo = below;
        std::int64_t hi = found_hi;
        ConditionCheck hi_eval = found_eval;
        while (hi - lo > 1) {
            const std::int64_t mid = lo + (hi - lo) / 2;
            const auto e = eval_level(spec, mid, delta, cond);
            if (is_ok(e)) {
                hi = mid;
                hi_eval = e;
            } else {
                lo = mid;
            }
        }
        // the rung below the answer must fail; walk down if monotonicity broke
        if (hi > 0) {
            auto e = eval_level(spec, hi - 1, delta, cond);
            std::int64_t steps = 0;
            while (hi > 0 && is_ok(e) && steps < 4096) {
                res.linear_fallback = true;
                hi_eval = e;
                --hi;
                ++steps;
                if (hi > 0) e = eval_level(spec, hi - 1, delta, cond);
            }
        }
        res.outcome = PlanOutcome::Found;
        fill_from(res, hi, hi_eval);
        return res;
    }

    if (!ever_valid) {
        res.outcome = PlanOutcome::Unreachable;
        res.floor_nu = kInf;
        return res;
    }

    // the bound stopped improving before the target: locate the floor
    auto nu_score = [&](std::int64_t N) {
        const auto e = eval_level(spec, N, delta, cond);
        return e.valid ? e.nu_bound : kInf;
    };
    const auto [floor_N, floor_nu] = unimodal_min(nu_score, kLevelCap);
    const auto floor_eval = eval_level(spec, floor_N, delta, cond);
    auto gamma_score = [&](std::int64_t N) { return gamma_N(spec, N).gamma; };
    const auto [g_arg, g_min] = unimodal_min(gamma_score, kLevelCap);
    res.floor_nu = floor_nu;
    res.floor_N = floor_N;
    res.gamma_argmin = g_arg;
    res.gamma_min = g_min;

    if (std::isfinite(floor_nu) && floor_nu <= nu_target) {
        // the dip crosses the target but the geometric ladder stepped over it
        for (std::int64_t N = 0; N <= floor_N; ++N) {
            const auto e = eval_level(spec, N, delta, cond);
            if (is_ok(e)) {
                res.outcome = PlanOutcome::Found;
                res.linear_fallback = true;
                fill_from(res, N, e);
                return res;
            }
        }
    }

    res.outcome = floor_eval.parts.approx > 0.0 ? PlanOutcome::IrreducibleError
                                                : PlanOutcome::Unreachable;
    fill_from(res, -1, floor_eval);
    res.N = -1;
    return res;
}

} // namespace sgm::planner
