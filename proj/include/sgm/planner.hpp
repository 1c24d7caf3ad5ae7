#pragma once

#include <cstdint>
#include <optional>

#include "sgm/bounds.hpp"
#include "sgm/process.hpp"

namespace sgm::planner {

// model-acceptance condition variants; Split carries a free fraction p,
// Matched pins p = gamma_N/delta, Combined is Matched with the decomposed
// remainder standard (numerically the same reading)
enum class Condition : std::uint8_t {
    SplitClassI,
    SplitClassII,
    MatchedClassI,
    MatchedClassII,
    CombinedClassI,
    CombinedClassII
};

bool condition_has_free_p(Condition c);
bool condition_is_class_one(Condition c);

struct GammaParts {
    double gamma = 0.0;  // bound on the sup standard of the remainder
    double approx = 0.0; // share from coefficient approximation errors
    double tail = 0.0;   // share from truncation
};

// remainder standard at level N: head approximation errors plus series tail
GammaParts gamma_N(const process::ProcessSpec& spec, std::int64_t N);

// increment modulus of the remainder at level N, sigma_N(h) = C_N h^alpha
geometry::Modulus remainder_modulus(const process::ProcessSpec& spec, std::int64_t N);

struct ConditionCheck {
    double nu_bound = 0.0;
    bool valid = false;
    double threshold = 0.0; // least accuracy delta the condition is proven at
    double p_used = 0.0;    // NaN for conditions without a free p
    GammaParts parts;
    double beta_N = 0.0;
};

// reliability bound for accuracy delta at level N under the chosen condition;
// p is required for Split conditions and must be absent otherwise
ConditionCheck check_condition(const process::ProcessSpec& spec, std::int64_t N, double delta,
                               Condition cond, std::optional<double> p = {});

// same check with p optimized over its search grid (no-op for Matched/Combined)
ConditionCheck check_condition_optimized(const process::ProcessSpec& spec, std::int64_t N,
                                         double delta, Condition cond);

enum class PlanOutcome : std::uint8_t { Found, IrreducibleError, Unreachable };

struct PlanResult {
    PlanOutcome outcome = PlanOutcome::Unreachable;
    Condition condition = Condition::MatchedClassI;
    std::int64_t N = -1;
    double p_opt = 0.0; // NaN for conditions without a free p
    double nu_achieved = 0.0;
    GammaParts parts;
    double beta_N = 0.0;
    double delta_threshold = 0.0;
    bool linear_fallback = false; // bisection shortcut was abandoned
    // diagnostics for the non-Found outcomes
    double floor_nu = 0.0;
    std::int64_t floor_N = -1;
    std::int64_t gamma_argmin = -1;
    double gamma_min = 0.0;
};

// smallest N meeting (delta, nu_target), optimizing p where the condition has one
PlanResult plan_minimal_N(const process::ProcessSpec& spec, double delta, double nu_target,
                          Condition cond);

} // namespace sgm::planner
