#pragma once

#include <cstdint>
#include <vector>

#include "sgm/planner.hpp"
#include "sgm/process.hpp"

namespace sgm::val {

struct ValidationReport {
    double empirical_prob = 0.0;
    double standard_error = 0.0;
    double theoretical_bound = 0.0;
    bool dominated = false;
    std::size_t n_paths = 0;
    std::int64_t N = 0;
    std::int64_t N_ref = 0;
    double delta = 0.0;

    // honesty extras: validity of the theoretical claim, the analytic bound on
    // the remainder neglected beyond N_ref, and the grid resolution (grid sup
    // under-reads the true sup, which only makes the empirical side smaller)
    bool bound_valid = false;
    double neglected_gamma = 0.0;
    std::size_t grid_points = 0;
};

// smallest reference level M >= max(4N, N+64) whose beyond-M remainder has
// standard contribution below delta/100
std::int64_t min_reference_level(const process::ProcessSpec& spec, std::int64_t N, double delta);

// per-path grid sup of |X_{N_ref} - X_N| with coupled coefficient draws; the
// model side uses the perturbed coefficients when the spec carries them
std::vector<double> remainder_sups(const process::ProcessSpec& spec, std::int64_t N,
                                   std::int64_t N_ref, std::size_t grid_points,
                                   std::size_t n_paths, std::uint64_t seed);

// N_ref <= 0 picks min_reference_level automatically
ValidationReport estimate_exceedance(const process::ProcessSpec& spec, std::int64_t N,
                                     std::int64_t N_ref, double delta, std::size_t grid_points,
                                     std::size_t n_paths, std::uint64_t seed,
                                     planner::Condition cond,
                                     std::optional<double> p = {});

} // namespace sgm::val
