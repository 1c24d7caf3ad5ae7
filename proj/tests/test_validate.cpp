#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sgm/simulate.hpp"
#include "sgm/validate.hpp"

using namespace sgm;

namespace {

process::ProcessSpec wiener(double coef_error = 0.0) {
    process::FamilyOptions opt;
    opt.T = 1.0;
    opt.zeta = 2.0;
    opt.alpha = 0.4;
    opt.coef_error = coef_error;
    return process::make_wiener_kl(opt);
}

process::ProcessSpec finite3() {
    process::FamilyOptions opt;
    opt.alpha = 0.3;
    return process::make_finite(opt, {1.0, 0.5, 0.25});
}

double tail_standard(const process::ProcessSpec& spec, std::int64_t M) {
    const double s = spec.sum_exponent();
    return std::pow(spec.tail_sup_pow(M, s), 1.0 / s);
}

} // namespace

TEST_SUITE("validate") {

TEST_CASE("reference level satisfies the floor and the tail rule") {
    const auto spec = wiener();
    const std::int64_t M = val::min_reference_level(spec, 16, 2.0);
    CHECK(M == 507);
    CHECK(M >= 80);
    CHECK(tail_standard(spec, M) < 0.02);
    CHECK(tail_standard(spec, M - 1) >= 0.02);

    // a loose accuracy keeps the structural floor binding
    CHECK(val::min_reference_level(spec, 0, 10.0) == 64);
    CHECK(val::min_reference_level(finite3(), 3, 0.5) == 67);

    CHECK_THROWS_AS(val::min_reference_level(spec, 16, 1e-9), std::runtime_error);
    CHECK_THROWS_AS(val::min_reference_level(spec, -1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(val::min_reference_level(spec, 16, 0.0), std::invalid_argument);
}

TEST_CASE("remainder sups equal coupled path differences") {
    const auto spec = wiener();
    const std::size_t grid_points = 65;
    const std::size_t n_paths = 50;
    const auto grid = sim::uniform_grid(spec.space, grid_points);
    const auto sups = val::remainder_sups(spec, 4, 32, grid_points, n_paths, 3);
    REQUIRE(sups.size() == n_paths);
    const auto lo = sim::sample_paths(spec, 4, grid, n_paths, 3);
    const auto hi = sim::sample_paths(spec, 32, grid, n_paths, 3);
    for (std::size_t i = 0; i < n_paths; ++i) {
        double m = 0.0;
        for (std::size_t j = 0; j < grid.size(); ++j)
            m = std::max(m, std::fabs(hi.paths[i][j] - lo.paths[i][j]));
        CHECK(std::fabs(sups[i] - m) < 1e-12);
    }
}

TEST_CASE("remainder sups include the coefficient error model") {
    const auto spec = wiener(0.1);
    const std::size_t grid_points = 33;
    const std::size_t n_paths = 20;
    const auto grid = sim::uniform_grid(spec.space, grid_points);
    const auto sups = val::remainder_sups(spec, 4, 32, grid_points, n_paths, 5);
    const auto model = sim::sample_paths(spec, 4, grid, n_paths, 5, true);
    const auto truth = sim::sample_paths(spec, 32, grid, n_paths, 5, false);
    for (std::size_t i = 0; i < n_paths; ++i) {
        double m = 0.0;
        for (std::size_t j = 0; j < grid.size(); ++j)
            m = std::max(m, std::fabs(truth.paths[i][j] - model.paths[i][j]));
        CHECK(std::fabs(sups[i] - m) < 1e-12);
    }
}

TEST_CASE("exhausted finite model validates trivially") {
    const auto rep = val::estimate_exceedance(finite3(), 3, 0, 0.25, 33, 200, 9,
                                              planner::Condition::MatchedClassI);
    CHECK(rep.empirical_prob == 0.0);
    CHECK(rep.theoretical_bound == 0.0);
    CHECK(rep.bound_valid);
    CHECK(rep.dominated);
    CHECK(rep.N_ref == 67);
    CHECK(rep.neglected_gamma == 0.0);
    CHECK(rep.n_paths == 200);
}

TEST_CASE("an accuracy below the remainder scale is reported, not hidden") {
    const auto rep = val::estimate_exceedance(wiener(), 8, 0, 0.1, 17, 20, 4,
                                              planner::Condition::MatchedClassI);
    CHECK_FALSE(rep.bound_valid);
    CHECK(std::isnan(rep.theoretical_bound));
    CHECK(rep.empirical_prob > 0.5);
    CHECK_FALSE(rep.dominated);
    CHECK(rep.standard_error ==
          doctest::Approx(std::sqrt(rep.empirical_prob * (1.0 - rep.empirical_prob) / 20.0))
              .epsilon(1e-12));
    CHECK(rep.neglected_gamma < 0.1 / 100.0);
}

TEST_CASE("explicit reference levels are checked against the tail rule") {
    const auto spec = wiener();
    CHECK_THROWS_AS(val::estimate_exceedance(spec, 16, 300, 2.0, 17, 10, 1,
                                             planner::Condition::MatchedClassI),
                    std::invalid_argument);
    // below the structural floor the level is raised first, then rejected
    CHECK_THROWS_AS(val::estimate_exceedance(spec, 16, 70, 2.0, 17, 10, 1,
                                             planner::Condition::MatchedClassI),
                    std::invalid_argument);
    const auto rep = val::estimate_exceedance(spec, 16, 600, 2.0, 17, 10, 1,
                                              planner::Condition::MatchedClassI);
    CHECK(rep.N_ref == 600);
    CHECK(rep.bound_valid);
}

TEST_CASE("monte carlo stays under a comfortably valid bound") {
    const auto rep = val::estimate_exceedance(wiener(), 64, 0, 2.0, 65, 300, 7,
                                              planner::Condition::MatchedClassI);
    CHECK(rep.bound_valid);
    CHECK(rep.dominated);
    const auto split = val::estimate_exceedance(wiener(), 64, 0, 2.0, 65, 300, 7,
                                                planner::Condition::SplitClassI, 0.02);
    CHECK(split.bound_valid);
    CHECK(split.dominated);
    CHECK(split.empirical_prob == rep.empirical_prob);
}

TEST_CASE("input validation") {
    const auto spec = wiener();
    CHECK_THROWS_AS(val::estimate_exceedance(spec, 16, 0, 2.0, 17, 0, 1,
                                             planner::Condition::MatchedClassI),
                    std::invalid_argument);
    CHECK_THROWS_AS(val::remainder_sups(spec, 4, 2, 17, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(val::remainder_sups(spec, -1, 8, 17, 10, 1), std::invalid_argument);
}

} // TEST_SUITE
