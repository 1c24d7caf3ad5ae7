#pragma once

#include <cstdint>
#include <vector>

#include "sgm/process.hpp"

namespace sgm::sim {

// Paths of a truncated expansion on a fixed grid. paths[i][j] is path i at
// grid[j]. Draws are keyed by (seed, path, term), so path i reuses the same
// coefficient draws at every truncation level.
struct PathBatch {
    std::vector<double> grid;
    std::vector<std::vector<double>> paths;
    std::uint64_t seed = 0;
    std::int64_t N_used = 0;
};

std::vector<double> uniform_grid(const geometry::IntervalSpace& space, std::size_t points);

// use_approx substitutes the perturbed coefficient functions when the spec
// carries an error model
PathBatch sample_paths(const process::ProcessSpec& spec, std::int64_t N,
                       const std::vector<double>& grid, std::size_t count, std::uint64_t seed,
                       bool use_approx = false);

// one coefficient draw, shared across truncation levels
double coefficient_draw(const orlicz::RandomCoefficient& coef, std::uint64_t seed,
                        std::uint64_t path, std::uint64_t term);

} // namespace sgm::sim
