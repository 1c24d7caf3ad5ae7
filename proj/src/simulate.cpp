#include "sgm/simulate.hpp"

#include <stdexcept>

#include "sgm/numerics.hpp"

namespace sgm::sim {

std::vector<double> uniform_grid(const geometry::IntervalSpace& space, std::size_t points) {
    if (points < 2) throw std::invalid_argument("sim: grid needs at least two points");
    std::vector<double> g(points);
    const double h = space.T / static_cast<double>(points - 1);
    for (std::size_t j = 0; j < points; ++j) g[j] = h * static_cast<double>(j);
    g.back() = space.T;
    return g;
}

double coefficient_draw(const orlicz::RandomCoefficient& coef, std::uint64_t seed,
                        std::uint64_t path, std::uint64_t term) {
    switch (coef.dist) {
        case orlicz::CoefDist::StandardGaussian:
            return coef.param * num::gaussian_draw(seed, path, term);
        case orlicz::CoefDist::SymmetricBounded:
            return coef.param * num::uniform_sym_draw(seed, path, term);
    }
    throw std::logic_error("sim: unknown coefficient distribution");
}

PathBatch sample_paths(const process::ProcessSpec& spec, std::int64_t N,
                       const std::vector<double>& grid, std::size_t count, std::uint64_t seed,
                       bool use_approx) {
    if (N < 0) throw std::invalid_argument("sim: level must be non-negative");
    if (grid.size() < 2) throw std::invalid_argument("sim: grid needs at least two points");
    if (!process::samplable(spec))
        throw std::invalid_argument(
            "sim: coefficient law is outside the declared moment class; refusing to sample");
    if (use_approx && !spec.has_approx())
        throw std::invalid_argument("sim: spec carries no perturbed coefficients");

    std::int64_t terms = N;
    if (spec.max_terms >= 0 && terms > spec.max_terms) terms = spec.max_terms;

    PathBatch batch;
    batch.grid = grid;
    batch.seed = seed;
    batch.N_used = terms;
    batch.paths.assign(count, std::vector<double>(grid.size(), 0.0));
    if (terms == 0 || count == 0) return batch;

    // coefficient functions evaluated once per (term, grid point)
    const std::size_t gs = grid.size();
    std::vector<double> A(static_cast<std::size_t>(terms) * gs);
    for (std::int64_t k = 1; k <= terms; ++k) {
        double* row = A.data() + static_cast<std::size_t>(k - 1) * gs;
        for (std::size_t j = 0; j < gs; ++j)
            row[j] = use_approx ? spec.coord_approx(k, grid[j]) : spec.coord(k, grid[j]);
    }

    for (std::size_t i = 0; i < count; ++i) {
        double* out = batch.paths[i].data();
        for (std::int64_t k = 1; k <= terms; ++k) {
            const double xi = coefficient_draw(spec.xi(k), seed, static_cast<std::uint64_t>(i),
                                               static_cast<std::uint64_t>(k));
            const double* row = A.data() + static_cast<std::size_t>(k - 1) * gs;
            for (std::size_t j = 0; j < gs; ++j) out[j] += xi * row[j];
        }
    }
    return batch;
}

} // namespace sgm::sim
