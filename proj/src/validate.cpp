#include "sgm/validate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "sgm/simulate.hpp"

namespace sgm::val {

std::int64_t min_reference_level(const process::ProcessSpec& spec, std::int64_t N, double delta) {
    if (N < 0) throw std::invalid_argument("validate: level must be non-negative");
    if (!(delta > 0.0)) throw std::invalid_argument("validate: accuracy must be positive");
    if (!spec.tail_sup_pow)
        throw std::invalid_argument("validate: spec lacks a closed-form tail envelope");
    const double s = spec.sum_exponent();
    const double thr = delta / 100.0;
    auto tail = [&](std::int64_t M) { return std::pow(spec.tail_sup_pow(M, s), 1.0 / s); };

    std::int64_t lo = std::max<std::int64_t>(4 * N, N + 64);
    if (tail(lo) < thr) return lo;
    constexpr std::int64_t cap = std::int64_t{1} << 22;
    std::int64_t hi = lo;
    while (tail(hi) >= thr) {
        if (hi >= cap)
            throw std::runtime_error(
                "validate: reference level cap reached before the neglected tail fell below "
                "delta/100");
        hi = std::min(cap, hi * 2);
    }
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (tail(mid) < thr) hi = mid; else lo = mid;
    }
    return hi;
}

std::vector<double> remainder_sups(const process::ProcessSpec& spec, std::int64_t N,
                                   std::int64_t N_ref, std::size_t grid_points,
                                   std::size_t n_paths, std::uint64_t seed) {
    if (N < 0) throw std::invalid_argument("validate: level must be non-negative");
    if (N_ref < N) throw std::invalid_argument("validate: reference level below model level");
    if (!process::samplable(spec))
        throw std::invalid_argument(
            "validate: coefficient law is outside the declared moment class; refusing to sample");

    const auto grid = sim::uniform_grid(spec.space, grid_points);
    const std::size_t gs = grid.size();

    std::int64_t cap = N_ref;
    if (spec.max_terms >= 0) cap = std::min(cap, spec.max_terms);
    const std::int64_t head = std::min(N, cap);
    const bool approx = spec.has_approx();

    // difference rows: model-vs-true coefficient gap for kept terms (when the
    // spec carries perturbed coefficients), then the dropped true terms
    std::vector<std::int64_t> ks;
    std::vector<bool> is_gap;
    if (approx) {
        for (std::int64_t k = 1; k <= head; ++k) {
            ks.push_back(k);
            is_gap.push_back(true);
        }
    }
    for (std::int64_t k = N + 1; k <= cap; ++k) {
        ks.push_back(k);
        is_gap.push_back(false);
    }

    std::vector<double> sups(n_paths, 0.0);
    if (ks.empty() || n_paths == 0) return sups;

    std::vector<double> rows(ks.size() * gs);
    for (std::size_t r = 0; r < ks.size(); ++r) {
        const std::int64_t k = ks[r];
        double* row = rows.data() + r * gs;
        for (std::size_t j = 0; j < gs; ++j)
            row[j] = is_gap[r] ? spec.coord(k, grid[j]) - spec.coord_approx(k, grid[j])
                               : spec.coord(k, grid[j]);
    }

    auto work = [&](std::size_t i0, std::size_t i1) {
        std::vector<double> acc(gs);
        for (std::size_t i = i0; i < i1; ++i) {
            std::fill(acc.begin(), acc.end(), 0.0);
            for (std::size_t r = 0; r < ks.size(); ++r) {
                const double xi =
                    sim::coefficient_draw(spec.xi(ks[r]), seed, static_cast<std::uint64_t>(i),
                                          static_cast<std::uint64_t>(ks[r]));
                const double* row = rows.data() + r * gs;
                for (std::size_t j = 0; j < gs; ++j) acc[j] += xi * row[j];
            }
            double m = 0.0;
            for (std::size_t j = 0; j < gs; ++j) m = std::max(m, std::abs(acc[j]));
            sups[i] = m;
        }
    };

    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const std::size_t n_threads = std::min<std::size_t>(hw, std::max<std::size_t>(1, n_paths / 256));
    if (n_threads <= 1) {
        work(0, n_paths);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n_paths + n_threads - 1) / n_threads;
        for (std::size_t t = 0; t < n_threads; ++t) {
            const std::size_t i0 = t * chunk;
            const std::size_t i1 = std::min(n_paths, i0 + chunk);
            if (i0 >= i1) break;
            pool.emplace_back(work, i0, i1);
        }
        for (auto& th : pool) th.join();
    }
    return sups;
}

ValidationReport estimate_exceedance(const process::ProcessSpec& spec, std::int64_t N,
                                     std::int64_t N_ref, double delta, std::size_t grid_points,
                                     std::size_t n_paths, std::uint64_t seed,
                                     planner::Condition cond, std::optional<double> p) {
    if (!(delta > 0.0)) throw std::invalid_argument("validate: accuracy must be positive");
    if (n_paths == 0) throw std::invalid_argument("validate: need at least one path");

    const auto theory = p ? planner::check_condition(spec, N, delta, cond, p)
                          : planner::check_condition_optimized(spec, N, delta, cond);

    const std::int64_t floor_ref = std::max<std::int64_t>(4 * N, N + 64);
    const double s = spec.sum_exponent();
    if (N_ref <= 0) {
        N_ref = min_reference_level(spec, N, delta);
    } else {
        N_ref = std::max(N_ref, floor_ref);
        const double neglected = std::pow(spec.tail_sup_pow(N_ref, s), 1.0 / s);
        if (!(neglected < delta / 100.0))
            throw std::invalid_argument(
                "validate: reference level too small, neglected tail exceeds delta/100");
    }

    const auto sups = remainder_sups(spec, N, N_ref, grid_points, n_paths, seed);
    std::size_t count = 0;
    for (const double v : sups)
        if (v > delta) ++count;

    ValidationReport rep;
    rep.n_paths = n_paths;
    rep.N = N;
    rep.N_ref = N_ref;
    rep.delta = delta;
    rep.grid_points = grid_points;
    rep.empirical_prob = static_cast<double>(count) / static_cast<double>(n_paths);
    rep.standard_error =
        std::sqrt(rep.empirical_prob * (1.0 - rep.empirical_prob) / static_cast<double>(n_paths));
    rep.theoretical_bound = theory.nu_bound;
    rep.bound_valid = theory.valid && theory.nu_bound <= 1.0;
    rep.neglected_gamma = std::pow(spec.tail_sup_pow(N_ref, s), 1.0 / s);
    rep.dominated = rep.empirical_prob <= rep.theoretical_bound + 3.0 * rep.standard_error;
    return rep;
}

} // namespace sgm::val
