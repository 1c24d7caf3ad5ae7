// Acceptance gate: eight numbered end-to-end properties, one per invocation.
// Each run prints exactly one [PASS]/[FAIL] line for its criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "sgm/bounds.hpp"
#include "sgm/geometry.hpp"
#include "sgm/numerics.hpp"
#include "sgm/orlicz.hpp"
#include "sgm/planner.hpp"
#include "sgm/simulate.hpp"
#include "sgm/validate.hpp"

using namespace sgm;

namespace {

struct Acc {
    int checks = 0;
    int fails = 0;

    void require(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++fails;
            std::fprintf(stderr, "  check failed: %s\n", what.c_str());
        }
    }
};

double rel(double a, double b) {
    const double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
    return std::fabs(a - b) / scale;
}

bool nan_or_equal(double a, double b) {
    return (std::isnan(a) && std::isnan(b)) || a == b;
}

std::string tag2(double a, double b) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), " (%.17g vs %.17g)", a, b);
    return buf;
}

process::ProcessSpec wiener_example(double coef_error = 0.0) {
    process::FamilyOptions opt;
    opt.T = 1.0;
    opt.zeta = 2.0;
    opt.alpha = 0.4;
    opt.coef_error = coef_error;
    return process::make_wiener_kl(opt);
}

bounds::TailQuery make_query(double zeta, double gamma, double beta, double p, double x,
                             bounds::Side side, bool limiting, double alpha, double a, double T) {
    bounds::TailQuery q;
    q.phi = orlicz::phi_power(zeta);
    q.gamma = gamma;
    q.beta = beta;
    q.p = p;
    q.x = x;
    q.space = geometry::IntervalSpace{T};
    q.mod = geometry::Modulus{beta / std::pow(T / 2.0, alpha), alpha};
    q.entropy = bounds::EntropySpec{limiting, a};
    q.side = side;
    return q;
}

double udraw(std::uint64_t seed, std::uint64_t i, std::uint64_t j) {
    return num::uniform01(num::mix64(seed, i, j));
}

// 1: the closed-form optimizer of the exponential factor matches a numeric
// golden-section minimization over lambda
void criterion_1(Acc& acc) {
    const double zetas[5] = {2.0, 2.5, 3.0, 4.0, 6.0};
    const double ps[5] = {0.1, 0.3, 0.5, 0.7, 0.9};
    const double levels[5] = {0.25, 0.5, 1.0, 2.0, 4.0};
    for (const double zeta : zetas)
        for (const double p : ps)
            for (const double g : levels)
                for (const double b : levels) {
                    const auto phi = orlicz::phi_power(zeta);
                    const double thr = bounds::split_threshold(phi, g, b, p);
                    for (const double mult : {1.5, 3.0}) {
                        const double x = std::max(thr, 1e-8) * mult;
                        const auto q =
                            make_query(zeta, g, b, p, x, bounds::Side::Sup, false, 0.4, 0.2, 1.0);
                        const auto closed = bounds::sup_tail_split(q);
                        const auto numeric = bounds::sup_tail_numeric(q);
                        acc.require(closed.valid && numeric.valid, "validity at x above threshold");
                        acc.require(rel(closed.exp_factor, numeric.exp_factor) <= 1e-6,
                                    "exp factor" + tag2(closed.exp_factor, numeric.exp_factor));
                        acc.require(rel(closed.lambda_opt, numeric.lambda_opt) <= 1e-6,
                                    "lambda" + tag2(closed.lambda_opt, numeric.lambda_opt));
                        acc.require(rel(closed.value, numeric.value) <= 1e-6,
                                    "bound value" + tag2(closed.value, numeric.value));
                    }
                }
}

// 2: the matched bound equals the split bound at p = gamma/x with the
// limiting entropy factor
void criterion_2(Acc& acc) {
    const double zetas[7] = {2.0, 2.5, 3.0, 4.0, 6.0, 1.3, 1.6};
    const double levels[5] = {0.25, 0.5, 1.0, 2.0, 4.0};
    const geometry::IntervalSpace space{1.0};
    const double alpha = 0.4;
    for (const double zeta : zetas)
        for (const double g : levels)
            for (const double b : levels) {
                const auto phi = orlicz::phi_power(zeta);
                const geometry::Modulus mod{b / std::pow(0.5, alpha), alpha};
                const double thr = bounds::matched_threshold(phi, g, b);
                for (const double mult : {1.2, 2.0, 5.0, 20.0}) {
                    const double x = thr * mult;
                    bounds::MatchedOptions mo;
                    mo.side = bounds::Side::Sup;
                    const auto matched = bounds::sup_tail_matched(phi, g, x, space, mod, mo);
                    const auto q = make_query(zeta, g, b, g / x, x, bounds::Side::Sup, true,
                                              alpha, 0.2, 1.0);
                    const auto split = bounds::sup_tail_split(q);
                    acc.require(matched.valid, "matched validity above its threshold");
                    acc.require(split.valid, "split validity at the substituted fraction");
                    acc.require(rel(matched.exp_factor, split.exp_factor) <= 1e-10,
                                "exp factor" + tag2(matched.exp_factor, split.exp_factor));
                    acc.require(rel(matched.lambda_opt, split.lambda_opt) <= 1e-10,
                                "lambda" + tag2(matched.lambda_opt, split.lambda_opt));
                    acc.require(rel(matched.entropy_factor, split.entropy_factor) <= 1e-10,
                                "entropy factor" +
                                    tag2(matched.entropy_factor, split.entropy_factor));
                    acc.require(rel(matched.value, split.value) <= 1e-10,
                                "bound value" + tag2(matched.value, split.value));
                }
            }
}

// 3: closed-form entropy integral against adaptive quadrature
void criterion_3(Acc& acc) {
    const double Ts[3] = {0.5, 1.0, 2.0};
    const double Cs[3] = {0.5, 1.0, 2.0};
    const double alphas[3] = {0.3, 0.5, 0.7};
    const double fracs[3] = {0.25, 0.5, 0.75};
    for (const double T : Ts)
        for (const double C : Cs)
            for (const double alpha : alphas)
                for (const double frac : fracs) {
                    const geometry::IntervalSpace space{T};
                    const geometry::Modulus mod{C, alpha};
                    const geometry::PowerWeight r{alpha * frac};
                    const double beta = geometry::beta_span(space, mod);
                    for (const double u : {0.25, 0.75, 1.0}) {
                        const double U = beta * u;
                        const double closed = geometry::entropy_integral(space, mod, r, U);
                        const double quad =
                            geometry::entropy_integral_quad(space, mod, r, U, 1e-12);
                        acc.require(closed > 0.0, "positive integral");
                        acc.require(rel(closed, quad) <= 1e-6,
                                    "entropy integral" + tag2(closed, quad));
                    }
                }
}

// 4: quadratic norm sum equals the analytic standard deviation of the
// weighted gaussian sum
void criterion_4(Acc& acc) {
    for (std::uint64_t i = 0; i < 100; ++i) {
        const auto len = static_cast<std::size_t>(1 + (num::mix64(44, i, 0) % 50));
        std::vector<double> taus(len);
        std::vector<double> weights(len);
        long double acc2 = 0.0L;
        for (std::size_t j = 0; j < len; ++j) {
            taus[j] = 0.5 + 1.5 * udraw(44, i, 2 * j + 1);
            weights[j] = -2.0 + 4.0 * udraw(44, i, 2 * j + 2);
            const long double wt = static_cast<long double>(weights[j]) * taus[j];
            acc2 += wt * wt;
        }
        const double sd = static_cast<double>(std::sqrt(acc2));
        const double got = orlicz::sum_standard(taus, weights, 2.0);
        acc.require(rel(got, sd) <= 1e-12, "gaussian standard" + tag2(got, sd));
    }
}

// 5: monte carlo exceedance stays under the theoretical bound wherever the
// bound is valid and non-vacuous on the 6x6 sweep
void criterion_5(Acc& acc) {
    const auto spec = wiener_example();
    const std::int64_t Ns[6] = {4, 8, 16, 32, 64, 128};
    const double deltas[6] = {0.75, 1.0, 1.25, 1.5, 2.0, 3.0};
    const std::size_t n_paths = 10000;
    const std::size_t grid_points = 257;
    int qualifying = 0;
    for (const std::int64_t N : Ns) {
        std::vector<std::pair<double, double>> cells; // (delta, nu_bound)
        for (const double d : deltas) {
            const auto c =
                planner::check_condition(spec, N, d, planner::Condition::MatchedClassI);
            if (c.valid && c.nu_bound <= 1.0) cells.emplace_back(d, c.nu_bound);
        }
        if (cells.empty()) continue;
        double dmin = cells.front().first;
        for (const auto& [d, nu] : cells) dmin = std::min(dmin, d);
        const std::int64_t N_ref = val::min_reference_level(spec, N, dmin);
        const auto sups = val::remainder_sups(spec, N, N_ref, grid_points, n_paths, 20240817);
        for (const auto& [d, nu] : cells) {
            std::size_t count = 0;
            for (const double v : sups)
                if (v > d) ++count;
            const double emp = static_cast<double>(count) / static_cast<double>(n_paths);
            const double se = std::sqrt(emp * (1.0 - emp) / static_cast<double>(n_paths));
            char what[128];
            std::snprintf(what, sizeof(what),
                          "dominance at N=%lld delta=%g: empirical %.6g vs bound %.6g + 3SE %.6g",
                          static_cast<long long>(N), d, emp, nu, 3.0 * se);
            acc.require(emp <= nu + 3.0 * se, what);
            ++qualifying;
        }
    }
    char what[64];
    std::snprintf(what, sizeof(what), "sweep yields enough valid cells: %d", qualifying);
    acc.require(qualifying >= 10, what);
}

// 6: planner minimality and bit-reproducibility on the wiener example
void criterion_6(Acc& acc) {
    const auto spec = wiener_example();
    const double delta = 0.5;
    const double nu = 0.05;
    const auto cond = planner::Condition::MatchedClassI;
    const auto res = planner::plan_minimal_N(spec, delta, nu, cond);
    acc.require(res.outcome == planner::PlanOutcome::Found, "plan finds a level");
    acc.require(res.N == 431931,
                "frozen minimal level" + tag2(static_cast<double>(res.N), 431931.0));
    const auto at = planner::check_condition_optimized(spec, res.N, delta, cond);
    acc.require(at.valid && at.nu_bound <= nu, "level passes the condition");
    const auto below = planner::check_condition_optimized(spec, res.N - 1, delta, cond);
    acc.require(!(below.valid && below.nu_bound <= nu), "level below fails the condition");

    const auto res2 = planner::plan_minimal_N(spec, delta, nu, cond);
    acc.require(res2.outcome == res.outcome && res2.N == res.N &&
                    nan_or_equal(res2.nu_achieved, res.nu_achieved) &&
                    nan_or_equal(res2.p_opt, res.p_opt) &&
                    nan_or_equal(res2.parts.gamma, res.parts.gamma) &&
                    nan_or_equal(res2.parts.approx, res.parts.approx) &&
                    nan_or_equal(res2.parts.tail, res.parts.tail) &&
                    nan_or_equal(res2.beta_N, res.beta_N) &&
                    nan_or_equal(res2.delta_threshold, res.delta_threshold),
                "bit-reproducible replan");
}

// 7: constant per-coefficient error produces an interior minimum of the
// remainder standard and the irreducible-error outcome
void criterion_7(Acc& acc) {
    const auto spec = wiener_example(0.1);
    const auto cond = planner::Condition::MatchedClassI;
    const auto res = planner::plan_minimal_N(spec, 3.5, 2e-4, cond);
    acc.require(res.outcome == planner::PlanOutcome::IrreducibleError,
                "outcome is the irreducible-error report");
    acc.require(res.parts.approx > 0.0, "approximation part is present");
    acc.require(res.gamma_argmin == 5,
                "interior argmin" + tag2(static_cast<double>(res.gamma_argmin), 5.0));
    acc.require(rel(res.gamma_min, 0.3006579671) <= 1e-6,
                "interior minimum" + tag2(res.gamma_min, 0.3006579671));
    acc.require(res.floor_N == 6,
                "reliability floor level" + tag2(static_cast<double>(res.floor_N), 6.0));
    acc.require(res.floor_nu > 4.4e-4 && res.floor_nu < 5.3e-4,
                "reliability floor value" + tag2(res.floor_nu, 4.84e-4));

    const auto ok = planner::plan_minimal_N(spec, 3.5, 1e-2, cond);
    acc.require(ok.outcome == planner::PlanOutcome::Found, "reachable target is found");
    acc.require(ok.N == 3, "reachable level" + tag2(static_cast<double>(ok.N), 3.0));
}

// 8: monotonicity of the bounds plus the exact two-sided doubling
void criterion_8(Acc& acc) {
    const auto spec = wiener_example();
    const std::int64_t ladder[9] = {1, 2, 4, 8, 16, 32, 64, 128, 256};
    for (std::uint64_t c = 0; c < 1000; ++c) {
        const bool class_one = (c % 2) == 0;
        const double zeta =
            class_one ? 2.0 + 3.0 * udraw(8008, c, 0) : 1.1 + 0.9 * udraw(8008, c, 0);
        const double g = 0.2 + 2.8 * udraw(8008, c, 1);
        const double b = 0.2 + 2.8 * udraw(8008, c, 2);
        const double p = 0.05 + 0.9 * udraw(8008, c, 3);
        const double alpha = 0.25 + 0.5 * udraw(8008, c, 4);
        const double a = alpha * (0.2 + 0.6 * udraw(8008, c, 5));
        const double T = 0.5 + 1.5 * udraw(8008, c, 6);
        const auto phi = orlicz::phi_power(zeta);

        // (a) fixed split fraction: bound non-increasing in the accuracy, and
        // the two-sided value is exactly twice the one-sided value
        const double thr = bounds::split_threshold(phi, g, b, p);
        const double x0 = thr > 0.0 ? thr * 1.01 : 0.05 + udraw(8008, c, 7);
        double prev = std::numeric_limits<double>::infinity();
        for (int j = 0; j < 6; ++j) {
            const double x = x0 * (1.0 + 0.7 * j);
            const auto sup =
                bounds::sup_tail_split(make_query(zeta, g, b, p, x, bounds::Side::Sup, false,
                                                  alpha, a, T));
            const auto abs =
                bounds::sup_tail_split(make_query(zeta, g, b, p, x, bounds::Side::Abs, false,
                                                  alpha, a, T));
            acc.require(sup.valid, "split validity above threshold");
            if (sup.value >= 1e-290)
                acc.require(abs.value == 2.0 * sup.value,
                            "exact doubling" + tag2(abs.value, 2.0 * sup.value));
            else
                acc.require(abs.value <= 5e-290, "doubling in the underflow regime");
            acc.require(sup.value <= prev * (1.0 + 1e-12),
                        "accuracy monotonicity" + tag2(sup.value, prev));
            prev = sup.value;
        }
        {
            const double xm = std::max(bounds::matched_threshold(phi, g, b) * 1.3, 1e-6);
            const geometry::Modulus mod{b / std::pow(T / 2.0, alpha), alpha};
            bounds::MatchedOptions mo;
            mo.side = bounds::Side::Sup;
            const auto msup =
                bounds::sup_tail_matched(phi, g, xm, geometry::IntervalSpace{T}, mod, mo);
            mo.side = bounds::Side::Abs;
            const auto mabs =
                bounds::sup_tail_matched(phi, g, xm, geometry::IntervalSpace{T}, mod, mo);
            if (msup.valid && msup.value >= 1e-290)
                acc.require(mabs.value == 2.0 * msup.value,
                            "matched exact doubling" + tag2(mabs.value, 2.0 * msup.value));
        }

        // (b) fixed fraction on the wiener family: reliability defect bound
        // non-increasing in the accuracy
        const std::int64_t N = 1 + static_cast<std::int64_t>(c % 200);
        const double p2 = 0.02 + 0.2 * udraw(8008, c, 8);
        const double thr2 =
            planner::check_condition(spec, N, 1.0, planner::Condition::SplitClassI, p2).threshold;
        double d0 = thr2 * 1.02;
        prev = std::numeric_limits<double>::infinity();
        for (int j = 0; j < 6; ++j) {
            const double d = d0 * (1.0 + 0.8 * j);
            const auto ck =
                planner::check_condition(spec, N, d, planner::Condition::SplitClassI, p2);
            acc.require(ck.valid, "family split validity above threshold");
            acc.require(ck.nu_bound <= prev * (1.0 + 1e-12),
                        "family accuracy monotonicity" + tag2(ck.nu_bound, prev));
            prev = ck.nu_bound;
        }

        // (c) fixed fraction and accuracy, no approximation error: bound
        // non-increasing along the level ladder wherever it is valid
        const double p3 = 0.02 + 0.15 * udraw(8008, c, 9);
        const double thr_1 =
            planner::check_condition(spec, 1, 1.0, planner::Condition::SplitClassI, p3).threshold;
        const double d4 = thr_1 * (1.4 + udraw(8008, c, 10));
        prev = std::numeric_limits<double>::infinity();
        int seen = 0;
        for (const std::int64_t L : ladder) {
            const auto ck =
                planner::check_condition(spec, L, d4, planner::Condition::SplitClassI, p3);
            if (!ck.valid) continue;
            acc.require(ck.nu_bound <= prev * (1.0 + 1e-12),
                        "level monotonicity" + tag2(ck.nu_bound, prev));
            prev = ck.nu_bound;
            ++seen;
        }
        acc.require(seen >= 2, "level ladder has comparable entries");

        // (d) optimized fraction beats the smaller-accuracy optimum reused at
        // the larger accuracy (the optimized envelope cannot increase)
        if (c % 25 == 0) {
            const std::int64_t N2 = 4 + static_cast<std::int64_t>(c % 60);
            const auto c1 = planner::check_condition_optimized(spec, N2, d0 * 1.5,
                                                               planner::Condition::SplitClassI);
            if (c1.valid) {
                const auto fixed = planner::check_condition(
                    spec, N2, d0 * 2.5, planner::Condition::SplitClassI, c1.p_used);
                const auto c2 = planner::check_condition_optimized(
                    spec, N2, d0 * 2.5, planner::Condition::SplitClassI);
                acc.require(c2.valid, "envelope validity grows with accuracy");
                if (fixed.valid)
                    acc.require(c2.nu_bound <= fixed.nu_bound * (1.0 + 1e-6),
                                "optimized envelope" + tag2(c2.nu_bound, fixed.nu_bound));
            }
        }
    }
}

struct Criterion {
    const char* title;
    void (*fn)(Acc&);
};

const Criterion kCriteria[8] = {
    {"closed-form and numeric optimizers agree", criterion_1},
    {"matched bound is the substituted split bound", criterion_2},
    {"entropy integral matches quadrature", criterion_3},
    {"quadratic sum equals the gaussian standard deviation", criterion_4},
    {"monte carlo exceedance is dominated", criterion_5},
    {"planner is minimal and reproducible", criterion_6},
    {"irreducible error floor is detected", criterion_7},
    {"monotonicity and exact doubling", criterion_8},
};

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <criterion 1..8>\n");
        return 2;
    }
    const int idx = std::atoi(argv[1]);
    if (idx < 1 || idx > 8) {
        std::fprintf(stderr, "usage: acceptance <criterion 1..8>\n");
        return 2;
    }
    const auto& crit = kCriteria[idx - 1];
    Acc acc;
    const auto t0 = std::chrono::steady_clock::now();
    crit.fn(acc);
    const auto t1 = std::chrono::steady_clock::now();
    const double secs = std::chrono::duration<double>(t1 - t0).count();
    std::printf("[%s] criterion %d: %s (%d checks, %.1f s)\n", acc.fails == 0 ? "PASS" : "FAIL",
                idx, crit.title, acc.checks, secs);
    return acc.fails == 0 ? 0 : 1;
}
