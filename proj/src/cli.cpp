#include "sgm/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <vector>

#include "sgm/bounds.hpp"
#include "sgm/simulate.hpp"
#include "sgm/spec_text.hpp"
#include "sgm/validate.hpp"

namespace sgm::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string fmt9(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

std::string fmt(std::int64_t v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fmt_flag(bool b) { return b ? "1" : "0"; }

double parse_f(const std::string& text, const std::string& flag) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw UsageError("flag " + flag + " needs a number, got '" + text + "'");
    return v;
}

std::int64_t parse_i(const std::string& text, const std::string& flag) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const long long v = std::strtoll(begin, &end, 10);
    if (end == begin || *end != '\0')
        throw UsageError("flag " + flag + " needs an integer, got '" + text + "'");
    return v;
}

// accumulates CSV text; emits to --out and/or stdout depending on the config
struct Sink {
    explicit Sink(const RunConfig& c) : cfg(c) {}
    const RunConfig& cfg;
    std::string csv;

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) csv += ',';
            csv += cells[i];
        }
        csv += '\n';
    }

    void flush(const std::string& name) const {
        if (!cfg.output_dir.empty()) {
            const std::filesystem::path dir(cfg.output_dir);
            std::filesystem::create_directories(dir);
            const auto path = dir / (name + ".csv");
            std::ofstream f(path, std::ios::binary);
            if (!f) throw std::runtime_error("cli: cannot write " + path.string());
            f << csv;
        }
        if (cfg.format == Format::Csv) std::cout << csv;
    }
};

planner::Condition default_condition(const process::ProcessSpec& spec) {
    return spec.phi.cls == orlicz::PhiClass::PowerAtLeastTwo ? planner::Condition::MatchedClassI
                                                             : planner::Condition::MatchedClassII;
}

std::string outcome_name(planner::PlanOutcome o) {
    switch (o) {
        case planner::PlanOutcome::Found: return "found";
        case planner::PlanOutcome::IrreducibleError: return "irreducible-error";
        case planner::PlanOutcome::Unreachable: return "unreachable";
    }
    return "?";
}

void pretty_table(const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w(header.size(), 0);
    for (std::size_t c = 0; c < header.size(); ++c) w[c] = header[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c)
            std::cout << (c ? "  " : "") << std::setw(static_cast<int>(w[c])) << cells[c];
        std::cout << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
}

int cmd_bound(const RunConfig& cfg, const process::ProcessSpec& spec, planner::Condition cond) {
    const std::int64_t N = cfg.n >= 0 ? cfg.n : 16;
    const auto parts = planner::gamma_N(spec, N);
    const auto mod_N = planner::remainder_modulus(spec, N);
    const bool split = planner::condition_has_free_p(cond);

    // sweep accuracies around the larger of --delta and the validity edge
    double x0 = cfg.delta;
    if (parts.gamma > 0.0) {
        const auto probe = planner::check_condition_optimized(spec, N, cfg.delta, cond);
        if (std::isfinite(probe.threshold) && probe.threshold > x0) x0 = probe.threshold;
    }

    Sink out(cfg);
    const std::vector<std::string> header{"x", "Z_sup", "Z_abs", "valid", "lambda_opt"};
    out.row(header);
    std::vector<std::vector<std::string>> pretty;
    bool any_valid = false;
    for (int i = 0; i <= 100; ++i) {
        const double x = x0 * (0.5 + 2.5 * static_cast<double>(i) / 100.0);
        double z_sup = 0.0;
        double lambda = kNaN;
        bool valid = true;
        if (parts.gamma > 0.0) {
            if (split) {
                const auto c = planner::check_condition_optimized(spec, N, x, cond);
                bounds::TailQuery q;
                q.phi = spec.phi;
                q.gamma = parts.gamma;
                q.beta = geometry::beta_span(spec.space, mod_N);
                q.p = c.p_used;
                q.x = x;
                q.space = spec.space;
                q.mod = mod_N;
                q.entropy = bounds::EntropySpec{false, spec.entropy_a};
                q.side = bounds::Side::Sup;
                const auto b = bounds::sup_tail_split(q);
                z_sup = b.value;
                lambda = b.lambda_opt;
                valid = b.valid;
            } else {
                bounds::MatchedOptions mo;
                mo.side = bounds::Side::Sup;
                const auto b = bounds::sup_tail_matched(spec.phi, parts.gamma, x, spec.space,
                                                        mod_N, mo);
                z_sup = b.value;
                lambda = b.lambda_opt;
                valid = b.valid;
            }
        }
        any_valid = any_valid || valid;
        out.row({fmt(x), fmt(z_sup), fmt(2.0 * z_sup), fmt_flag(valid), fmt(lambda)});
        if (cfg.format == Format::Pretty)
            pretty.push_back(
                {fmt9(x), fmt9(z_sup), fmt9(2.0 * z_sup), fmt_flag(valid), fmt9(lambda)});
    }
    out.flush("bound");
    if (cfg.format == Format::Pretty) pretty_table(header, pretty);
    return any_valid ? 0 : 2;
}

int cmd_plan(const RunConfig& cfg, const process::ProcessSpec& spec, planner::Condition cond) {
    const auto res = planner::plan_minimal_N(spec, cfg.delta, cfg.nu, cond);
    Sink out(cfg);
    out.row({"outcome", "condition", "N", "p_opt", "nu_achieved", "gamma_N", "approx_part",
             "tail_part", "beta_N", "delta_threshold", "linear_fallback", "floor_N", "floor_nu",
             "gamma_argmin", "gamma_min"});
    out.row({outcome_name(res.outcome), condition_tag(res.condition), fmt(res.N), fmt(res.p_opt),
             fmt(res.nu_achieved), fmt(res.parts.gamma), fmt(res.parts.approx),
             fmt(res.parts.tail), fmt(res.beta_N), fmt(res.delta_threshold),
             fmt_flag(res.linear_fallback), fmt(res.floor_N), fmt(res.floor_nu),
             fmt(res.gamma_argmin), fmt(res.gamma_min)});
    out.flush("plan");
    if (cfg.format == Format::Pretty) {
        std::cout << "outcome:         " << outcome_name(res.outcome) << "\n"
                  << "condition:       " << condition_tag(res.condition) << "\n";
        if (res.outcome == planner::PlanOutcome::Found) {
            std::cout << "N:               " << res.N << "\n"
                      << "nu_achieved:     " << fmt9(res.nu_achieved) << " (target "
                      << fmt9(cfg.nu) << ")\n"
                      << "p_opt:           " << fmt9(res.p_opt) << "\n";
        } else {
            std::cout << "floor_N:         " << res.floor_N << "\n"
                      << "floor_nu:        " << fmt9(res.floor_nu) << " (target " << fmt9(cfg.nu)
                      << ")\n"
                      << "gamma_argmin:    " << res.gamma_argmin << "\n"
                      << "gamma_min:       " << fmt9(res.gamma_min) << "\n";
        }
        std::cout << "gamma_N:         " << fmt9(res.parts.gamma) << " (approx "
                  << fmt9(res.parts.approx) << ", tail " << fmt9(res.parts.tail) << ")\n"
                  << "beta_N:          " << fmt9(res.beta_N) << "\n"
                  << "delta_threshold: " << fmt9(res.delta_threshold) << "\n"
                  << "linear_fallback: " << (res.linear_fallback ? "yes" : "no") << "\n";
    }
    return res.outcome == planner::PlanOutcome::Found ? 0 : 2;
}

int cmd_simulate(const RunConfig& cfg, const process::ProcessSpec& spec) {
    const std::int64_t N = cfg.n >= 0 ? cfg.n : 16;
    const std::int64_t grid_n = cfg.grid > 0 ? cfg.grid : 4097;
    const std::int64_t paths = cfg.paths >= 0 ? cfg.paths : 8;
    const auto grid = sim::uniform_grid(spec.space, static_cast<std::size_t>(grid_n));
    const auto batch = sim::sample_paths(spec, N, grid, static_cast<std::size_t>(paths), cfg.seed,
                                         spec.has_approx());

    Sink out(cfg);
    std::vector<std::string> header{"t"};
    for (std::int64_t i = 0; i < paths; ++i) header.push_back("path_" + fmt(i));
    out.row(header);
    for (std::size_t j = 0; j < batch.grid.size(); ++j) {
        std::vector<std::string> cells{fmt(batch.grid[j])};
        for (std::size_t i = 0; i < batch.paths.size(); ++i) cells.push_back(fmt(batch.paths[i][j]));
        out.row(cells);
    }
    out.flush("simulate");
    if (cfg.format == Format::Pretty) {
        std::cout << "paths: " << paths << ", terms used: " << batch.N_used
                  << ", grid points: " << batch.grid.size() << ", seed: " << cfg.seed << "\n";
        for (std::size_t i = 0; i < batch.paths.size(); ++i) {
            double sup = 0.0;
            for (const double v : batch.paths[i]) sup = std::max(sup, std::abs(v));
            std::cout << "path " << i << ": sup|X| = " << fmt9(sup)
                      << ", X(T) = " << fmt9(batch.paths[i].back()) << "\n";
        }
    }
    return 0;
}

int cmd_validate(const RunConfig& cfg, const process::ProcessSpec& spec,
                 planner::Condition cond) {
    const std::int64_t N = cfg.n >= 0 ? cfg.n : 16;
    const std::int64_t grid_n = cfg.grid > 0 ? cfg.grid : 257;
    const std::int64_t paths = cfg.paths > 0 ? cfg.paths : 10000;
    const auto rep = val::estimate_exceedance(spec, N, 0, cfg.delta,
                                              static_cast<std::size_t>(grid_n),
                                              static_cast<std::size_t>(paths), cfg.seed, cond, {});

    Sink out(cfg);
    out.row({"empirical_prob", "standard_error", "theoretical_bound", "dominated", "n_paths", "N",
             "N_ref", "delta", "bound_valid", "neglected_gamma", "grid_points"});
    out.row({fmt(rep.empirical_prob), fmt(rep.standard_error), fmt(rep.theoretical_bound),
             fmt_flag(rep.dominated), fmt(static_cast<std::int64_t>(rep.n_paths)), fmt(rep.N),
             fmt(rep.N_ref), fmt(rep.delta), fmt_flag(rep.bound_valid), fmt(rep.neglected_gamma),
             fmt(static_cast<std::int64_t>(rep.grid_points))});
    out.flush("validate");

    std::ostream& vs = cfg.format == Format::Csv ? std::cerr : std::cout;
    if (cfg.format == Format::Pretty) {
        vs << "empirical_prob:    " << fmt9(rep.empirical_prob) << "\n"
           << "standard_error:    " << fmt9(rep.standard_error) << "\n"
           << "theoretical_bound: " << fmt9(rep.theoretical_bound) << "\n"
           << "N: " << rep.N << ", N_ref: " << rep.N_ref << ", paths: " << rep.n_paths
           << ", delta: " << fmt9(rep.delta) << "\n"
           << "note: sup taken over a " << rep.grid_points
           << "-point grid; the empirical side under-reads the true sup\n"
           << "note: neglected tail beyond N_ref contributes at most " << fmt9(rep.neglected_gamma)
           << " to the remainder standard\n";
    }
    if (!rep.bound_valid) {
        vs << "verdict: bound not applicable at N=" << rep.N << ", delta=" << fmt9(rep.delta)
           << " (below the validity threshold or above 1); no dominance claim\n";
        return 2;
    }
    if (!rep.dominated) {
        vs << "WARNING: empirical exceedance " << fmt9(rep.empirical_prob)
           << " violates the bound " << fmt9(rep.theoretical_bound) << " + 3*SE "
           << fmt9(3.0 * rep.standard_error) << "\n";
        return 1;
    }
    vs << "verdict: dominated (empirical " << fmt9(rep.empirical_prob) << " <= bound "
       << fmt9(rep.theoretical_bound) << " + 3*SE " << fmt9(3.0 * rep.standard_error) << ")\n";
    return 0;
}

int cmd_sweep(const RunConfig& cfg, const process::ProcessSpec& spec, planner::Condition cond) {
    const std::int64_t n_max = cfg.n > 0 ? cfg.n : 128;
    Sink out(cfg);
    const std::vector<std::string> header{"N", "gamma_N", "nu_bound"};
    out.row(header);
    std::vector<std::vector<std::string>> pretty;
    for (std::int64_t N = 1; N <= n_max; ++N) {
        const auto c = planner::check_condition_optimized(spec, N, cfg.delta, cond);
        out.row({fmt(N), fmt(c.parts.gamma), fmt(c.nu_bound)});
        if (cfg.format == Format::Pretty)
            pretty.push_back({fmt(N), fmt9(c.parts.gamma), fmt9(c.nu_bound)});
    }
    out.flush("sweep");
    if (cfg.format == Format::Pretty) pretty_table(header, pretty);
    return 0;
}

} // namespace

std::string usage() {
    return "usage: sgmodel <bound|plan|simulate|validate|sweep> --spec PATH [options]\n"
           "  --spec PATH      process description file (required)\n"
           "  --out DIR        also write the command's CSV into DIR\n"
           "  --delta F        accuracy target (default 0.5)\n"
           "  --nu F           reliability defect target for plan (default 0.05)\n"
           "  --n INT          model level / sweep extent (defaults per command)\n"
           "  --paths INT      Monte Carlo paths (simulate 8, validate 10000)\n"
           "  --seed INT       RNG seed (default 1)\n"
           "  --grid INT       grid points (simulate 4097, validate 257)\n"
           "  --theorem TAG    condition variant: t4,t5 (split p), t7,t8 (matched),\n"
           "                   t11,t12 (combined); default matches the moment class\n"
           "  --format F       csv or pretty (default pretty)\n";
}

planner::Condition condition_from_tag(const std::string& tag) {
    if (tag == "t4") return planner::Condition::SplitClassI;
    if (tag == "t5") return planner::Condition::SplitClassII;
    if (tag == "t7") return planner::Condition::MatchedClassI;
    if (tag == "t8") return planner::Condition::MatchedClassII;
    if (tag == "t11") return planner::Condition::CombinedClassI;
    if (tag == "t12") return planner::Condition::CombinedClassII;
    throw UsageError("unknown theorem tag '" + tag + "' (expected t4,t5,t7,t8,t11,t12)");
}

std::string condition_tag(planner::Condition cond) {
    switch (cond) {
        case planner::Condition::SplitClassI: return "t4";
        case planner::Condition::SplitClassII: return "t5";
        case planner::Condition::MatchedClassI: return "t7";
        case planner::Condition::MatchedClassII: return "t8";
        case planner::Condition::CombinedClassI: return "t11";
        case planner::Condition::CombinedClassII: return "t12";
    }
    return "?";
}

RunConfig parse_args(int argc, const char* const* argv) {
    if (argc < 2) throw UsageError("missing command");
    RunConfig c;
    const std::string cmd = argv[1];
    if (cmd == "bound") c.command = Command::Bound;
    else if (cmd == "plan") c.command = Command::Plan;
    else if (cmd == "simulate") c.command = Command::Simulate;
    else if (cmd == "validate") c.command = Command::Validate;
    else if (cmd == "sweep") c.command = Command::Sweep;
    else throw UsageError("unknown command '" + cmd + "'");

    for (int i = 2; i < argc; ++i) {
        const std::string flag = argv[i];
        auto need = [&]() -> std::string {
            if (i + 1 >= argc) throw UsageError("flag " + flag + " needs a value");
            return argv[++i];
        };
        if (flag == "--spec") c.spec_path = need();
        else if (flag == "--out") c.output_dir = need();
        else if (flag == "--delta") c.delta = parse_f(need(), flag);
        else if (flag == "--nu") c.nu = parse_f(need(), flag);
        else if (flag == "--n") c.n = parse_i(need(), flag);
        else if (flag == "--paths") c.paths = parse_i(need(), flag);
        else if (flag == "--seed") {
            const std::int64_t s = parse_i(need(), flag);
            if (s < 0) throw UsageError("flag --seed needs a non-negative integer");
            c.seed = static_cast<std::uint64_t>(s);
        } else if (flag == "--grid") c.grid = parse_i(need(), flag);
        else if (flag == "--theorem") c.theorem = need();
        else if (flag == "--format") {
            const std::string v = need();
            if (v == "csv") c.format = Format::Csv;
            else if (v == "pretty") c.format = Format::Pretty;
            else throw UsageError("flag --format expects csv or pretty, got '" + v + "'");
        } else {
            throw UsageError("unknown flag '" + flag + "'");
        }
    }
    if (c.spec_path.empty()) throw UsageError("--spec is required");
    if (!c.theorem.empty()) condition_from_tag(c.theorem);
    return c;
}

int run(const RunConfig& cfg) {
    try {
        const auto spec = spec_text::parse_spec(cfg.spec_path);
        const auto cond =
            cfg.theorem.empty() ? default_condition(spec) : condition_from_tag(cfg.theorem);
        switch (cfg.command) {
            case Command::Bound: return cmd_bound(cfg, spec, cond);
            case Command::Plan: return cmd_plan(cfg, spec, cond);
            case Command::Simulate: return cmd_simulate(cfg, spec);
            case Command::Validate: return cmd_validate(cfg, spec, cond);
            case Command::Sweep: return cmd_sweep(cfg, spec, cond);
        }
        return 1;
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace sgm::cli
