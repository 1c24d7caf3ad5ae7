#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "sgm/planner.hpp"

namespace sgm::cli {

enum class Command : std::uint8_t { Bound, Plan, Simulate, Validate, Sweep };
enum class Format : std::uint8_t { Csv, Pretty };

struct RunConfig {
    Command command = Command::Plan;
    std::string spec_path;
    std::string output_dir; // empty: stdout only
    double delta = 0.5;
    double nu = 0.05;
    std::int64_t n = -1;     // level / sweep extent; -1 picks the command default
    std::int64_t paths = -1; // -1 picks the command default
    std::uint64_t seed = 1;
    std::int64_t grid = -1;  // -1 picks the command default
    std::string theorem;     // t4,t5,t7,t8,t11,t12; empty picks the class default
    Format format = Format::Pretty;
};

// thrown on bad command lines; carries the message, main prints usage
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

RunConfig parse_args(int argc, const char* const* argv);

std::string usage();

// condition tag <-> enum (tags follow the model-size condition variants)
planner::Condition condition_from_tag(const std::string& tag);
std::string condition_tag(planner::Condition cond);

// executes the command; returns the process exit status
int run(const RunConfig& config);

} // namespace sgm::cli
