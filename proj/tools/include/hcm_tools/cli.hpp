#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hcm/extractor.hpp"

namespace hcm::tools {

/// Process exit codes shared by every subcommand.
enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_usage = 2, exit_faithfulness = 3 };

/// Runs the `hcm` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Seed of instance `index` at size `n` in a stress run with master seed `seed`.
std::uint64_t stress_instance_seed(std::uint64_t seed, int n, int index);

struct StressConfig {
    int n_min = 9;
    int n_max = 14;
    int count = 100;
    std::uint64_t seed = 1;
    int oracle_max_n = 0;  // 0 disables the oracle comparison
    std::array<double, 3> weights{1.0, 1.0, 1.0};
    std::string repro_path = "stress_failure.hcg";
};

struct StressFailure {
    int n = 0;
    int index = 0;
    std::uint64_t seed = 0;
    std::string reason;
};

struct StressSizeStats {
    int passed = 0;
    int failed = 0;
    int min_margin = 1 << 30;         // smallest solve size - m_bound(n)
    int min_oracle_slack = 1 << 30;   // smallest oracle size - solve size
};

struct StressSummary {
    int passed = 0;
    int failed = 0;
    int certified_sets = 0;
    int max_restarts = 0;
    std::map<int, StressSizeStats> by_n;
    std::vector<StressFailure> failures;
};

using StressSolver = std::function<SolveResult(const Colouring&)>;

/// Checks a single instance: the solver's matching verifies at m_bound(n), its trace
/// replays, and (when `with_oracle`) it is no larger than the exact two-coloured optimum.
/// Returns the failure reason, or an empty string.
std::string stress_check(const Colouring& c, const StressSolver& solver, bool with_oracle, int* margin = nullptr,
                         int* oracle_slack = nullptr, ReplayReport* replay = nullptr);

StressSummary run_stress(const StressConfig& config, const StressSolver& solver);

/// Removes vertices from a failing instance while it keeps failing.
Colouring minimize_failure(const Colouring& c, const StressSolver& solver, bool with_oracle);

/// The stress subcommand: prints the summary and, on failure, writes the minimized first
/// failing instance to `config.repro_path`. Returns the exit code.
int stress_command(const StressConfig& config, const StressSolver& solver, std::ostream& out, std::ostream& err);

} // namespace hcm::tools
