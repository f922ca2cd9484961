#include <algorithm>
#include <ostream>

#include "hcm/bounds.hpp"
#include "hcm/generators.hpp"
#include "hcm/oracle.hpp"
#include "hcm_tools/cli.hpp"
#include "hcm_tools/instance_io.hpp"

namespace hcm::tools {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t stress_instance_seed(std::uint64_t seed, int n, int index)
{
    return splitmix64(splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(n)) ^ static_cast<std::uint64_t>(index));
}

std::string stress_check(const Colouring& c, const StressSolver& solver, bool with_oracle, int* margin,
                         int* oracle_slack, ReplayReport* replay)
{
    SolveResult result;
    try {
        result = solver(c);
    } catch (const FaithfulnessError& e) {
        return std::string("faithfulness: ") + e.what();
    } catch (const Error& e) {
        return std::string("error: ") + e.what();
    }
    const int bound = static_cast<int>(m_bound(c.n()));
    const VerificationReport report = verify_matching(c, result.matching, bound);
    if (!report.valid)
        return "verify: " + report.violations.front();
    if (margin)
        *margin = result.matching.size() - bound;
    const ReplayReport r = replay_trace(c, result.trace);
    if (replay)
        *replay = r;
    if (!r.valid)
        return "replay: " + r.violations.front();
    if (with_oracle) {
        const TwoColouredResult best = max_two_coloured(c, c.vertices());
        if (!best.result.exact)
            return "oracle: budget exhausted";
        if (result.matching.size() > best.result.matching.size())
            return "oracle: solve found " + std::to_string(result.matching.size()) + " but the optimum is " +
                   std::to_string(best.result.matching.size());
        if (oracle_slack)
            *oracle_slack = best.result.matching.size() - result.matching.size();
    }
    return {};
}

StressSummary run_stress(const StressConfig& config, const StressSolver& solver)
{
    if (config.n_min < 3 || config.n_max < config.n_min || config.n_max > max_vertices)
        throw InputError("stress n-range must satisfy 3 <= a <= b <= 64");
    if (config.count < 0)
        throw InputError("stress count must be non-negative");
    StressSummary summary;
    for (int n = config.n_min; n <= config.n_max; ++n) {
        StressSizeStats& stats = summary.by_n[n];
        const bool with_oracle = n <= config.oracle_max_n;
        for (int i = 0; i < config.count; ++i) {
            const std::uint64_t seed = stress_instance_seed(config.seed, n, i);
            const Colouring c = random_colouring(n, seed, config.weights);
            int margin = 0, slack = 0;
            ReplayReport replay;
            const std::string reason = stress_check(c, solver, with_oracle, &margin, &slack, &replay);
            summary.certified_sets += replay.certified_sets;
            summary.max_restarts = std::max(summary.max_restarts, replay.restarts);
            if (reason.empty()) {
                ++stats.passed;
                ++summary.passed;
                stats.min_margin = std::min(stats.min_margin, margin);
                if (with_oracle)
                    stats.min_oracle_slack = std::min(stats.min_oracle_slack, slack);
            } else {
                ++stats.failed;
                ++summary.failed;
                summary.failures.push_back(StressFailure{n, i, seed, reason});
            }
        }
    }
    return summary;
}

Colouring minimize_failure(const Colouring& c, const StressSolver& solver, bool with_oracle)
{
    Colouring current = c;
    bool shrunk = true;
    while (shrunk && current.n() > 3) {
        shrunk = false;
        for (Vertex v = current.n() - 1; v >= 0; --v) {
            VertexSet keep = current.vertices();
            keep.erase(v);
            Colouring smaller = current.induced(keep);
            if (!stress_check(smaller, solver, with_oracle).empty()) {
                current = std::move(smaller);
                shrunk = true;
                break;
            }
        }
    }
    return current;
}

int stress_command(const StressConfig& config, const StressSolver& solver, std::ostream& out, std::ostream& err)
{
    const StressSummary summary = run_stress(config, solver);
    for (const auto& [n, s] : summary.by_n) {
        out << "n=" << n << " passed=" << s.passed << " failed=" << s.failed;
        if (s.passed > 0)
            out << " worst_margin=" << s.min_margin;
        if (n <= config.oracle_max_n && s.passed > 0)
            out << " worst_oracle_slack=" << s.min_oracle_slack;
        out << "\n";
    }
    out << "total passed=" << summary.passed << " failed=" << summary.failed
        << " certified_sets=" << summary.certified_sets << " max_restarts=" << summary.max_restarts << "\n";
    if (summary.failures.empty())
        return exit_ok;

    for (const StressFailure& f : summary.failures)
        err << "FAIL n=" << f.n << " index=" << f.index << " seed=" << f.seed << ": " << f.reason << "\n";
    const StressFailure& first = summary.failures.front();
    const Colouring original = random_colouring(first.n, first.seed, config.weights);
    const bool with_oracle = first.n <= config.oracle_max_n;
    InstanceFile repro;
    repro.colouring = minimize_failure(original, solver, with_oracle);
    repro.comments = {"# stress failure n=" + std::to_string(first.n) + " index=" + std::to_string(first.index) +
                          " seed=" + std::to_string(first.seed),
                      "# reason: " + first.reason,
                      "# minimized to n=" + std::to_string(repro.colouring.n())};
    write_text(config.repro_path, serialize_instance(repro));
    err << "minimized failing instance written to " << config.repro_path << "\n";
    return exit_failed;
}

} // namespace hcm::tools
