#include "hcm_tools/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "hcm/bounds.hpp"
#include "hcm/generators.hpp"
#include "hcm/oracle.hpp"
#include "hcm_tools/documents.hpp"
#include "hcm_tools/instance_io.hpp"

namespace hcm::tools {

namespace {

std::string join(const std::vector<int>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i ? "," : "") + std::to_string(values[i]);
    return out;
}

std::string format_weights(const std::array<double, 3>& w)
{
    std::ostringstream ss;
    ss << w[0] << ',' << w[1] << ',' << w[2];
    return ss.str();
}

std::array<double, 3> to_weights(const std::vector<double>& v)
{
    if (v.size() != 3)
        throw InputError("--weights takes three values");
    return {v[0], v[1], v[2]};
}

Colour parse_colour(int v) { return Colour(v); }

std::string splitting_text(const Splitting& s) { return s.first.to_string() + "|" + s.second.to_string(); }

void print_class(std::ostream& out, const SextupleClass& cls)
{
    if (cls.universal()) {
        out << "universal";
        for (int g = 0; g < 3; ++g)
            if (cls.avoiding_splits[static_cast<std::size_t>(g)])
                out << " avoid" << g + 1 << "=" << splitting_text(*cls.avoiding_splits[static_cast<std::size_t>(g)]);
        out << "\n";
        return;
    }
    if (cls.spreads.empty()) {
        out << "dominated" << cls.dominated.to_string() << "\n";
        return;
    }
    for (const SpreadInfo& s : cls.spreads)
        out << "spread colour=" << s.colour.value() << " level=" << s.level
            << " plus=" << s.plus.dominant.to_string() << "|" << s.plus.partner.to_string()
            << " minus=" << s.minus.dominant.to_string() << "|" << s.minus.partner.to_string() << "\n";
}

struct Cli {
    Cli(std::ostream& o, std::ostream& e) : out(o), err(e) {}

    std::ostream& out;
    std::ostream& err;

    // generate
    std::vector<int> layers;
    int sharpness = 0;
    int random_n = 0;
    std::vector<double> weights;
    std::uint64_t seed = 0;
    std::string fixture_name;
    std::string output = "-";

    // shared
    std::string instance_path;
    bool json = false;

    // solve
    std::string trace_path;

    // oracle
    std::vector<int> pair;
    bool best_pair = false;
    std::uint64_t budget = default_node_budget;
    bool require_exact = false;

    // verify
    std::string matching_path;
    std::int64_t min_size = -1;
    std::string replay_path;

    // classify
    std::vector<int> sextuple;
    bool scan = false;
    bool spreads_only = false;

    // stress
    std::string n_range;
    StressConfig stress;

    // bound
    std::int64_t bound_n = -1;
    std::int64_t bound_k = -1;
    std::vector<int> general;

    int generate(const CLI::App& cmd)
    {
        const int modes = !layers.empty() + (sharpness > 0) + (random_n > 0) + !fixture_name.empty();
        if (modes != 1)
            throw CLI::ValidationError("generate", "give exactly one of --layers, --sharpness, --random, --fixture");
        if (!weights.empty() && random_n == 0)
            throw CLI::ValidationError("generate", "--weights only applies to --random");
        if (cmd.count("--seed") && random_n == 0)
            throw CLI::ValidationError("generate", "--seed only applies to --random");
        InstanceFile file;
        std::string summary;
        if (!layers.empty()) {
            if (layers.size() != 3)
                throw InputError("--layers takes three sizes a,b,c");
            file.colouring = layered_lowest_colour(LayerSpec{layers[0], layers[1], layers[2]});
            summary = "layered " + join(layers);
        } else if (sharpness > 0) {
            const LayerSpec l = sharpness_layers(sharpness);
            file.colouring = sharpness_instance(sharpness);
            summary = "sharpness k=" + std::to_string(sharpness) + " layers " + join({l.a, l.b, l.c});
        } else if (random_n > 0) {
            const std::array<double, 3> w = weights.empty() ? std::array<double, 3>{1, 1, 1} : to_weights(weights);
            file.colouring = random_colouring(random_n, seed, w);
            summary = "random seed=" + std::to_string(seed) + " weights=" + format_weights(w) + " generator=" +
                      std::string(random_generator_id);
        } else {
            file.colouring = fixture(fixture_name);
            summary = "fixture " + fixture_name;
        }
        file.comments = {"# " + summary};
        if (output == "-") {
            out << serialize_instance(file);
        } else {
            write_text(output, serialize_instance(file));
            out << "n=" << file.colouring.n() << " " << summary << "\n";
        }
        return exit_ok;
    }

    int solve_cmd()
    {
        const InstanceFile file = read_instance(instance_path);
        const Colouring& c = file.colouring;
        const SolveResult result = hcm::solve(c);
        MatchingDocument doc;
        doc.n = c.n();
        doc.source = "solve";
        doc.matching = result.matching;
        doc.colours = ColourSet::full();
        if (result.matching.avoided)
            doc.colours.erase(*result.matching.avoided);
        if (!trace_path.empty()) {
            doc.trace_path = trace_path;
            write_text(trace_path, trace_to_jsonl(result.trace));
        }
        const std::string text = to_json(doc).dump(2) + "\n";
        if (output != "-")
            write_text(output, text);
        if (json)
            out << text;
        else
            out << "size=" << result.matching.size() << " avoided="
                << (result.matching.avoided ? std::to_string(result.matching.avoided->value()) : "-")
                << " bound=" << m_bound(c.n()) << " n=" << c.n() << " restarts=" << result.restarts << "\n";
        return exit_ok;
    }

    int oracle_cmd()
    {
        const InstanceFile file = read_instance(instance_path);
        const Colouring& c = file.colouring;
        if (!pair.empty() && best_pair)
            throw CLI::ValidationError("oracle", "--pair and --best-pair are exclusive");
        MatchingDocument doc;
        doc.n = c.n();
        doc.source = "oracle";
        OracleResult r;
        if (!pair.empty()) {
            if (pair.size() != 2 || pair[0] == pair[1])
                throw InputError("--pair takes two different colours");
            doc.colours = ColourSet{parse_colour(pair[0]), parse_colour(pair[1])};
            r = max_matching_in_colours(c, c.vertices(), doc.colours, budget);
        } else {
            TwoColouredResult best = max_two_coloured(c, c.vertices(), budget);
            doc.colours = best.pair;
            r = std::move(best.result);
        }
        doc.matching = r.matching;
        doc.matching.avoided = doc.colours.complement().empty()
                                   ? std::nullopt
                                   : std::optional<Colour>(Colour(std::countr_zero(doc.colours.complement().bits()) + 1));
        doc.exact = r.exact;
        doc.budget_hit = r.budget_hit;
        doc.explored = r.explored;
        const std::string text = to_json(doc).dump(2) + "\n";
        if (output != "-")
            write_text(output, text);
        if (json)
            out << text;
        else
            out << "size=" << r.matching.size() << " pair=" << doc.colours.to_string()
                << " exact=" << (r.exact ? "yes" : "no") << " budget_hit=" << (r.budget_hit ? "yes" : "no")
                << " explored=" << r.explored << "\n";
        if (require_exact && !r.exact) {
            err << "oracle result is not exact (node budget exhausted)\n";
            return exit_failed;
        }
        return exit_ok;
    }

    int verify_cmd()
    {
        const InstanceFile file = read_instance(instance_path);
        const Colouring& c = file.colouring;
        MatchingDocument doc;
        try {
            doc = matching_document_from_json(Json::parse(read_text(matching_path)));
        } catch (const Json::exception& e) {
            throw InputError(std::string("matching document is not JSON: ") + e.what());
        }
        std::vector<std::string> violations;
        if (doc.n != c.n())
            violations.push_back("document is for n=" + std::to_string(doc.n) + " but the instance has n=" +
                                 std::to_string(c.n()));
        const int bound = static_cast<int>(min_size >= 0 ? min_size : m_bound(c.n()));
        const VerificationReport report = verify_matching(c, doc.matching, bound);
        violations.insert(violations.end(), report.violations.begin(), report.violations.end());
        if (!replay_path.empty()) {
            const ReplayReport r = replay_trace(c, trace_from_jsonl(read_text(replay_path)));
            for (const std::string& v : r.violations)
                violations.push_back("trace: " + v);
        }
        if (!violations.empty()) {
            for (const std::string& v : violations)
                err << "violation: " << v << "\n";
            out << "invalid size=" << report.size << " min=" << bound << "\n";
            return exit_failed;
        }
        out << "valid size=" << report.size << " min=" << bound << " colours=" << report.colours_used.to_string()
            << "\n";
        return exit_ok;
    }

    int classify_cmd()
    {
        const InstanceFile file = read_instance(instance_path);
        const Colouring& c = file.colouring;
        if (!sextuple.empty() == scan)
            throw CLI::ValidationError("classify", "give exactly one of --sextuple and --scan");
        if (!sextuple.empty()) {
            std::vector<int> sorted = sextuple;
            std::sort(sorted.begin(), sorted.end());
            if (sorted.size() != 6 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw InputError("--sextuple needs six distinct vertices");
            if (sorted.back() >= c.n() || sorted.front() < 0)
                throw InputError("--sextuple vertex outside the instance");
            print_class(out, classify_sextuple(c, VertexSet::from(sorted)));
            return exit_ok;
        }
        if (spreads_only) {
            const auto spreads = scan_spreads(c, c.vertices());
            out << "spreads: " << spreads.size() << "\n";
            for (const SpreadInfo& s : spreads)
                out << s.vertices.to_string() << " colour=" << s.colour.value() << " level=" << s.level << "\n";
            return exit_ok;
        }
        std::map<unsigned, std::pair<long, VertexSet>> dominated;
        long universal = 0, spreads = 0;
        std::optional<VertexSet> first_universal, first_spread;
        for_each_subset(c.vertices(), 6, [&](VertexSet s) {
            const SextupleClass cls = classify_sextuple(c, s);
            if (cls.universal()) {
                if (universal++ == 0)
                    first_universal = s;
            } else {
                auto& entry = dominated[cls.dominated.bits()];
                if (entry.first++ == 0)
                    entry.second = s;
            }
            if (!cls.spreads.empty() && spreads++ == 0)
                first_spread = s;
            return false;
        });
        bool first = true;
        for (const auto& [bits, entry] : dominated) {
            out << (first ? "" : ", ") << "dominated" << ColourSet::from_bits(bits).to_string() << ": " << entry.first;
            first = false;
        }
        out << (first ? "" : ", ") << "universal: " << universal << ", spreads: " << spreads << "\n";
        for (const auto& [bits, entry] : dominated)
            out << "lowest dominated" << ColourSet::from_bits(bits).to_string() << " " << entry.second.to_string()
                << "\n";
        if (first_universal)
            out << "lowest universal " << first_universal->to_string() << "\n";
        if (first_spread)
            out << "lowest spread " << first_spread->to_string() << "\n";
        return exit_ok;
    }

    int stress_cmd()
    {
        const auto dots = n_range.find("..");
        if (dots == std::string::npos)
            throw InputError("--n-range must look like a..b");
        try {
            stress.n_min = std::stoi(n_range.substr(0, dots));
            stress.n_max = std::stoi(n_range.substr(dots + 2));
        } catch (const std::exception&) {
            throw InputError("--n-range must look like a..b");
        }
        if (!weights.empty())
            stress.weights = to_weights(weights);
        return stress_command(stress, [](const Colouring& c) { return hcm::solve(c); }, out, err);
    }

    int bound_cmd()
    {
        const int modes = (bound_n >= 0) + (bound_k >= 0) + !general.empty();
        if (modes != 1)
            throw CLI::ValidationError("bound", "give exactly one of --n, --k, --general");
        if (bound_n >= 0)
            out << m_bound(bound_n) << "\n";
        else if (bound_k >= 0)
            out << smallest_n_for(bound_k) << "\n";
        else {
            if (general.size() != 4)
                throw InputError("--general takes r,t,s,k");
            out << conjecture_bound(ConjectureParams{general[0], general[1], general[2], general[3]}) << "\n";
        }
        return exit_ok;
    }
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Cli cli(out, err);
    CLI::App app{"Two-coloured matchings in 3-coloured complete 3-uniform hypergraphs", "hcm"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "Write an instance file");
    gen->add_option("--layers", cli.layers, "Layered colouring with layer sizes a,b,c")->delimiter(',');
    gen->add_option("--sharpness", cli.sharpness, "Sharpness instance for matching size k")->check(CLI::PositiveNumber);
    gen->add_option("--random", cli.random_n, "Random colouring on n vertices")->check(CLI::Range(3, max_vertices));
    gen->add_option("--weights", cli.weights, "Colour weights w1,w2,w3 for --random")->delimiter(',');
    gen->add_option("--seed", cli.seed, "Seed for --random");
    gen->add_option("--fixture", cli.fixture_name, "Named fixture (FIX-A, FIX-B, FIX-C)");
    gen->add_option("-o,--output", cli.output, "Output file ('-' for stdout)");

    auto* solve = app.add_subcommand("solve", "Find a two-coloured matching of size at least m(n)");
    solve->add_option("instance", cli.instance_path, "Instance file")->required();
    solve->add_option("--trace", cli.trace_path, "Write the trace as JSON lines");
    solve->add_option("-o,--output", cli.output, "Write the matching document");
    solve->add_flag("--json", cli.json, "Print the matching document");

    auto* oracle = app.add_subcommand("oracle", "Exact maximum matching in a colour pair");
    oracle->add_option("instance", cli.instance_path, "Instance file")->required();
    oracle->add_option("--pair", cli.pair, "Colour pair a,b")->delimiter(',');
    oracle->add_flag("--best-pair", cli.best_pair, "Best of the three colour pairs (default)");
    oracle->add_option("--budget", cli.budget, "Search node budget");
    oracle->add_flag("--require-exact", cli.require_exact, "Fail when the budget runs out");
    oracle->add_option("-o,--output", cli.output, "Write the matching document");
    oracle->add_flag("--json", cli.json, "Print the matching document");

    auto* verify = app.add_subcommand("verify", "Check a matching document against an instance");
    verify->add_option("instance", cli.instance_path, "Instance file")->required();
    verify->add_option("matching", cli.matching_path, "Matching document ('-' for stdin)")->required();
    verify->add_option("--min", cli.min_size, "Minimum size (default m(n))");
    verify->add_option("--trace", cli.replay_path, "Also replay this trace");

    auto* classify = app.add_subcommand("classify", "Classify sextuples");
    classify->add_option("instance", cli.instance_path, "Instance file")->required();
    classify->add_option("--sextuple", cli.sextuple, "Six vertex ids")->delimiter(',');
    classify->add_flag("--scan", cli.scan, "Scan all sextuples");
    classify->add_flag("--spreads-only", cli.spreads_only, "With --scan, list the spreads");

    auto* stress = app.add_subcommand("stress", "Solve and verify seeded random instances");
    stress->add_option("--n-range", cli.n_range, "Vertex counts a..b")->required();
    stress->add_option("--count", cli.stress.count, "Instances per vertex count")->required();
    stress->add_option("--seed", cli.stress.seed, "Master seed")->required();
    stress->add_option("--oracle-max-n", cli.stress.oracle_max_n, "Compare with the oracle up to this n");
    stress->add_option("--weights", cli.weights, "Colour weights w1,w2,w3")->delimiter(',');
    stress->add_option("--repro", cli.stress.repro_path, "Where to write a failing instance");

    auto* bound = app.add_subcommand("bound", "Bound arithmetic");
    bound->add_option("--n", cli.bound_n, "m(n) for n vertices")->check(CLI::NonNegativeNumber);
    bound->add_option("--k", cli.bound_k, "Smallest n with m(n) >= k")->check(CLI::PositiveNumber);
    bound->add_option("--general", cli.general, "Conjectured vertex count for r,t,s,k")->delimiter(',');

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (gen->parsed())
            return cli.generate(*gen);
        if (solve->parsed())
            return cli.solve_cmd();
        if (oracle->parsed())
            return cli.oracle_cmd();
        if (verify->parsed())
            return cli.verify_cmd();
        if (classify->parsed())
            return cli.classify_cmd();
        if (stress->parsed())
            return cli.stress_cmd();
        return cli.bound_cmd();
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    } catch (const FaithfulnessError& e) {
        err << "faithfulness error: " << e.what() << "\n";
        return exit_faithfulness;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_failed;
    }
}

} // namespace hcm::tools
