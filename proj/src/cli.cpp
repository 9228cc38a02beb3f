#include "satgraph/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "satgraph/bounds.hpp"
#include "satgraph/errors.hpp"
#include "satgraph/product_graph.hpp"
#include "satgraph/realizer.hpp"
#include "satgraph/saturation.hpp"
#include "satgraph/seeded_stream.hpp"
#include "satgraph/serialization.hpp"

namespace satgraph::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

BuildMode parse_mode(const std::string& mode) {
    if (mode == "certified") return BuildMode::kCertified;
    if (mode == "empirical") return BuildMode::kEmpirical;
    throw UsageError("--mode must be certified or empirical");
}

ExtendOptions extend_options(const RunConfig& cfg) {
    ExtendOptions opts;
    opts.mode = parse_mode(cfg.mode);
    opts.m_override = cfg.m;
    opts.max_attempts = cfg.max_attempts;
    if (opts.mode == BuildMode::kEmpirical && !opts.m_override) {
        throw UsageError("empirical mode needs --m");
    }
    return opts;
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n == 0) throw UsageError("--n must be at least 1");
    const auto opts = extend_options(cfg);
    Tower t = new_tower(cfg.n, cfg.seed);
    const std::size_t depth = cfg.depth.value_or(0);
    while (t.depth() < depth) t = extend_tower(t, opts);
    save_tower(t, cfg.out);
    out << "built depth " << t.depth() << " tower, top level has "
        << t.level(t.depth()).vertex_count() << " vertices\n";
    return kSuccess;
}

int cmd_extend(const RunConfig& cfg, std::ostream& out) {
    const auto opts = extend_options(cfg);
    Tower t = load_tower(cfg.in, false);
    for (std::size_t i = 0; i < cfg.levels; ++i) t = extend_tower(t, opts);
    save_tower(t, cfg.out);
    out << "extended to depth " << t.depth() << "\n";
    return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const Tower t = load_tower(cfg.in, false);
    const auto report = verify_tower(t);
    if (report.ok) {
        out << "ok: depth " << t.depth() << ", all invariants hold\n";
        return kSuccess;
    }
    out << "FAILED " << report.invariant << " at level " << report.level.value_or(0) << ": "
        << report.detail << "\n";
    return kVerificationFailed;
}

std::vector<ThreadConstraint> parse_type_payload(const Tower& t, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json payload;
    try {
        payload = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedInput(std::string("type payload is not valid JSON: ") + e.what());
    }
    if (!payload.is_object() || !payload.contains("constraints") ||
        !payload["constraints"].is_array()) {
        throw MalformedInput("type payload needs a \"constraints\" array");
    }
    std::vector<ThreadConstraint> out;
    for (const Json& c : payload["constraints"]) {
        if (!c.is_object() || !c.contains("bit")) throw MalformedInput("constraint needs a \"bit\"");
        ThreadConstraint tc;
        const Json& bit = c["bit"];
        if (bit.is_boolean()) {
            tc.bit = bit.get<bool>();
        } else if (bit.is_number_integer() && (bit.get<int>() == 0 || bit.get<int>() == 1)) {
            tc.bit = bit.get<int>() == 1;
        } else {
            throw MalformedInput("constraint bit must be 0 or 1");
        }
        try {
            if (c.contains("entries")) {
                for (const Json& e : c["entries"]) tc.thread.entries.push_back(e.get<Vertex>());
                if (!is_bond_consistent(t, tc.thread)) {
                    throw MalformedInput("constraint entries are not a thread prefix of the tower");
                }
            } else if (c.contains("canonical")) {
                const auto level = c["canonical"].at("level").get<std::size_t>();
                const auto vertex = c["canonical"].at("vertex").get<Vertex>();
                if (level > t.depth() || vertex >= t.level(level).vertex_count()) {
                    throw MalformedInput("canonical constraint names a missing vertex");
                }
                tc.thread = canonical_thread(t, level, vertex, t.depth());
            } else {
                throw MalformedInput("constraint needs \"entries\" or \"canonical\"");
            }
        } catch (const nlohmann::json::exception& e) {
            throw MalformedInput(std::string("constraint: ") + e.what());
        }
        out.push_back(std::move(tc));
    }
    return out;
}

int cmd_realize(const RunConfig& cfg, std::ostream& out) {
    Tower t = load_tower(cfg.in, false);
    const std::size_t depth = cfg.depth.value_or(t.depth());
    while (t.depth() < depth) t = extend_tower(t);
    const auto constraints = parse_type_payload(t, cfg.type_path);
    if (constraints.size() >= t.n()) {
        throw TooManyConstraints("at most " + std::to_string(t.n() - 1) + " constraints allowed");
    }
    RealizerHandle h = realize_type(t, constraints, true);
    out << "separation_level=" << h.separation_level << "\n";
    out << "entries=";
    for (std::size_t d = 0; d < h.prefix.entries.size(); ++d) {
        if (d != 0) out << ',';
        out << h.prefix.entries[d];
    }
    out << "\n";
    if (cfg.check) {
        const auto report = verify_realization(t, h);
        out << "check=" << (report.ok ? "passed" : "failed: " + report.detail) << "\n";
        if (!report.ok) return kVerificationFailed;
    }
    return kSuccess;
}

std::string rate(std::size_t hits, std::size_t trials) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(6)
      << static_cast<double>(hits) / static_cast<double>(trials);
    return s.str();
}

int cmd_stats(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n == 0) throw UsageError("--n must be at least 1");
    const std::size_t k = cfg.k.value_or(cfg.n);
    if (k < cfg.n) throw UsageError("--k must be at least --n");
    if (cfg.trials == 0) throw UsageError("--trials must be at least 1");
    if (cfg.m_from == 0 || cfg.m_to < cfg.m_from) throw UsageError("need 1 <= --m-from <= --m-to");
    auto base = std::make_shared<const FiniteGraph>(FiniteGraph::complete(k));

    out << "m,trials,saturated_rate,joint_rate,bound_a,bound_a_decimal,bound_b,bound_b_decimal,"
           "combined_decimal\n";
    for (std::uint32_t m = cfg.m_from; m <= cfg.m_to; ++m) {
        std::size_t saturated = 0;
        std::size_t joint = 0;
        const std::uint64_t m_seed = derive_seed(cfg.seed, m);
        for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
            const auto sample = sample_product_graph(base, m, derive_seed(m_seed, trial));
            if (!is_n_saturated(*sample.graph, cfg.n).holds) continue;
            ++saturated;
            if (check_condition_b(*sample.graph, *base, m, cfg.n).holds) ++joint;
        }
        const Rational a = failure_bound_a(cfg.n, k, m);
        const Rational b = failure_bound_b(cfg.n, k, m);
        out << m << ',' << cfg.trials << ',' << rate(saturated, cfg.trials) << ','
            << rate(joint, cfg.trials) << ',' << to_fraction_string(a) << ','
            << to_decimal_string(a) << ',' << to_fraction_string(b) << ',' << to_decimal_string(b)
            << ',' << to_decimal_string(a + b) << "\n";
    }
    return kSuccess;
}

int cmd_export(const RunConfig& cfg, std::ostream& out) {
    if (cfg.format != "dot") throw UsageError("only --format dot is supported");
    const Tower t = load_tower(cfg.in, false);
    if (cfg.level > t.depth()) {
        throw UsageError("--level " + std::to_string(cfg.level) + " exceeds tower depth " +
                         std::to_string(t.depth()));
    }
    const std::string text = export_dot(t, cfg.level);
    if (cfg.out.empty()) {
        out << text;
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open " + cfg.out);
        file << text;
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Build, verify and explore towers of n-saturated finite graphs", "satgraph"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "Build a tower of the given depth");
    build->add_option("--n", cfg.n, "Saturation order")->required();
    build->add_option("--depth", cfg.depth, "Number of levels above K_n");
    build->add_option("--seed", cfg.seed, "Base seed");
    build->add_option("--mode", cfg.mode, "certified or empirical");
    build->add_option("--m", cfg.m, "Copy parameter override");
    build->add_option("--max-attempts", cfg.max_attempts, "Rejection sampling budget");
    build->add_option("--out", cfg.out, "Output tower file")->required();

    auto* extend = app.add_subcommand("extend", "Add levels to a stored tower");
    extend->add_option("--in", cfg.in, "Input tower file")->required();
    extend->add_option("--out", cfg.out, "Output tower file")->required();
    extend->add_option("--levels", cfg.levels, "Levels to add");
    extend->add_option("--mode", cfg.mode, "certified or empirical");
    extend->add_option("--m", cfg.m, "Copy parameter override");
    extend->add_option("--max-attempts", cfg.max_attempts, "Rejection sampling budget");

    auto* verify = app.add_subcommand("verify", "Re-check every tower invariant");
    verify->add_option("--in", cfg.in, "Tower file")->required();

    auto* realize = app.add_subcommand("realize", "Realize a type over limit threads");
    realize->add_option("--in", cfg.in, "Tower file")->required();
    realize->add_option("--type", cfg.type_path, "Type payload JSON")->required();
    realize->add_option("--depth", cfg.depth, "Materialization depth");
    realize->add_flag("--check", cfg.check, "Re-verify the realization level by level");

    auto* stats = app.add_subcommand("stats", "Empirical success rates against the bounds");
    stats->add_option("--n", cfg.n, "Saturation order")->required();
    stats->add_option("--k", cfg.k, "Base size (complete base graph), defaults to n");
    stats->add_option("--m-from", cfg.m_from, "First m");
    stats->add_option("--m-to", cfg.m_to, "Last m");
    stats->add_option("--trials", cfg.trials, "Samples per m");
    stats->add_option("--seed", cfg.seed, "Base seed");

    auto* exp = app.add_subcommand("export", "Emit one level as Graphviz text");
    exp->add_option("--in", cfg.in, "Tower file")->required();
    exp->add_option("--level", cfg.level, "Level to export");
    exp->add_option("--format", cfg.format, "Output format (dot)");
    exp->add_option("--out", cfg.out, "Output file (default: standard output)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }
    if (cfg.m_to < cfg.m_from) cfg.m_to = cfg.m_from;

    try {
        if (build->parsed()) return cmd_build(cfg, out);
        if (extend->parsed()) return cmd_extend(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (realize->parsed()) return cmd_realize(cfg, out);
        if (stats->parsed()) return cmd_stats(cfg, out);
        if (exp->parsed()) return cmd_export(cfg, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const MalformedInput& e) {
        err << "malformed input: " << e.what() << "\n";
        return kMalformedInput;
    } catch (const AttemptsExhausted& e) {
        err << "build failed: " << e.what() << "\n";
        return kBuildExhausted;
    } catch (const TooManyConstraints& e) {
        err << "too many constraints: " << e.what() << "\n";
        return kTooManyConstraints;
    } catch (const NotSeparated& e) {
        err << "not separated: " << e.what() << "\n";
        return kNotSeparated;
    } catch (const ContractViolation& e) {
        err << "invalid request: " << e.what() << "\n";
        return kUsageError;
    } catch (const InternalConsistencyError& e) {
        err << "inconsistent tower: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kMalformedInput;
    }
    return kUsageError;
}

}  // namespace satgraph::cli
