#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "binfair/audit.hpp"
#include "binfair/generators.hpp"
#include "binfair/json_io.hpp"
#include "binfair/nsw_alg.hpp"
#include "binfair/oracles.hpp"
#include "binfair/welfare.hpp"

namespace {

using namespace binfair;
using nlohmann::json;

// Exit codes are a stable contract:
//   0 ok, 1 parse/usage error, 2 optimal Nash welfare is zero,
//   3 valuation class unsupported, 4 invalid allocation, 5 budget exceeded.
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitZeroNsw = 2;
constexpr int kExitClass = 3;
constexpr int kExitInvalidAllocation = 4;
constexpr int kExitBudget = 5;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("BINFAIR_ORACLE_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw parse_error("BINFAIR_ORACLE_BUDGET is not a number");
        }
    }
    return kDefaultOracleBudget;
}

void emit(const json& payload, const std::string& out_path) {
    if (out_path.empty())
        std::cout << dump_json(payload);
    else
        write_json_file(out_path, payload);
}

Ratio parse_ratio(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Ratio{std::stoll(text), 1};
        return Ratio{std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
    } catch (const std::exception&) {
        throw parse_error("cannot parse ratio \"" + text + "\"; expected N or N/D");
    }
}

json solve_payload(const Instance& inst, const SolveResult& result) {
    const ValueProfile profile = value_profile(inst, result.allocation);
    long long sw = 0;
    for (long long v : profile) sw += v;
    json bundles = json::array();
    for (const auto& b : result.allocation.bundles()) bundles.push_back(b.to_indices());
    return json{{"status", result.status == SolveStatus::solved ? "solved" : "zero_nsw"},
                {"bundles", bundles},
                {"unassigned", result.allocation.unassigned().to_indices()},
                {"profile", profile},
                {"nsw", nash_welfare_of_profile(profile)},
                {"sw", sw},
                {"query_count", result.trace.total_value_queries},
                {"unassigned_policy", "max_bundle"}};
}

int cmd_solve(const std::string& instance_path, const std::string& out_path,
              const std::string& trace_path, bool pad_dummies) {
    Instance inst = instance_from_json(read_json_file(instance_path));
    SolveResult result = solve(inst);
    std::optional<std::size_t> padded_goods;
    if (result.status == SolveStatus::zero_nsw && pad_dummies) {
        Instance padded = pad_with_dummies(inst);
        padded_goods = padded.num_goods() - inst.num_goods();
        result = solve(padded);
        json payload = solve_payload(padded, result);
        payload["padded_goods"] = *padded_goods;
        emit(payload, out_path);
    } else {
        emit(solve_payload(inst, result), out_path);
    }
    if (!trace_path.empty()) write_json_file(trace_path, trace_to_json(result.trace));
    return result.status == SolveStatus::solved ? kExitOk : kExitZeroNsw;
}

int cmd_verify(const std::string& instance_path, const std::string& allocation_path,
               const std::string& trace_path, std::uint64_t budget, const std::string& out_path) {
    Instance inst = instance_from_json(read_json_file(instance_path));
    Allocation alloc = allocation_from_json(read_json_file(allocation_path), inst.num_agents(),
                                            inst.num_goods());
    std::optional<SolveTrace> trace;
    if (!trace_path.empty()) trace = trace_from_json(read_json_file(trace_path));
    AuditReport report = audit(inst, alloc, trace, budget);
    emit(audit_report_to_json(report), out_path);
    return report.all_ok() ? kExitOk : 6;
}

void write_instance_files(const std::filesystem::path& dir, const Instance& inst) {
    write_json_file((dir / "instance.json").string(), instance_to_json(inst));
    std::cout << (dir / "instance.json").string() << "\n";
}

int cmd_generate_apx(const std::filesystem::path& dir, const std::string& graph_name,
                     std::size_t tau) {
    CubicGraph graph = graph_name == "petersen" ? petersen()
                       : graph_name == "k4"     ? k4()
                                                : graph_from_json(read_json_file(graph_name));
    Instance inst = gen_apx_reduction(graph, tau);
    write_instance_files(dir, inst);
    if (auto witness = apx_witness_allocation(graph, tau)) {
        const auto path = dir / "allocation_witness.json";
        write_json_file(path.string(), allocation_to_json(*witness));
        std::cout << path.string() << "\n";
    }
    return kExitOk;
}

int cmd_generate_envy_gap(const std::filesystem::path& dir, std::size_t k) {
    EnvyGapFamily fam = gen_envy_gap(k);
    write_instance_files(dir, fam.instance);
    for (auto [name, alloc] : {std::pair<const char*, const Allocation*>{
                                   "allocation_envy_free.json", &fam.envy_free},
                               {"allocation_high_nsw.json", &fam.high_nsw}}) {
        const auto path = dir / name;
        write_json_file(path.string(), allocation_to_json(*alloc));
        std::cout << path.string() << "\n";
    }
    return kExitOk;
}

int cmd_generate_lower_bound(const std::filesystem::path& dir, std::size_t n, long long p,
                             long long q, std::uint64_t seed, std::uint64_t probe_queries) {
    LowerBoundPair pair = gen_lower_bound_pair(n, p, q, seed);
    write_json_file((dir / "instance_identical.json").string(),
                    instance_to_json(pair.identical));
    std::cout << (dir / "instance_identical.json").string() << "\n";
    write_json_file((dir / "instance_planted.json").string(), instance_to_json(pair.planted));
    std::cout << (dir / "instance_planted.json").string() << "\n";
    write_json_file((dir / "allocation_blocks.json").string(),
                    allocation_to_json(Allocation{std::vector<GoodSet>(pair.blocks)}));
    std::cout << (dir / "allocation_blocks.json").string() << "\n";
    if (probe_queries > 0) {
        ProbeReport report = distinguish_probe(n, p, q, seed, probe_queries);
        auto band = [](const ProbeBand& b) {
            return json{{"queries", b.queries},
                        {"mismatches", b.mismatches},
                        {"fraction", b.fraction()}};
        };
        write_json_file((dir / "probe_report.json").string(),
                        json{{"small", band(report.small)},
                             {"middle", band(report.middle)},
                             {"large", band(report.large)}});
        std::cout << (dir / "probe_report.json").string() << "\n";
    }
    return kExitOk;
}

int cmd_oracle(const std::string& instance_path, const std::string& objective,
               std::size_t agent, std::size_t parts, const std::vector<std::size_t>& goods,
               const std::string& allocation_path, const std::string& alpha_text,
               std::uint64_t budget, const std::string& out_path) {
    Instance inst = instance_from_json(read_json_file(instance_path));
    json payload{{"objective", objective}};

    if (objective == "nsw" || objective == "sw") {
        OptResult opt = objective == "nsw" ? brute_force_nsw_opt(inst, budget)
                                           : brute_force_sw_opt(inst, budget);
        json bundles = json::array();
        for (const auto& b : opt.allocation.bundles()) bundles.push_back(b.to_indices());
        payload["bundles"] = bundles;
        payload["profile"] = opt.profile;
        payload["nsw"] = opt.nash_welfare;
        payload["sw"] = opt.social_welfare;
    } else if (objective == "mms") {
        GoodSet pool = goods.empty() ? GoodSet::full(inst.num_goods())
                                     : GoodSet::from_indices(inst.num_goods(), goods);
        payload["agent"] = agent;
        payload["parts"] = parts;
        payload["value"] = maximin_share(inst, MaximinQuery{agent, parts, pool}, budget);
    } else if (objective == "gmms") {
        if (allocation_path.empty())
            throw parse_error("the gmms objective needs --allocation");
        Allocation alloc = allocation_from_json(read_json_file(allocation_path),
                                                inst.num_agents(), inst.num_goods());
        json thresholds = json::array();
        for (std::size_t i = 0; i < inst.num_agents(); ++i)
            thresholds.push_back(gmms_threshold(inst, alloc, i, budget));
        payload["thresholds"] = thresholds;
        if (!alpha_text.empty()) {
            Ratio alpha = parse_ratio(alpha_text);
            payload["alpha"] = alpha_text;
            payload["alpha_ok"] = is_alpha_gmms(inst, alloc, alpha, budget);
        }
    } else {
        throw parse_error("unknown objective \"" + objective + "\"");
    }
    emit(payload, out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solver and audit toolkit for fair division with binary-marginal valuations"};
    app.require_subcommand(1);

    std::string instance_path, allocation_path, trace_path, out_path;
    std::string out_dir = ".";
    bool pad_dummies = false;
    std::uint64_t budget = 0;
    bool budget_given = false;

    auto* solve_cmd = app.add_subcommand("solve", "allocate goods under binary XOS valuations");
    solve_cmd->add_option("instance", instance_path, "instance JSON file")->required();
    solve_cmd->add_option("-o,--out", out_path, "output file (default: stdout)");
    solve_cmd->add_option("--trace", trace_path, "also write the per-iteration trace");
    solve_cmd->add_flag("--pad-dummies", pad_dummies,
                        "on zero Nash welfare, add dummy goods and solve the padded instance");

    auto* verify_cmd = app.add_subcommand("verify", "audit an allocation against an instance");
    verify_cmd->add_option("instance", instance_path, "instance JSON file")->required();
    verify_cmd->add_option("allocation", allocation_path, "allocation JSON file")->required();
    verify_cmd->add_option("--trace", trace_path, "solve trace to replay");
    verify_cmd->add_option("--oracle-budget", budget, "enumeration budget (0 = local checks only)")
        ->each([&](const std::string&) { budget_given = true; });
    verify_cmd->add_option("-o,--out", out_path, "output file (default: stdout)");

    auto* generate_cmd = app.add_subcommand("generate", "construct benchmark instances");
    std::string family, graph_name = "petersen";
    std::size_t k = 1, n = 2, m = 4, family_size = 2, max_set_size = 2, tau = 1, delta = 1;
    long long p = 1, q = 2;
    std::uint64_t seed = 0, probe_queries = 0;
    generate_cmd->add_option("family", family, "apx | envy_gap | lower_bound | random | spectrum")
        ->required();
    generate_cmd->add_option("--out-dir", out_dir, "directory for the generated files");
    generate_cmd->add_option("--graph", graph_name, "petersen, k4, or a graph JSON file");
    generate_cmd->add_option("--tau", tau, "number of agents in the reduction");
    generate_cmd->add_option("--k", k, "envy-gap size parameter");
    generate_cmd->add_option("--n", n, "number of agents");
    generate_cmd->add_option("--m", m, "number of goods");
    generate_cmd->add_option("--p", p, "piecewise valuation parameter p");
    generate_cmd->add_option("--q", q, "piecewise valuation parameter q");
    generate_cmd->add_option("--family-size", family_size, "sets per agent family");
    generate_cmd->add_option("--max-set-size", max_set_size, "largest member set");
    generate_cmd->add_option("--delta", delta, "window width parameter");
    generate_cmd->add_option("--seed", seed, "deterministic seed");
    generate_cmd->add_option("--probe", probe_queries,
                             "also write a mismatch probe report over this many queries");

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive ground-truth computations");
    std::string objective, alpha_text;
    std::size_t agent = 0, parts = 1;
    std::vector<std::size_t> goods;
    oracle_cmd->add_option("instance", instance_path, "instance JSON file")->required();
    oracle_cmd->add_option("--objective", objective, "nsw | sw | mms | gmms")->required();
    oracle_cmd->add_option("--agent", agent, "agent index for mms");
    oracle_cmd->add_option("--parts", parts, "partition size for mms");
    oracle_cmd->add_option("--goods", goods, "good subset for mms (default: all)");
    oracle_cmd->add_option("--allocation", allocation_path, "allocation file for gmms");
    oracle_cmd->add_option("--alpha", alpha_text, "fairness factor N/D to certify for gmms");
    oracle_cmd->add_option("--budget", budget, "enumeration budget")
        ->each([&](const std::string&) { budget_given = true; });
    oracle_cmd->add_option("-o,--out", out_path, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!budget_given) budget = default_budget();
        if (solve_cmd->parsed())
            return cmd_solve(instance_path, out_path, trace_path, pad_dummies);
        if (verify_cmd->parsed())
            return cmd_verify(instance_path, allocation_path, trace_path, budget, out_path);
        if (generate_cmd->parsed()) {
            std::filesystem::path dir(out_dir);
            std::filesystem::create_directories(dir);
            if (family == "apx") return cmd_generate_apx(dir, graph_name, tau);
            if (family == "envy_gap") return cmd_generate_envy_gap(dir, k);
            if (family == "lower_bound")
                return cmd_generate_lower_bound(dir, n, p, q, seed, probe_queries);
            if (family == "random") {
                write_instance_files(dir, gen_random_xos(n, m, family_size, max_set_size, seed));
                return kExitOk;
            }
            if (family == "spectrum") {
                write_instance_files(dir, gen_spectrum_instance(n, m, delta));
                return kExitOk;
            }
            throw parse_error("unknown family \"" + family + "\"");
        }
        if (oracle_cmd->parsed())
            return cmd_oracle(instance_path, objective, agent, parts, goods, allocation_path,
                              alpha_text, budget, out_path);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const class_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitClass;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidAllocation;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
