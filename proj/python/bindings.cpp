#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "binfair/audit.hpp"
#include "binfair/generators.hpp"
#include "binfair/json_io.hpp"
#include "binfair/nsw_alg.hpp"
#include "binfair/oracles.hpp"
#include "binfair/welfare.hpp"

namespace py = pybind11;
using namespace binfair;

namespace {

// Python callers pass good sets as index lists; universes stay internal.
GoodSet to_set(std::size_t num_goods, const std::vector<std::size_t>& goods) {
    return GoodSet::from_indices(num_goods, goods);
}

std::vector<std::vector<std::size_t>> to_lists(const Allocation& alloc) {
    std::vector<std::vector<std::size_t>> out;
    out.reserve(alloc.num_agents());
    for (const auto& b : alloc.bundles()) out.push_back(b.to_indices());
    return out;
}

Allocation to_allocation(std::size_t num_goods,
                         const std::vector<std::vector<std::size_t>>& bundles) {
    std::vector<GoodSet> sets;
    sets.reserve(bundles.size());
    for (const auto& b : bundles) sets.push_back(GoodSet::from_indices(num_goods, b));
    return Allocation(std::move(sets));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "fair division of indivisible goods under binary-marginal valuations";

    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<class_error>(m, "ClassError", PyExc_TypeError);
    py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

    py::class_<Instance>(m, "Instance")
        .def_static(
            "from_json",
            [](const std::string& text) { return instance_from_json(parse_json_text(text)); },
            py::arg("text"))
        .def("to_json", [](const Instance& inst) { return dump_json(instance_to_json(inst)); })
        .def_property_readonly("num_agents", &Instance::num_agents)
        .def_property_readonly("num_goods", &Instance::num_goods)
        .def(
            "value",
            [](const Instance& inst, std::size_t agent, const std::vector<std::size_t>& goods) {
                return inst.valuation(agent).value(to_set(inst.num_goods(), goods));
            },
            py::arg("agent"), py::arg("goods"), "value of a good subset for one agent")
        .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; });

    m.def(
        "solve",
        [](const Instance& inst) {
            SolveResult result = solve(inst);
            py::dict trace;
            py::list iterations;
            for (const auto& it : result.trace.iterations) {
                py::dict rec;
                rec["agent"] = it.agent;
                rec["old_size"] = it.old_size;
                rec["new_size"] = it.new_size;
                rec["nsw_before"] = it.nsw_before;
                rec["nsw_after"] = it.nsw_after;
                rec["sizes_after"] = it.sizes_after;
                iterations.append(rec);
            }
            trace["initial_matching"] = result.trace.initial_bundles;
            trace["iterations"] = iterations;
            trace["total_value_queries"] = result.trace.total_value_queries;

            py::dict out;
            out["status"] = result.status == SolveStatus::solved ? "solved" : "zero_nsw";
            out["bundles"] = to_lists(result.allocation);
            out["completed_bundles"] = to_lists(result.completed_allocation);
            out["unassigned"] = result.allocation.unassigned().to_indices();
            out["profile"] = value_profile(inst, result.allocation);
            out["nsw"] = nash_welfare(inst, result.allocation);
            out["sw"] = social_welfare(inst, result.allocation);
            out["trace"] = trace;
            return out;
        },
        py::arg("instance"), "run the envy-bounded doubling solver");

    m.def(
        "nash_welfare",
        [](const Instance& inst, const std::vector<std::vector<std::size_t>>& bundles) {
            return nash_welfare(inst, to_allocation(inst.num_goods(), bundles));
        },
        py::arg("instance"), py::arg("bundles"));
    m.def(
        "social_welfare",
        [](const Instance& inst, const std::vector<std::vector<std::size_t>>& bundles) {
            return social_welfare(inst, to_allocation(inst.num_goods(), bundles));
        },
        py::arg("instance"), py::arg("bundles"));
    m.def(
        "is_envy_free",
        [](const Instance& inst, const std::vector<std::vector<std::size_t>>& bundles) {
            return is_envy_free(inst, to_allocation(inst.num_goods(), bundles));
        },
        py::arg("instance"), py::arg("bundles"));
    m.def(
        "is_non_wasteful",
        [](const Instance& inst, const std::vector<std::vector<std::size_t>>& bundles) {
            return is_non_wasteful(inst, to_allocation(inst.num_goods(), bundles));
        },
        py::arg("instance"), py::arg("bundles"));

    m.def(
        "brute_force_nsw_opt",
        [](const Instance& inst, std::uint64_t budget) {
            OptResult opt = brute_force_nsw_opt(inst, budget);
            return py::make_tuple(to_lists(opt.allocation), opt.nash_welfare, opt.profile);
        },
        py::arg("instance"), py::arg("budget") = kDefaultOracleBudget);
    m.def(
        "brute_force_sw_opt",
        [](const Instance& inst, std::uint64_t budget) {
            OptResult opt = brute_force_sw_opt(inst, budget);
            return py::make_tuple(to_lists(opt.allocation), opt.social_welfare, opt.profile);
        },
        py::arg("instance"), py::arg("budget") = kDefaultOracleBudget);
    m.def(
        "maximin_share",
        [](const Instance& inst, std::size_t agent, std::size_t parts,
           const std::vector<std::size_t>& goods, std::uint64_t budget) {
            GoodSet pool = goods.empty() ? GoodSet::full(inst.num_goods())
                                         : to_set(inst.num_goods(), goods);
            return maximin_share(inst, MaximinQuery{agent, parts, pool}, budget);
        },
        py::arg("instance"), py::arg("agent"), py::arg("parts"),
        py::arg("goods") = std::vector<std::size_t>{}, py::arg("budget") = kDefaultOracleBudget);
    m.def(
        "gmms_threshold",
        [](const Instance& inst, const std::vector<std::vector<std::size_t>>& bundles,
           std::size_t agent, std::uint64_t budget) {
            return gmms_threshold(inst, to_allocation(inst.num_goods(), bundles), agent, budget);
        },
        py::arg("instance"), py::arg("bundles"), py::arg("agent"),
        py::arg("budget") = kDefaultOracleBudget);
    m.def(
        "is_alpha_gmms",
        [](const Instance& inst, const std::vector<std::vector<std::size_t>>& bundles,
           long long alpha_num, long long alpha_den, std::uint64_t budget) {
            return is_alpha_gmms(inst, to_allocation(inst.num_goods(), bundles),
                                 Ratio{alpha_num, alpha_den}, budget);
        },
        py::arg("instance"), py::arg("bundles"), py::arg("alpha_num"), py::arg("alpha_den"),
        py::arg("budget") = kDefaultOracleBudget);

    m.def("gen_random_xos", &gen_random_xos, py::arg("n"), py::arg("m"), py::arg("family_size"),
          py::arg("max_set_size"), py::arg("seed"));
    m.def("gen_spectrum_instance", &gen_spectrum_instance, py::arg("n"), py::arg("m"),
          py::arg("delta"));
    m.def(
        "gen_envy_gap",
        [](std::size_t k) {
            EnvyGapFamily fam = gen_envy_gap(k);
            return py::make_tuple(fam.instance, to_lists(fam.envy_free), to_lists(fam.high_nsw));
        },
        py::arg("k"));
    m.def(
        "gen_apx_reduction",
        [](const std::string& graph_name, std::size_t tau) {
            CubicGraph graph = graph_name == "petersen" ? petersen() : k4();
            Instance inst = gen_apx_reduction(graph, tau);
            auto witness = apx_witness_allocation(graph, tau);
            return py::make_tuple(inst, witness ? py::cast(to_lists(*witness))
                                                : py::object(py::none()));
        },
        py::arg("graph"), py::arg("tau"), "graph is \"petersen\" or \"k4\"");
    m.def(
        "gen_lower_bound_pair",
        [](std::size_t n, long long p, long long q, std::uint64_t seed) {
            LowerBoundPair pair = gen_lower_bound_pair(n, p, q, seed);
            std::vector<std::vector<std::size_t>> blocks;
            for (const auto& t : pair.blocks) blocks.push_back(t.to_indices());
            return py::make_tuple(pair.identical, pair.planted, blocks);
        },
        py::arg("n"), py::arg("p"), py::arg("q"), py::arg("seed"));
    m.def(
        "distinguish_probe",
        [](std::size_t n, long long p, long long q, std::uint64_t seed,
           std::uint64_t num_queries) {
            ProbeReport report = distinguish_probe(n, p, q, seed, num_queries);
            auto band = [](const ProbeBand& b) {
                py::dict d;
                d["queries"] = b.queries;
                d["mismatches"] = b.mismatches;
                d["fraction"] = b.fraction();
                return d;
            };
            py::dict out;
            out["small"] = band(report.small);
            out["middle"] = band(report.middle);
            out["large"] = band(report.large);
            return out;
        },
        py::arg("n"), py::arg("p"), py::arg("q"), py::arg("seed"), py::arg("num_queries"));

    m.def(
        "audit",
        [](const Instance& inst, const std::vector<std::vector<std::size_t>>& bundles,
           std::uint64_t budget) {
            AuditReport report = audit(inst, to_allocation(inst.num_goods(), bundles),
                                       std::nullopt, budget);
            py::dict out;
            out["termination_ok"] = report.termination_ok;
            out["non_wasteful_ok"] = report.non_wasteful_ok;
            out["nsw"] = report.nsw;
            out["sw"] = report.sw;
            out["all_ok"] = report.all_ok();
            if (report.nsw_opt) out["nsw_opt"] = *report.nsw_opt;
            if (report.sw_opt) out["sw_opt"] = *report.sw_opt;
            if (report.nsw_ratio) out["nsw_ratio"] = *report.nsw_ratio;
            if (report.sw_ratio) out["sw_ratio"] = *report.sw_ratio;
            if (report.gmms_alpha_ok) out["gmms_alpha_ok"] = *report.gmms_alpha_ok;
            if (report.lemma_counting_ok) out["lemma_counting_ok"] = *report.lemma_counting_ok;
            return out;
        },
        py::arg("instance"), py::arg("bundles"), py::arg("budget") = kDefaultOracleBudget);
}
