#include "binfair/json_io.hpp"

#include <fstream>

namespace binfair {

using nlohmann::json;

namespace {

GoodSet good_set_from_json(const json& j, std::size_t num_goods, const char* what) {
    if (!j.is_array()) throw parse_error(std::string(what) + " must be an array of good indices");
    GoodSet s(num_goods);
    for (const auto& e : j) {
        if (!e.is_number_unsigned())
            throw parse_error(std::string(what) + " entries must be non-negative integers");
        const auto g = e.get<std::uint64_t>();
        if (g >= num_goods)
            throw parse_error(std::string(what) + " index " + std::to_string(g) +
                              " out of range for m = " + std::to_string(num_goods));
        s.set(static_cast<std::size_t>(g));
    }
    return s;
}

json good_set_to_json(const GoodSet& s) {
    json out = json::array();
    s.for_each([&](std::size_t g) { out.push_back(g); });
    return out;
}

template <typename T>
T require_field(const json& j, const char* key) {
    if (!j.contains(key))
        throw parse_error(std::string("missing required field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw parse_error(std::string("field \"") + key + "\" has the wrong type");
    }
}

}  // namespace

json valuation_to_json(const ValuationSpec& spec) {
    json j;
    switch (spec.kind()) {
        case ValuationSpec::Kind::xos_family: {
            j["type"] = "xos_family";
            json sets = json::array();
            for (const auto& f : spec.as_xos_family().sets) sets.push_back(good_set_to_json(f));
            j["sets"] = std::move(sets);
            break;
        }
        case ValuationSpec::Kind::spectrum:
            j["type"] = "spectrum";
            j["delta"] = spec.as_spectrum().delta;
            break;
        case ValuationSpec::Kind::subadditive_pq:
            j["type"] = "subadditive_pq";
            j["p"] = spec.as_subadditive_pq().p;
            j["q"] = spec.as_subadditive_pq().q;
            break;
        case ValuationSpec::Kind::planted_subadditive:
            j["type"] = "planted_subadditive";
            j["p"] = spec.as_planted().p;
            j["q"] = spec.as_planted().q;
            j["t"] = good_set_to_json(spec.as_planted().planted);
            break;
    }
    return j;
}

ValuationSpec valuation_from_json(const json& j, std::size_t num_goods) {
    const auto type = require_field<std::string>(j, "type");
    try {
        if (type == "xos_family") {
            if (!j.contains("sets") || !j.at("sets").is_array())
                throw parse_error("xos_family needs a \"sets\" array");
            std::vector<GoodSet> sets;
            for (const auto& e : j.at("sets"))
                sets.push_back(good_set_from_json(e, num_goods, "xos_family set"));
            return ValuationSpec::xos_family(num_goods, std::move(sets));
        }
        if (type == "spectrum")
            return ValuationSpec::spectrum(num_goods, require_field<std::size_t>(j, "delta"));
        if (type == "subadditive_pq")
            return ValuationSpec::subadditive_pq(num_goods, require_field<long long>(j, "p"),
                                                 require_field<long long>(j, "q"));
        if (type == "planted_subadditive")
            return ValuationSpec::planted_subadditive(
                num_goods, require_field<long long>(j, "p"), require_field<long long>(j, "q"),
                good_set_from_json(j.at("t"), num_goods, "planted set"));
    } catch (const validation_error& e) {
        throw parse_error(e.what());
    }
    throw parse_error("unknown valuation type \"" + type + "\"");
}

json instance_to_json(const Instance& inst) {
    json vals = json::array();
    for (const auto& v : inst.valuations()) vals.push_back(valuation_to_json(v));
    return json{{"n", inst.num_agents()}, {"m", inst.num_goods()}, {"valuations", vals}};
}

Instance instance_from_json(const json& j) {
    const auto n = require_field<std::size_t>(j, "n");
    const auto m = require_field<std::size_t>(j, "m");
    if (!j.contains("valuations") || !j.at("valuations").is_array())
        throw parse_error("instance needs a \"valuations\" array");
    std::vector<ValuationSpec> vals;
    for (const auto& e : j.at("valuations")) vals.push_back(valuation_from_json(e, m));
    try {
        return Instance(n, m, std::move(vals));
    } catch (const validation_error& e) {
        throw parse_error(e.what());
    }
}

json allocation_to_json(const Allocation& alloc) {
    json bundles = json::array();
    for (const auto& b : alloc.bundles()) bundles.push_back(good_set_to_json(b));
    return json{{"bundles", bundles}, {"unassigned_policy", "max_bundle"}};
}

Allocation allocation_from_json(const json& j, std::size_t num_agents, std::size_t num_goods) {
    if (!j.contains("bundles") || !j.at("bundles").is_array())
        throw parse_error("allocation needs a \"bundles\" array");
    const auto& arr = j.at("bundles");
    if (arr.size() != num_agents)
        throw validation_error("allocation has " + std::to_string(arr.size()) +
                               " bundles for " + std::to_string(num_agents) + " agents");
    std::vector<GoodSet> bundles;
    bundles.reserve(arr.size());
    for (const auto& e : arr) {
        try {
            bundles.push_back(good_set_from_json(e, num_goods, "bundle"));
        } catch (const parse_error& e2) {
            // Out-of-range goods make the allocation invalid, not malformed.
            throw validation_error(e2.what());
        }
    }
    return Allocation(std::move(bundles));
}

json graph_to_json(const CubicGraph& graph) {
    json edges = json::array();
    for (auto [u, v] : graph.edges) edges.push_back(json::array({u, v}));
    return json{{"vertices", graph.vertices}, {"edges", edges}};
}

CubicGraph graph_from_json(const json& j) {
    const auto vertices = require_field<std::size_t>(j, "vertices");
    if (!j.contains("edges") || !j.at("edges").is_array())
        throw parse_error("graph needs an \"edges\" array");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw parse_error("graph edges must be [u, v] pairs");
        edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    }
    return CubicGraph(vertices, std::move(edges));
}

json trace_to_json(const SolveTrace& trace) {
    json iterations = json::array();
    for (const auto& it : trace.iterations) {
        iterations.push_back(json{{"agent", it.agent},
                                  {"old_size", it.old_size},
                                  {"new_size", it.new_size},
                                  {"nsw_before", it.nsw_before},
                                  {"nsw_after", it.nsw_after},
                                  {"sizes_after", it.sizes_after}});
    }
    return json{{"initial_matching", trace.initial_bundles},
                {"iterations", iterations},
                {"total_value_queries", trace.total_value_queries}};
}

SolveTrace trace_from_json(const json& j) {
    SolveTrace trace;
    trace.initial_bundles =
        require_field<std::vector<std::vector<std::size_t>>>(j, "initial_matching");
    trace.total_value_queries = require_field<std::uint64_t>(j, "total_value_queries");
    if (!j.contains("iterations") || !j.at("iterations").is_array())
        throw parse_error("trace needs an \"iterations\" array");
    for (const auto& e : j.at("iterations")) {
        IterationRecord rec;
        rec.agent = require_field<std::size_t>(e, "agent");
        rec.old_size = require_field<long long>(e, "old_size");
        rec.new_size = require_field<long long>(e, "new_size");
        rec.nsw_before = require_field<double>(e, "nsw_before");
        rec.nsw_after = require_field<double>(e, "nsw_after");
        rec.sizes_after = require_field<std::vector<long long>>(e, "sizes_after");
        trace.iterations.push_back(std::move(rec));
    }
    return trace;
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_json_text(text);
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw error("cannot write file: " + path);
    out << dump_json(j);
}

std::string dump_json(const json& j) {
    return j.dump(2) + "\n";
}

}  // namespace binfair
