#include <lda/error.hpp>
#include <lda/io.hpp>

#include <json.hpp>

#include <map>
#include <sstream>

namespace lda {

using nlohmann::json;

namespace
{
    auto parse(const std::string & text) -> json
    {
        try {
            return json::parse(text);
        } catch (const json::parse_error & e) {
            throw Error(ErrorKind::parse, e.what());
        }
    }

    auto dump(const json & j) -> std::string { return j.dump() + "\n"; }

    template <typename T>
    auto get_as(const json & j, const char * what) -> T
    {
        try {
            return j.get<T>();
        } catch (const json::exception &) {
            throw Error(ErrorKind::parse, std::string("malformed ") + what);
        }
    }

    auto graph_json(const Graph & g) -> json
    {
        json edges = json::array();
        for (auto [u, v] : g.edges())
            edges.push_back({u, v});
        return {{"n", g.order()}, {"edges", edges}};
    }

    auto report_json(const VerificationReport & r) -> json
    {
        json violations = json::array();
        for (auto [u, v] : r.violations)
            violations.push_back({u, v});
        json classes = json::array();
        for (const auto & [w, vs] : r.weight_classes)
            classes.push_back({{"weight", w}, {"vertices", vs}});
        return {{"is_lda", r.is_lda},
                {"color_count", r.color_count},
                {"weights", r.weights},
                {"violations", violations},
                {"weight_classes", classes}};
    }

    auto int_list(const json & doc, const char * key) -> std::optional<std::vector<int>>
    {
        if (! doc.is_object() || ! doc.contains(key))
            return std::nullopt;
        return get_as<std::vector<int>>(doc.at(key), key);
    }
}

auto graph_to_json(const Graph & g) -> std::string { return dump(graph_json(g)); }

auto graph_from_json(const std::string & text) -> Graph
{
    auto doc = parse(text);
    if (doc.is_object() && doc.contains("graph"))
        doc = doc.at("graph");
    if (! doc.is_object() || ! doc.contains("n") || ! doc.contains("edges"))
        throw Error(ErrorKind::parse, "graph document needs \"n\" and \"edges\"");
    auto n = get_as<int>(doc.at("n"), "n");
    auto pairs = get_as<std::vector<std::vector<int>>>(doc.at("edges"), "edges");
    std::vector<Edge> edges;
    for (const auto & p : pairs) {
        if (p.size() != 2)
            throw Error(ErrorKind::parse, "each edge must have two endpoints");
        edges.push_back({p[0], p[1]});
    }
    return Graph(n, std::move(edges));
}

auto labeling_to_json(const Labeling & f) -> std::string { return dump({{"labels", f}}); }

auto find_labeling(const std::string & text) -> std::optional<Labeling> { return int_list(parse(text), "labels"); }

auto labeling_from_json(const std::string & text) -> Labeling
{
    auto f = find_labeling(text);
    if (! f)
        throw Error(ErrorKind::parse, "document has no \"labels\"");
    return *f;
}

auto signs_to_json(const SignColoring & sigma) -> std::string { return dump({{"signs", sigma}}); }

auto find_signs(const std::string & text) -> std::optional<SignColoring> { return int_list(parse(text), "signs"); }

auto signs_from_json(const std::string & text) -> SignColoring
{
    auto s = find_signs(text);
    if (! s)
        throw Error(ErrorKind::parse, "document has no \"signs\"");
    return *s;
}

auto report_to_json(const VerificationReport & report) -> std::string { return dump(report_json(report)); }

auto census_to_json(const Graph & g, const SignColoring & sigma) -> std::string
{
    auto c = census(g, sigma);
    return dump({{"signs", sigma},
                 {"balanced", verify_nbc(g, sigma)},
                 {"census", {{"rr", c.rr}, {"bb", c.bb}, {"rb", c.rb}, {"r", c.r}, {"b", c.b}}}});
}

auto solve_result_to_json(const Graph & g, const SolveResult & result) -> std::string
{
    json j;
    j["graph"] = graph_json(g);
    j["chi_ld"] = result.exhausted ? json(result.lower) : json(nullptr);
    j["lower"] = result.lower;
    j["upper"] = result.upper ? json(*result.upper) : json(nullptr);
    j["exhausted"] = result.exhausted;
    j["nodes_explored"] = result.nodes_explored;
    if (result.witness)
        j["labels"] = *result.witness;
    return dump(j);
}

auto construction_to_json(const ConstructionResult & result) -> std::string
{
    json j{{"graph", graph_json(result.graph)},
           {"labels", result.labeling},
           {"report", report_json(result.report)},
           {"claimed_bound", result.claimed_bound}};
    if (result.lower_bound)
        j["lower_bound"] = *result.lower_bound;
    return dump(j);
}

auto error_to_json(const std::string & kind, const std::string & message) -> std::string
{
    return dump({{"error", kind}, {"message", message}});
}

auto to_dot(const Graph & g, const std::optional<Labeling> & f) -> std::string
{
    static constexpr const char * palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33",
                                               "#a65628", "#f781bf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb"};
    std::ostringstream out;
    out << "graph G {\n";
    if (f) {
        auto report = verify_lda(g, *f);
        std::map<Weight, int> class_of;
        for (const auto & [w, vs] : report.weight_classes)
            class_of.emplace(w, static_cast<int>(class_of.size()));
        out << "  node [style=filled];\n";
        for (int v = 0; v < g.order(); ++v) {
            auto w = report.weights[v];
            auto c = class_of[w];
            out << "  " << v << " [label=\"" << v << "\\nf=" << (*f)[v] << " w=" << w << "\", fillcolor=\""
                << palette[c % std::size(palette)] << "\"];\n";
        }
    } else {
        for (int v = 0; v < g.order(); ++v)
            out << "  " << v << ";\n";
    }
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace lda
