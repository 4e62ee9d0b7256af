#include "epgdom/error.hpp"
#include "epgdom/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace epgdom {

namespace
{
    auto all_elements(std::size_t n) -> std::vector<Element>
    {
        std::vector<Element> v(n);
        std::iota(v.begin(), v.end(), Element{0});
        return v;
    }

    auto build_full(const FiniteGroup & group) -> Graph
    {
        Graph g(all_elements(group.order()));
        for (const auto & c : maximal_cyclic_subgroups(group)) {
            VertexSet members(group.order());
            for (auto e : c.elements)
                members.set(e);
            g.add_clique(members);
        }
        return g;
    }

    auto dominating_in_full(const Graph & full) -> VertexSet
    {
        VertexSet dom(full.size());
        for (std::size_t v = 0; v < full.size(); ++v)
            if (full.degree(v) + 1 == full.size())
                dom.set(v);
        return dom;
    }
}

auto build_epg(const FiniteGroup & group, EpgMode mode) -> EpGraph
{
    auto full = build_full(group);
    const auto & source = group.provenance().label;
    if (mode == EpgMode::Full)
        return EpGraph(mode, source, group.order(), std::move(full), {});

    VertexSet drop(group.order());
    if (mode == EpgMode::Star)
        drop.set(group.identity());
    else
        drop = dominating_in_full(full);

    std::vector<Element> removed;
    drop.for_each([&](std::size_t v) { removed.push_back(full.label(v)); });
    auto keep = VertexSet::full(group.order()) - drop;
    return EpGraph(mode, source, group.order(), full.induced(keep), std::move(removed));
}

auto build_power_graph(const FiniteGroup & group) -> Graph
{
    Graph g(all_elements(group.order()));
    for (Element v = 0; v < group.order(); ++v)
        for (auto u : cyclic_subgroup(group, v).elements)
            g.add_edge(u, v);
    return g;
}

auto graph_dominating_vertices(const EpGraph & graph) -> VertexSet
{
    if (graph.mode() != EpgMode::Full)
        throw Error(ErrorCode::ModeError, std::string("dominating vertices need the full graph, got mode ") +
                                              to_string(graph.mode()));
    return dominating_in_full(graph.graph());
}

auto costanzo_dominating_vertices(const FiniteGroup & group, const NilpotentProfile & profile)
    -> std::vector<Element>
{
    std::vector<char> central(group.order(), 0);
    for (auto z : center(group))
        central[z] = 1;

    std::vector<Element> dom;
    for (Element g = 0; g < group.order(); ++g) {
        bool dominating = true;
        for (auto [p, e] : factorize(group.element_order(g))) {
            auto factor = std::find_if(profile.factors.begin(), profile.factors.end(),
                                       [p = p](const SylowFactor & f) { return f.prime == p; });
            if (factor == profile.factors.end() || factor->classification == SylowClass::Neither) {
                dominating = false;
                break;
            }
            auto gp = p_part(group, g, p);
            if (! central[gp] || ! std::binary_search(factor->elements.begin(), factor->elements.end(), gp)) {
                dominating = false;
                break;
            }
        }
        if (dominating)
            dom.push_back(g);
    }
    return dom;
}

auto costanzo_dominating_vertices(const FiniteGroup & group) -> std::vector<Element>
{
    return costanzo_dominating_vertices(group, nilpotent_profile(group));
}

auto corollary_dom_prediction(const NilpotentProfile & profile, const FiniteGroup & group) -> DomPrediction
{
    std::set<Element> cyclic_part{group.identity()};
    bool has_cyclic = false;
    for (const auto & f : profile.factors) {
        if (f.classification != SylowClass::Cyclic)
            continue;
        has_cyclic = true;
        std::set<Element> next;
        for (auto s : cyclic_part)
            for (auto c : f.elements)
                next.insert(group.mul(s, c));
        cyclic_part = std::move(next);
    }

    std::vector<Element> quaternion_part{group.identity()};
    if (auto q = profile.quaternion()) {
        for (auto g : q->elements)
            if (group.element_order(g) == 2)
                quaternion_part.push_back(g);
    }

    DomPrediction prediction;
    if (profile.has_quaternion)
        prediction.case_tag = has_cyclic ? "G1xZnxQ" : "G1xQ";
    else
        prediction.case_tag = has_cyclic ? "G1xZn" : "G1";

    std::set<Element> dom;
    for (auto s : cyclic_part)
        for (auto q : quaternion_part)
            dom.insert(group.mul(s, q));
    prediction.elements.assign(dom.begin(), dom.end());
    return prediction;
}

auto root_classes(const FiniteGroup & group, const EpGraph & graph) -> RootClassPartition
{
    if (graph.mode() == EpgMode::Full)
        throw Error(ErrorCode::ModeError, "root classes need a star or proper graph");
    auto primes = factorize(group.order());
    if (primes.size() > 1)
        throw Error(ErrorCode::NotAPGroup, "group of order " + std::to_string(group.order()) + " is not a p-group");
    if (primes.empty())
        return {};
    auto p = primes.front().first;

    const auto & g = graph.graph();
    std::map<Element, VertexSet> classes;
    for (std::size_t v = 0; v < g.size(); ++v) {
        auto x = g.label(v);
        auto a = group.power(x, group.element_order(x) / p);
        auto sub = cyclic_subgroup(group, a).elements;
        auto rep = sub.size() > 1 ? sub[1] : sub[0];
        auto [it, inserted] = classes.try_emplace(rep, VertexSet(g.size()));
        it->second.set(v);
    }

    RootClassPartition partition;
    for (auto & [rep, members] : classes)
        partition.push_back(RootClass{rep, std::move(members)});
    return partition;
}

auto export_dot(const EpGraph & graph) -> std::string
{
    const auto & g = graph.graph();
    std::ostringstream out;
    out << "graph epg {\n";
    out << "  // source=" << graph.source() << " mode=" << to_string(graph.mode()) << " order=" << graph.group_order();
    if (graph.mode() != EpgMode::Full) {
        out << " removed=";
        for (std::size_t i = 0; i < graph.removed().size(); ++i)
            out << (i ? "," : "") << graph.removed()[i];
    }
    out << "\n";

    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return g.label(a) < g.label(b); });
    for (auto v : order)
        out << "  " << g.label(v) << ";\n";

    std::vector<std::pair<Element, Element>> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(std::min(g.label(u), g.label(v)), std::max(g.label(u), g.label(v)));
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges)
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

auto to_json(const EpGraph & graph) -> nlohmann::json
{
    const auto & g = graph.graph();
    std::vector<Element> labels = g.labels();
    std::sort(labels.begin(), labels.end());
    std::vector<std::pair<Element, Element>> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(std::min(g.label(u), g.label(v)), std::max(g.label(u), g.label(v)));
    std::sort(edges.begin(), edges.end());

    nlohmann::json j;
    j["order"] = graph.group_order();
    j["mode"] = to_string(graph.mode());
    j["labels"] = labels;
    auto & je = j["edges"] = nlohmann::json::array();
    for (auto [u, v] : edges)
        je.push_back({u, v});
    return j;
}

} // namespace epgdom
