#pragma once

// Test-only reference implementations. Each one follows a definition
// literally and shares no code path with the library routine it checks.

#include "epgdom/graph.hpp"

#include <numeric>
#include <set>
#include <vector>

namespace epgdom::oracle {

/// Powers of g by repeated multiplication, as a set.
inline auto powers(const FiniteGroup & group, Element g) -> std::set<Element>
{
    std::set<Element> out{group.identity()};
    for (Element x = g; x != group.identity(); x = group.mul(x, g))
        out.insert(x);
    return out;
}

/// u ~ v iff some w has u, v in <w>: the pairwise scan over all w.
inline auto enhanced_power_graph(const FiniteGroup & group) -> Graph
{
    std::vector<Element> labels(group.order());
    std::iota(labels.begin(), labels.end(), Element{0});
    Graph g(labels);
    std::vector<std::set<Element>> cyclic;
    for (Element w = 0; w < group.order(); ++w)
        cyclic.push_back(powers(group, w));
    for (Element u = 0; u < group.order(); ++u)
        for (Element v = u + 1; v < group.order(); ++v)
            for (const auto & c : cyclic)
                if (c.contains(u) && c.contains(v)) {
                    g.add_edge(u, v);
                    break;
                }
    return g;
}

/// Distinct cyclic subgroups as element sets.
inline auto cyclic_subgroup_sets(const FiniteGroup & group) -> std::set<std::set<Element>>
{
    std::set<std::set<Element>> out;
    for (Element g = 0; g < group.order(); ++g)
        out.insert(powers(group, g));
    return out;
}

inline auto is_total_dominating(const Graph & graph, const std::vector<std::size_t> & set) -> bool
{
    for (std::size_t v = 0; v < graph.size(); ++v) {
        bool has = false;
        for (auto d : set)
            has = has || graph.adjacent(v, d);
        if (! has)
            return false;
    }
    return true;
}

} // namespace epgdom::oracle
