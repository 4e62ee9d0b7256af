#pragma once

#include "epgdom/finite_group.hpp"
#include "epgdom/nilpotent_profile.hpp"
#include "epgdom/vertex_set.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace epgdom {

/// Simple undirected graph with one bit row per vertex. Vertex v carries the
/// label `labels()[v]`; labels are group-element indices for group graphs.
class Graph
{
public:
    Graph() = default;
    explicit Graph(std::vector<Element> labels);

    auto size() const noexcept -> std::size_t { return _labels.size(); }
    auto labels() const -> const std::vector<Element> & { return _labels; }
    auto label(std::size_t v) const -> Element { return _labels[v]; }

    auto add_edge(std::size_t u, std::size_t v) -> void;
    /// Joins every pair of distinct members.
    auto add_clique(const VertexSet & members) -> void;
    auto adjacent(std::size_t u, std::size_t v) const -> bool { return _rows[u].test(v); }
    auto neighbours(std::size_t v) const -> const VertexSet & { return _rows[v]; }
    auto degree(std::size_t v) const -> std::size_t { return _rows[v].count(); }
    auto edge_count() const -> std::size_t;

    /// Sorted (u, v) pairs with u < v, in vertex indices.
    auto edges() const -> std::vector<std::pair<std::size_t, std::size_t>>;

    /// Subgraph induced on `keep`, vertices renumbered in increasing order.
    auto induced(const VertexSet & keep) const -> Graph;

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
    std::vector<Element> _labels;
    std::vector<VertexSet> _rows;
};

enum class EpgMode { Full, Star, Proper };

auto to_string(EpgMode mode) -> const char *;
auto parse_epg_mode(const std::string & text) -> EpgMode;

/**
 * Enhanced power graph of a group, or one of its vertex-deleted variants:
 * Full keeps every element, Star drops the identity, Proper drops every
 * dominating vertex of the Full graph.
 */
class EpGraph
{
public:
    EpGraph(EpgMode mode, std::string source, std::size_t group_order, Graph graph, std::vector<Element> removed);

    auto mode() const noexcept -> EpgMode { return _mode; }
    auto source() const -> const std::string & { return _source; }
    auto group_order() const noexcept -> std::size_t { return _group_order; }
    auto graph() const -> const Graph & { return _graph; }
    /// Elements of the group that are not vertices, sorted.
    auto removed() const -> const std::vector<Element> & { return _removed; }

private:
    EpgMode _mode;
    std::string _source;
    std::size_t _group_order;
    Graph _graph;
    std::vector<Element> _removed;
};

/// u ~ v iff u != v and some cyclic subgroup contains both. Built as the
/// union of cliques on the maximal cyclic subgroups.
auto build_epg(const FiniteGroup & group, EpgMode mode) -> EpGraph;

/// Power graph on all of G: u ~ v iff one is a power of the other.
auto build_power_graph(const FiniteGroup & group) -> Graph;

/// Vertices adjacent to every other vertex. Throws ModeError unless Full.
auto graph_dominating_vertices(const EpGraph & graph) -> VertexSet;

/// Dominating vertices of G_E(G) by the Sylow/centre criterion for
/// nilpotent groups. Returns sorted elements.
auto costanzo_dominating_vertices(const FiniteGroup & group, const NilpotentProfile & profile) -> std::vector<Element>;
auto costanzo_dominating_vertices(const FiniteGroup & group) -> std::vector<Element>;

struct DomPrediction
{
    std::string case_tag; ///< "G1", "G1xZn", "G1xQ" or "G1xZnxQ"
    std::vector<Element> elements; ///< sorted
};

/// Dom(G_E(G)) read off the group's structure: the cyclic Sylow part times
/// {identity, unique involution of the quaternion factor}.
auto corollary_dom_prediction(const NilpotentProfile & profile, const FiniteGroup & group) -> DomPrediction;

/// Components ordered by their least vertex.
auto connected_components(const Graph & graph) -> std::vector<VertexSet>;

struct RootClass
{
    Element representative; ///< least non-identity element of the order-p subgroup
    VertexSet members;
};

using RootClassPartition = std::vector<RootClass>;

/// For a p-group in Star or Proper mode, groups each vertex x by the unique
/// order-p subgroup of <x>. Classes are ordered by representative; classes
/// with no vertex in the graph are omitted.
auto root_classes(const FiniteGroup & group, const EpGraph & graph) -> RootClassPartition;

auto export_dot(const EpGraph & graph) -> std::string;

/// {order, mode, labels, edges: [[u, v], ...]} with edges as sorted label pairs.
auto to_json(const EpGraph & graph) -> nlohmann::json;

} // namespace epgdom
