#include "epgdom/graph.hpp"

#include "epgdom/error.hpp"

namespace epgdom {

Graph::Graph(std::vector<Element> labels) :
    _labels(std::move(labels)),
    _rows(_labels.size(), VertexSet(_labels.size()))
{
}

auto Graph::add_edge(std::size_t u, std::size_t v) -> void
{
    if (u == v)
        return;
    _rows[u].set(v);
    _rows[v].set(u);
}

auto Graph::add_clique(const VertexSet & members) -> void
{
    members.for_each([&](std::size_t v) {
        _rows[v] |= members;
        _rows[v].reset(v);
    });
}

auto Graph::edge_count() const -> std::size_t
{
    std::size_t twice = 0;
    for (const auto & r : _rows)
        twice += r.count();
    return twice / 2;
}

auto Graph::edges() const -> std::vector<std::pair<std::size_t, std::size_t>>
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u)
        for (auto v = _rows[u].find_next(u + 1); v != VertexSet::npos; v = _rows[u].find_next(v + 1))
            out.emplace_back(u, v);
    return out;
}

auto Graph::induced(const VertexSet & keep) const -> Graph
{
    auto kept = keep.members();
    std::vector<std::size_t> index(size(), VertexSet::npos);
    std::vector<Element> labels;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        index[kept[i]] = i;
        labels.push_back(_labels[kept[i]]);
    }
    Graph sub(std::move(labels));
    for (std::size_t i = 0; i < kept.size(); ++i)
        _rows[kept[i]].for_each([&](std::size_t v) {
            if (index[v] != VertexSet::npos && index[v] > i)
                sub.add_edge(i, index[v]);
        });
    return sub;
}

auto to_string(EpgMode mode) -> const char *
{
    switch (mode) {
    case EpgMode::Full: return "full";
    case EpgMode::Star: return "star";
    case EpgMode::Proper: return "proper";
    }
    return "?";
}

auto parse_epg_mode(const std::string & text) -> EpgMode
{
    if (text == "full")
        return EpgMode::Full;
    if (text == "star")
        return EpgMode::Star;
    if (text == "proper")
        return EpgMode::Proper;
    throw Error(ErrorCode::ModeError, "unknown graph mode '" + text + "' (expected full, star or proper)");
}

EpGraph::EpGraph(EpgMode mode, std::string source, std::size_t group_order, Graph graph, std::vector<Element> removed) :
    _mode(mode),
    _source(std::move(source)),
    _group_order(group_order),
    _graph(std::move(graph)),
    _removed(std::move(removed))
{
}

auto connected_components(const Graph & graph) -> std::vector<VertexSet>
{
    std::vector<VertexSet> components;
    VertexSet unvisited = VertexSet::full(graph.size());
    for (auto start = unvisited.find_first(); start != VertexSet::npos; start = unvisited.find_first()) {
        VertexSet component(graph.size());
        VertexSet frontier(graph.size());
        frontier.set(start);
        while (frontier.any()) {
            component |= frontier;
            unvisited -= frontier;
            VertexSet next(graph.size());
            frontier.for_each([&](std::size_t v) { next |= graph.neighbours(v); });
            next &= unvisited;
            frontier = std::move(next);
        }
        components.push_back(std::move(component));
    }
    return components;
}

} // namespace epgdom
