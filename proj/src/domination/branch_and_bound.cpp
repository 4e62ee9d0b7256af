#include "epgdom/domination.hpp"
#include "epgdom/error.hpp"

#include <algorithm>
#include <numeric>

namespace epgdom {

namespace
{
    /// Set cover over one component: vertex c covers covers[c], and because
    /// adjacency is symmetric the candidates able to cover u are covers[u].
    class CoverSearch
    {
    public:
        CoverSearch(std::vector<VertexSet> covers, std::uint64_t & nodes, std::uint64_t budget) :
            _covers(std::move(covers)),
            _nodes(nodes),
            _budget(budget)
        {
        }

        auto solve() -> std::vector<std::size_t>
        {
            auto n = _covers.size();
            _best = greedy();
            _chosen.clear();
            search(VertexSet::full(n), VertexSet::full(n));
            return _best;
        }

    private:
        auto greedy() const -> std::vector<std::size_t>
        {
            auto n = _covers.size();
            auto uncovered = VertexSet::full(n);
            std::vector<std::size_t> picked;
            while (uncovered.any()) {
                std::size_t best = 0, gain = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    auto g = _covers[c].intersection_count(uncovered);
                    if (g > gain) {
                        gain = g;
                        best = c;
                    }
                }
                picked.push_back(best);
                uncovered -= _covers[best];
            }
            return picked;
        }

        auto search(const VertexSet & uncovered, VertexSet allowed) -> void
        {
            if (++_nodes > _budget)
                throw ResourceLimitError(_budget);

            if (uncovered.none()) {
                _best = _chosen;
                return;
            }
            if (_chosen.size() + 1 >= _best.size())
                return;

            // candidate counts for every undominated vertex
            std::vector<std::pair<std::size_t, std::size_t>> by_count;
            uncovered.for_each([&](std::size_t u) {
                by_count.emplace_back(_covers[u].intersection_count(allowed), u);
            });
            std::sort(by_count.begin(), by_count.end());
            if (by_count.front().first == 0)
                return;

            if (_chosen.size() + lower_bound(uncovered, allowed, by_count) >= _best.size())
                return;

            auto branch_vertex = by_count.front().second;
            auto candidates = (_covers[branch_vertex] & allowed).members();
            std::vector<std::size_t> gain(_covers.size());
            for (auto c : candidates)
                gain[c] = _covers[c].intersection_count(uncovered);
            std::stable_sort(candidates.begin(), candidates.end(),
                             [&](std::size_t a, std::size_t b) { return gain[a] > gain[b]; });

            for (auto c : candidates) {
                if (_chosen.size() + 1 >= _best.size())
                    return;
                _chosen.push_back(c);
                search(uncovered - _covers[c], allowed);
                _chosen.pop_back();
                // later siblings never pick c again
                allowed.reset(c);
            }
        }

        auto lower_bound(const VertexSet & uncovered, const VertexSet & allowed,
                         const std::vector<std::pair<std::size_t, std::size_t>> & by_count) const -> std::size_t
        {
            std::size_t packing = 0;
            VertexSet used(_covers.size());
            for (auto [count, u] : by_count) {
                auto candidates = _covers[u] & allowed;
                if (! candidates.intersects(used)) {
                    ++packing;
                    used |= candidates;
                }
            }

            std::size_t widest = 0;
            allowed.for_each([&](std::size_t c) {
                widest = std::max(widest, _covers[c].intersection_count(uncovered));
            });
            auto remaining = uncovered.count();
            auto by_size = widest ? (remaining + widest - 1) / widest : remaining;

            return std::max(packing, by_size);
        }

        std::vector<VertexSet> _covers;
        std::uint64_t & _nodes;
        std::uint64_t _budget;
        std::vector<std::size_t> _chosen;
        std::vector<std::size_t> _best;
    };
}

auto solve_minimum(const Graph & graph, DominationKind kind, const SolverOptions & options) -> DominationCertificate
{
    DominationCertificate cert;
    cert.kind = kind;
    cert.method = SolveMethod::BranchAndBound;
    cert.witness = VertexSet(graph.size());

    if (kind == DominationKind::TotalDominating)
        for (std::size_t v = 0; v < graph.size(); ++v)
            if (graph.degree(v) == 0) {
                cert.status = CertificateStatus::NoneExists;
                cert.witness = VertexSet(graph.size());
                return cert;
            }

    for (const auto & component : connected_components(graph)) {
        auto vertices = component.members();
        auto sub = graph.induced(component);
        std::vector<VertexSet> covers;
        covers.reserve(sub.size());
        for (std::size_t v = 0; v < sub.size(); ++v) {
            auto c = sub.neighbours(v);
            if (kind == DominationKind::Dominating)
                c.set(v);
            covers.push_back(std::move(c));
        }

        CoverSearch search(std::move(covers), cert.nodes_explored, options.node_budget);
        auto picked = search.solve();
        for (auto local : picked)
            cert.witness.set(vertices[local]);
        cert.size += picked.size();
    }

    cert.status = CertificateStatus::Optimal;
    return cert;
}

} // namespace epgdom
