#include "epgdom/harness.hpp"

#include <numeric>
#include <random>
#include <sstream>

namespace epgdom {

namespace
{
    // Raw engine output only: distribution objects are not portable across
    // standard libraries and the self-test must replay exactly.
    auto uniform01(std::mt19937_64 & rng) -> double { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
    auto below(std::mt19937_64 & rng, std::size_t bound) -> std::size_t { return static_cast<std::size_t>(rng() % bound); }

    auto labelled(std::size_t n) -> Graph
    {
        std::vector<Element> labels(n);
        std::iota(labels.begin(), labels.end(), Element{0});
        return Graph(std::move(labels));
    }

    auto summary(const DominationCertificate & c) -> std::string
    {
        return c.exists() ? "Optimal(" + std::to_string(c.size) + ")" : "NoneExists";
    }

    auto compare(const Graph & g, const std::string & family, SelftestSummary & out) -> bool
    {
        ++out.graphs;
        ++out.per_family[family];
        for (auto kind : {DominationKind::Dominating, DominationKind::TotalDominating}) {
            ++out.comparisons;
            auto fast = solve_minimum(g, kind);
            auto slow = brute_force_minimum(g, kind, 63);
            bool ok = fast.status == slow.status && fast.size == slow.size &&
                      (! fast.exists() || check_domination(g, fast.witness, kind));
            if (! ok) {
                out.failure = SelftestFailure{family, kind, g.size(), g.edges(), summary(fast), summary(slow)};
                return false;
            }
        }
        return true;
    }
}

auto random_graph(std::uint64_t seed, std::size_t n, double density) -> Graph
{
    std::mt19937_64 rng(seed);
    auto g = labelled(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (uniform01(rng) < density)
                g.add_edge(u, v);
    return g;
}

auto random_clique_union(std::uint64_t seed, std::size_t n) -> Graph
{
    std::mt19937_64 rng(seed);
    auto g = labelled(n);
    std::size_t start = 0;
    while (start < n) {
        auto size = std::min(n - start, 1 + below(rng, 6));
        for (std::size_t u = start; u < start + size; ++u)
            for (std::size_t v = u + 1; v < start + size; ++v)
                // near-cliques: drop the odd intra-clique edge
                if (uniform01(rng) >= 0.1)
                    g.add_edge(u, v);
        start += size;
    }
    return g;
}

auto solver_selftest(std::uint64_t seed, std::size_t trials, std::size_t max_n) -> SelftestSummary
{
    SelftestSummary out;
    if (! compare(labelled(1), "single-vertex", out))
        return out;
    auto k2 = labelled(2);
    k2.add_edge(0, 1);
    if (! compare(k2, "K2", out))
        return out;

    std::mt19937_64 rng(seed);
    static constexpr double densities[] = {0.1, 0.3, 0.6};
    for (std::size_t t = 0; t < trials; ++t) {
        auto n = 1 + below(rng, std::max<std::size_t>(max_n, 1));
        auto graph_seed = rng();
        auto family = t % 4;
        if (family < 3) {
            std::ostringstream name;
            name << "er-" << densities[family];
            if (! compare(random_graph(graph_seed, n, densities[family]), name.str(), out))
                return out;
        }
        else if (! compare(random_clique_union(graph_seed, n), "clique-union", out))
            return out;
    }
    return out;
}

auto describe(const SelftestFailure & failure) -> std::string
{
    std::ostringstream out;
    out << failure.family << " graph with " << failure.vertices << " vertices, " << to_string(failure.kind)
        << ": branch-and-bound " << failure.branch_and_bound << ", brute force " << failure.brute_force << "\nedges:";
    for (auto [u, v] : failure.edges)
        out << " " << u << "-" << v;
    return out.str();
}

} // namespace epgdom
