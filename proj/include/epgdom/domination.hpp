#pragma once

#include "epgdom/graph.hpp"
#include "epgdom/vertex_set.hpp"

#include <json.hpp>

#include <cstdint>

namespace epgdom {

enum class DominationKind { Dominating, TotalDominating };
enum class SolveMethod { BranchAndBound, BruteForce };
enum class CertificateStatus { Optimal, NoneExists };

auto to_string(DominationKind kind) -> const char *;
auto to_string(SolveMethod method) -> const char *;
auto to_string(CertificateStatus status) -> const char *;

/// Accepts "dom" / "total" as well as the full enum names.
auto parse_domination_kind(const std::string & text) -> DominationKind;

struct DominationCertificate
{
    DominationKind kind = DominationKind::Dominating;
    CertificateStatus status = CertificateStatus::Optimal;
    std::size_t size = 0;
    VertexSet witness; ///< empty when NoneExists
    std::uint64_t nodes_explored = 0;
    SolveMethod method = SolveMethod::BranchAndBound;

    auto exists() const -> bool { return status == CertificateStatus::Optimal; }
};

inline constexpr std::uint64_t default_node_budget = 100'000'000;

struct SolverOptions
{
    std::uint64_t node_budget = default_node_budget;
};

/// Node budget from EPGDOM_BUDGET when set and valid, else the default.
auto node_budget_from_env() -> std::uint64_t;

/// Dominating: every vertex is in `set` or adjacent to a member.
/// TotalDominating: every vertex, members included, has a neighbour in `set`.
auto check_domination(const Graph & graph, const VertexSet & set, DominationKind kind) -> bool;

/**
 * Exact minimum (total) dominating set. Components are solved separately and
 * the optima summed. Within a component the search branches on the
 * undominated vertex with the fewest remaining candidate dominators, starts
 * from a greedy upper bound, and prunes with a packing bound (undominated
 * vertices whose candidate sets are pairwise disjoint each need their own
 * dominator). Throws ResourceLimitError once the node budget is exceeded.
 */
auto solve_minimum(const Graph & graph, DominationKind kind, const SolverOptions & options = {})
    -> DominationCertificate;

/// Enumerates subsets by increasing size. Throws Error(TooLarge) above
/// `max_vertices` vertices.
auto brute_force_minimum(const Graph & graph, DominationKind kind, std::size_t max_vertices = 20)
    -> DominationCertificate;

/// {kind, status, size?, witness? (sorted labels), nodes_explored, method}
auto to_json(const DominationCertificate & certificate, const Graph & graph) -> nlohmann::json;

} // namespace epgdom
