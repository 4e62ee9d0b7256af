#include "epgdom/domination.hpp"
#include "epgdom/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace epgdom {

auto to_string(DominationKind kind) -> const char *
{
    return kind == DominationKind::Dominating ? "Dominating" : "TotalDominating";
}

auto to_string(SolveMethod method) -> const char *
{
    return method == SolveMethod::BranchAndBound ? "BranchAndBound" : "BruteForce";
}

auto to_string(CertificateStatus status) -> const char *
{
    return status == CertificateStatus::Optimal ? "Optimal" : "NoneExists";
}

auto parse_domination_kind(const std::string & text) -> DominationKind
{
    if (text == "dom" || text == "Dominating")
        return DominationKind::Dominating;
    if (text == "total" || text == "TotalDominating")
        return DominationKind::TotalDominating;
    throw Error(ErrorCode::InvalidParameter, "unknown domination kind '" + text + "' (expected dom or total)");
}

auto node_budget_from_env() -> std::uint64_t
{
    const char * env = std::getenv("EPGDOM_BUDGET");
    if (! env || ! *env)
        return default_node_budget;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
    if (ec != std::errc{} || *ptr != '\0' || v == 0)
        throw Error(ErrorCode::InvalidParameter, std::string("EPGDOM_BUDGET is not a positive integer: ") + env);
    return v;
}

auto check_domination(const Graph & graph, const VertexSet & set, DominationKind kind) -> bool
{
    for (std::size_t v = 0; v < graph.size(); ++v) {
        if (kind == DominationKind::Dominating && set.test(v))
            continue;
        if (! graph.neighbours(v).intersects(set))
            return false;
    }
    return true;
}

auto to_json(const DominationCertificate & certificate, const Graph & graph) -> nlohmann::json
{
    nlohmann::json j;
    j["kind"] = to_string(certificate.kind);
    j["status"] = to_string(certificate.status);
    if (certificate.exists()) {
        j["size"] = certificate.size;
        std::vector<Element> labels;
        certificate.witness.for_each([&](std::size_t v) { labels.push_back(graph.label(v)); });
        std::sort(labels.begin(), labels.end());
        j["witness"] = labels;
    }
    j["nodes_explored"] = certificate.nodes_explored;
    j["method"] = to_string(certificate.method);
    return j;
}

} // namespace epgdom
