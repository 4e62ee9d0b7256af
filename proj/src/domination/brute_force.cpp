#include "epgdom/domination.hpp"
#include "epgdom/error.hpp"

namespace epgdom {

auto brute_force_minimum(const Graph & graph, DominationKind kind, std::size_t max_vertices) -> DominationCertificate
{
    auto n = graph.size();
    if (n > max_vertices || n > 63)
        throw Error(ErrorCode::TooLarge, "brute force limited to " + std::to_string(std::min<std::size_t>(max_vertices, 63)) +
                                             " vertices, graph has " + std::to_string(n));

    // mask[u]: the vertices whose selection takes care of u
    std::vector<std::uint64_t> mask(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v)
            if (graph.adjacent(u, v))
                mask[u] |= std::uint64_t{1} << v;
        if (kind == DominationKind::Dominating)
            mask[u] |= std::uint64_t{1} << u;
    }

    DominationCertificate cert;
    cert.kind = kind;
    cert.method = SolveMethod::BruteForce;
    cert.witness = VertexSet(n);

    auto satisfies = [&](std::uint64_t s) {
        for (std::size_t u = 0; u < n; ++u)
            if (! (mask[u] & s))
                return false;
        return true;
    };

    for (std::size_t k = 0; k <= n; ++k) {
        // Gosper's hack: every k-subset in increasing numeric order
        std::uint64_t s = k ? (std::uint64_t{1} << k) - 1 : 0;
        std::uint64_t limit = std::uint64_t{1} << n;
        while (s < limit) {
            ++cert.nodes_explored;
            if (satisfies(s)) {
                cert.status = CertificateStatus::Optimal;
                cert.size = k;
                for (std::size_t v = 0; v < n; ++v)
                    if (s >> v & 1)
                        cert.witness.set(v);
                return cert;
            }
            if (s == 0)
                break;
            auto low = s & -s;
            auto ripple = s + low;
            s = (((ripple ^ s) >> 2) / low) | ripple;
        }
    }

    cert.status = CertificateStatus::NoneExists;
    return cert;
}

} // namespace epgdom
