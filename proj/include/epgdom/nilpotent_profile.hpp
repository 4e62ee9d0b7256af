#pragma once

#include "epgdom/finite_group.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace epgdom {

enum class SylowClass { Cyclic, GeneralizedQuaternion, Neither };

auto to_string(SylowClass c) -> const char *;

struct SylowFactor
{
    std::uint64_t prime = 0;
    unsigned exponent = 0;
    std::vector<Element> elements; ///< every p-element of the group, sorted
    std::map<std::uint64_t, std::size_t> order_census; ///< element order -> count within the factor
    SylowClass classification = SylowClass::Neither;
    std::uint64_t r = 0;            ///< number of subgroups of order p
    std::optional<unsigned> k;      ///< order is 2^k; set iff GeneralizedQuaternion
    /// p = 2 and some involution is not the square of any element, i.e. it
    /// lies in no cyclic subgroup besides its own.
    bool isolated_involution = false;

    auto order() const -> std::uint64_t;
};

/**
 * Sylow decomposition of a nilpotent group. `factors` is sorted by prime;
 * `r_sorted` lists the r values of the Neither factors in nondecreasing order.
 */
struct NilpotentProfile
{
    std::vector<SylowFactor> factors;
    std::size_t m = 0;
    std::uint64_t n_cyclic = 1;
    bool has_quaternion = false;
    std::vector<std::uint64_t> r_sorted;

    auto quaternion() const -> const SylowFactor *;
    auto order() const -> std::uint64_t;
    auto is_p_group() const -> bool { return factors.size() == 1; }
    /// Short human-readable form, e.g. "2:Q(k=3) 3:N(r=4)".
    auto summary() const -> std::string;
};

/// Throws NotNilpotentError with the smallest prime whose p-elements do not
/// form a subgroup.
auto nilpotent_profile(const FiniteGroup & group) -> NilpotentProfile;

/// (#elements of order p) / (p - 1), from the factor's order census.
auto count_order_p_subgroups(const SylowFactor & factor) -> std::uint64_t;

/// Fills m, n_cyclic, has_quaternion and r_sorted from `factors`.
auto finalize_profile(std::vector<SylowFactor> factors) -> NilpotentProfile;

/// Prime factorisation as (prime, exponent) pairs in increasing prime order.
auto factorize(std::uint64_t n) -> std::vector<std::pair<std::uint64_t, unsigned>>;

/// The p-part of g: the unique p-element g_p with g = prod g_p over p | o(g).
auto p_part(const FiniteGroup & group, Element g, std::uint64_t p) -> Element;

} // namespace epgdom
