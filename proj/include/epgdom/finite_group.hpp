#pragma once

#include "epgdom/group_spec.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace epgdom {

/// Dense element index; the identity is always 0.
using Element = std::uint32_t;

enum class AssociativityCheck {
    Exhaustive, ///< every triple checked
    Sampled,    ///< random triples plus a generator-based test; "unverified"
};

auto to_string(AssociativityCheck check) -> const char *;

struct Provenance
{
    std::optional<GroupSpec> spec; ///< empty for imported tables
    std::string label;             ///< rendered spec, or "imported"
    AssociativityCheck associativity = AssociativityCheck::Exhaustive;
};

struct GroupOptions
{
    std::size_t order_cap = 4096;
    std::size_t exhaustive_limit = 512;
    std::uint64_t sample_seed = 0x5eed;
    std::size_t sample_triples = 200000;
};

/**
 * A finite group given by its full multiplication table. Immutable once
 * built; every instance has passed validation, so the group axioms can be
 * relied on by callers.
 */
class FiniteGroup
{
public:
    /// Validates `table` (row-major, n*n) and re-indexes the identity to 0.
    /// Throws NotAGroupError naming the failed axiom.
    static auto from_table(std::size_t n, std::vector<Element> table, Provenance provenance,
                           const GroupOptions & options = {}) -> FiniteGroup;

    auto order() const noexcept -> std::size_t { return _n; }
    auto identity() const noexcept -> Element { return 0; }
    auto mul(Element a, Element b) const -> Element { return _table[static_cast<std::size_t>(a) * _n + b]; }
    auto inverse(Element g) const -> Element { return _inv[g]; }
    auto element_order(Element g) const -> std::uint64_t { return _elem_order[g]; }
    auto element_orders() const -> std::span<const std::uint64_t> { return _elem_order; }
    auto commute(Element a, Element b) const -> bool { return mul(a, b) == mul(b, a); }
    auto power(Element g, std::uint64_t e) const -> Element;
    auto table() const -> std::span<const Element> { return _table; }
    auto provenance() const -> const Provenance & { return _provenance; }
    auto is_abelian() const -> bool;

private:
    FiniteGroup() = default;

    std::size_t _n = 0;
    std::vector<Element> _table;
    std::vector<Element> _inv;
    std::vector<std::uint64_t> _elem_order;
    Provenance _provenance;
};

/// Parses the Cayley-table text format: first line n, then n lines of n
/// integers in [0, n). Lines starting with '#' are comments.
auto from_cayley_table(std::string_view text, const GroupOptions & options = {}) -> FiniteGroup;

auto load_cayley_file(const std::string & path, const GroupOptions & options = {}) -> FiniteGroup;

auto to_cayley_text(const FiniteGroup & group) -> std::string;

auto construct_group(const GroupSpec & spec, const GroupOptions & options = {}) -> FiniteGroup;

/// Componentwise product; element (a, b) has index a * |right| + b.
auto direct_product(const FiniteGroup & left, const FiniteGroup & right, const GroupOptions & options = {})
    -> FiniteGroup;

struct CyclicSubgroup
{
    Element generator;
    std::vector<Element> elements; ///< sorted
    std::uint64_t order;

    friend auto operator==(const CyclicSubgroup &, const CyclicSubgroup &) -> bool = default;
};

auto cyclic_subgroup(const FiniteGroup & group, Element g) -> CyclicSubgroup;

/// One representative per distinct cyclic subgroup, ordered by order and
/// then by element set. The representative is the least generator.
auto distinct_cyclic_subgroups(const FiniteGroup & group) -> std::vector<CyclicSubgroup>;

/// The cyclic subgroups not properly contained in another cyclic subgroup.
auto maximal_cyclic_subgroups(const FiniteGroup & group) -> std::vector<CyclicSubgroup>;

auto center(const FiniteGroup & group) -> std::vector<Element>;

} // namespace epgdom
