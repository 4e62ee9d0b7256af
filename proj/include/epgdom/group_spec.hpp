#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace epgdom {

struct CyclicAtom
{
    std::uint64_t n;
    friend auto operator==(const CyclicAtom &, const CyclicAtom &) -> bool = default;
};

/// Generalized quaternion group of order 2^k, k >= 3.
struct QuaternionAtom
{
    unsigned k;
    friend auto operator==(const QuaternionAtom &, const QuaternionAtom &) -> bool = default;
};

/// Dihedral group of order 2n, n >= 3.
struct DihedralAtom
{
    std::uint64_t n;
    friend auto operator==(const DihedralAtom &, const DihedralAtom &) -> bool = default;
};

struct ElementaryAbelianAtom
{
    std::uint64_t p;
    unsigned rank;
    friend auto operator==(const ElementaryAbelianAtom &, const ElementaryAbelianAtom &) -> bool = default;
};

/// Upper unitriangular 3x3 matrices over F_p, p odd; order p^3.
struct HeisenbergAtom
{
    std::uint64_t p;
    friend auto operator==(const HeisenbergAtom &, const HeisenbergAtom &) -> bool = default;
};

struct CayleyFileAtom
{
    std::string path;
    friend auto operator==(const CayleyFileAtom &, const CayleyFileAtom &) -> bool = default;
};

using GroupAtom = std::variant<CyclicAtom, QuaternionAtom, DihedralAtom, ElementaryAbelianAtom, HeisenbergAtom, CayleyFileAtom>;

/**
 * A group expression: the direct product of its factors, in order. A single
 * factor is the atom itself. The text form is
 *
 *     Z<n> | Q<2^k> | D<n> | E<p>^<d> | H<p> | file:<path>
 *
 * joined by `x`, e.g. `E3^2xQ8`. A `file:` path runs until the next `x` that
 * starts another atom, or the end of the text.
 */
struct GroupSpec
{
    std::vector<GroupAtom> factors;

    friend auto operator==(const GroupSpec &, const GroupSpec &) -> bool = default;
};

auto parse_group_spec(std::string_view text) -> GroupSpec;

auto render(const GroupAtom & atom) -> std::string;
auto render(const GroupSpec & spec) -> std::string;

/// Order implied by an atom, saturating at UINT64_MAX; 0 for a Cayley file.
auto nominal_order(const GroupAtom & atom) -> std::uint64_t;

auto is_prime(std::uint64_t n) -> bool;

} // namespace epgdom
