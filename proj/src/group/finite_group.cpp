#include "epgdom/finite_group.hpp"

#include "epgdom/error.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace epgdom {

namespace
{
    auto fail(const std::string & reason) -> NotAGroupError { return NotAGroupError(reason); }

    /// Light's associativity test restricted to a generating set: the elements
    /// g with (ag)b = a(gb) for all a, b form a submagma, so checking the
    /// generators suffices. Returns a failing triple when one is found.
    auto light_test(std::size_t n, const std::vector<Element> & t, std::array<Element, 3> & witness) -> bool
    {
        auto m = [&](Element a, Element b) { return t[static_cast<std::size_t>(a) * n + b]; };

        std::vector<Element> generators;
        std::vector<char> reached(n, 0);
        std::vector<Element> members{0};
        reached[0] = 1;
        for (Element g = 0; g < n; ++g) {
            if (reached[g])
                continue;
            generators.push_back(g);
            // closure of the current members under right multiplication by every generator
            for (std::size_t i = 0; i < members.size(); ++i)
                for (auto s : generators) {
                    auto x = m(members[i], s);
                    if (! reached[x]) {
                        reached[x] = 1;
                        members.push_back(x);
                    }
                }
        }

        for (auto g : generators)
            for (Element a = 0; a < n; ++a) {
                auto ag = m(a, g);
                for (Element b = 0; b < n; ++b)
                    if (m(ag, b) != m(a, m(g, b))) {
                        witness = {a, g, b};
                        return false;
                    }
            }
        return true;
    }
}

auto to_string(AssociativityCheck check) -> const char *
{
    return check == AssociativityCheck::Exhaustive ? "exhaustive" : "sampled";
}

auto FiniteGroup::from_table(std::size_t n, std::vector<Element> table, Provenance provenance,
                             const GroupOptions & options) -> FiniteGroup
{
    if (n == 0)
        throw fail("empty table");
    if (n > options.order_cap)
        throw Error(ErrorCode::OrderExceedsCap,
                    "order " + std::to_string(n) + " exceeds cap " + std::to_string(options.order_cap));
    if (table.size() != n * n)
        throw fail("table has " + std::to_string(table.size()) + " entries, expected " + std::to_string(n * n));
    for (auto v : table)
        if (v >= n)
            throw fail("entry " + std::to_string(v) + " out of range");

    auto at = [&](Element a, Element b) { return table[static_cast<std::size_t>(a) * n + b]; };

    std::optional<Element> identity;
    for (Element e = 0; e < n && ! identity; ++e) {
        bool ok = true;
        for (Element x = 0; x < n && ok; ++x)
            ok = at(e, x) == x && at(x, e) == x;
        if (ok)
            identity = e;
    }
    if (! identity)
        throw fail("no identity");

    // swap labels *identity and 0; the permutation is an involution
    auto relabel = [id = *identity](Element x) -> Element {
        if (x == id)
            return 0;
        if (x == 0)
            return id;
        return x;
    };
    if (*identity != 0) {
        std::vector<Element> relabelled(n * n);
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b)
                relabelled[static_cast<std::size_t>(relabel(a)) * n + relabel(b)] = relabel(at(a, b));
        table = std::move(relabelled);
    }

    FiniteGroup g;
    g._n = n;
    g._table = std::move(table);
    g._provenance = std::move(provenance);

    g._inv.assign(n, 0);
    for (Element a = 0; a < n; ++a) {
        std::optional<Element> inv;
        for (Element b = 0; b < n && ! inv; ++b)
            if (g.mul(a, b) == 0 && g.mul(b, a) == 0)
                inv = b;
        if (! inv)
            throw fail("missing inverse for element " + std::to_string(relabel(a)));
        g._inv[a] = *inv;
    }

    auto triple = [&](Element a, Element b, Element c) {
        return "non-associative triple (" + std::to_string(relabel(a)) + "," + std::to_string(relabel(b)) + "," +
               std::to_string(relabel(c)) + ")";
    };
    if (n <= options.exhaustive_limit) {
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b) {
                auto ab = g.mul(a, b);
                for (Element c = 0; c < n; ++c)
                    if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
                        throw fail(triple(a, b, c));
            }
        g._provenance.associativity = AssociativityCheck::Exhaustive;
    }
    else {
        std::mt19937_64 rng(options.sample_seed);
        for (std::size_t i = 0; i < options.sample_triples; ++i) {
            auto a = static_cast<Element>(rng() % n), b = static_cast<Element>(rng() % n),
                 c = static_cast<Element>(rng() % n);
            if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                throw fail(triple(a, b, c));
        }
        std::array<Element, 3> w{};
        if (! light_test(n, g._table, w))
            throw fail(triple(w[0], w[1], w[2]));
        g._provenance.associativity = AssociativityCheck::Sampled;
    }

    g._elem_order.assign(n, 0);
    for (Element a = 0; a < n; ++a) {
        std::uint64_t k = 1;
        for (Element x = a; x != 0; x = g.mul(x, a)) {
            if (++k > n)
                throw fail("element " + std::to_string(relabel(a)) + " has no finite order");
        }
        g._elem_order[a] = k;
    }

    return g;
}

auto FiniteGroup::power(Element g, std::uint64_t e) const -> Element
{
    Element result = 0;
    Element base = g;
    while (e) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

auto FiniteGroup::is_abelian() const -> bool
{
    for (Element a = 0; a < _n; ++a)
        for (Element b = a + 1; b < _n; ++b)
            if (! commute(a, b))
                return false;
    return true;
}

auto cyclic_subgroup(const FiniteGroup & group, Element g) -> CyclicSubgroup
{
    CyclicSubgroup c{g, {}, group.element_order(g)};
    c.elements.reserve(c.order);
    Element x = 0;
    for (std::uint64_t i = 0; i < c.order; ++i) {
        c.elements.push_back(x);
        x = group.mul(x, g);
    }
    std::sort(c.elements.begin(), c.elements.end());
    return c;
}

auto distinct_cyclic_subgroups(const FiniteGroup & group) -> std::vector<CyclicSubgroup>
{
    std::vector<CyclicSubgroup> result;
    std::vector<char> seen(group.order(), 0);
    for (Element g = 0; g < group.order(); ++g) {
        if (seen[g])
            continue;
        auto c = cyclic_subgroup(group, g);
        // every generator of <g> yields the same subgroup
        for (auto h : c.elements)
            if (group.element_order(h) == c.order)
                seen[h] = 1;
        result.push_back(std::move(c));
    }
    std::sort(result.begin(), result.end(), [](const CyclicSubgroup & a, const CyclicSubgroup & b) {
        if (a.order != b.order)
            return a.order < b.order;
        return a.elements < b.elements;
    });
    return result;
}

auto maximal_cyclic_subgroups(const FiniteGroup & group) -> std::vector<CyclicSubgroup>
{
    auto all = distinct_cyclic_subgroups(group);
    std::vector<std::size_t> id_of(group.order());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (auto h : all[i].elements)
            if (group.element_order(h) == all[i].order)
                id_of[h] = i;

    std::vector<char> maximal(all.size(), 1);
    for (const auto & c : all)
        for (auto h : c.elements)
            if (group.element_order(h) < c.order)
                maximal[id_of[h]] = 0;

    std::vector<CyclicSubgroup> result;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (maximal[i])
            result.push_back(std::move(all[i]));
    return result;
}

auto center(const FiniteGroup & group) -> std::vector<Element>
{
    std::vector<Element> z;
    for (Element a = 0; a < group.order(); ++a) {
        bool central = true;
        for (Element b = 0; b < group.order() && central; ++b)
            central = group.commute(a, b);
        if (central)
            z.push_back(a);
    }
    return z;
}

} // namespace epgdom
