#include "epgdom/error.hpp"
#include "epgdom/finite_group.hpp"

#include <limits>

namespace epgdom {

namespace
{
    using Table = std::vector<Element>;

    auto cyclic_table(std::size_t n) -> Table
    {
        Table t(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                t[a * n + b] = static_cast<Element>((a + b) % n);
        return t;
    }

    /// Elements x^a y^b stored at a + b*N with N = 2^(k-1); y x = x^-1 y and y^2 = x^(N/2).
    auto quaternion_table(unsigned k) -> Table
    {
        std::size_t half = std::size_t{1} << (k - 1);
        std::size_t n = 2 * half;
        Table t(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t a = i % half, b = i / half, c = j % half, d = j / half;
                std::size_t exp = b ? (a + half - c) % half : (a + c) % half;
                std::size_t y = b + d;
                if (y == 2) {
                    exp = (exp + half / 2) % half;
                    y = 0;
                }
                t[i * n + j] = static_cast<Element>(exp + y * half);
            }
        return t;
    }

    /// Elements r^a s^b stored at a + b*n; s r = r^-1 s and s^2 = e.
    auto dihedral_table(std::size_t rotations) -> Table
    {
        std::size_t n = 2 * rotations;
        Table t(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t a = i % rotations, b = i / rotations, c = j % rotations, d = j / rotations;
                std::size_t exp = b ? (a + rotations - c) % rotations : (a + c) % rotations;
                t[i * n + j] = static_cast<Element>(exp + ((b + d) % 2) * rotations);
            }
        return t;
    }

    /// Base-p digit vectors under digitwise addition.
    auto elementary_abelian_table(std::size_t p, std::size_t n) -> Table
    {
        Table t(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                std::size_t x = a, y = b, r = 0, place = 1;
                while (place < n) {
                    r += ((x % p + y % p) % p) * place;
                    x /= p;
                    y /= p;
                    place *= p;
                }
                t[a * n + b] = static_cast<Element>(r);
            }
        return t;
    }

    /// (a,b,c) stored at a + b p + c p^2 with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
    auto heisenberg_table(std::size_t p) -> Table
    {
        std::size_t n = p * p * p;
        Table t(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t a = i % p, b = (i / p) % p, c = i / (p * p);
                std::size_t a2 = j % p, b2 = (j / p) % p, c2 = j / (p * p);
                std::size_t ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
                t[i * n + j] = static_cast<Element>(ra + rb * p + rc * p * p);
            }
        return t;
    }

    auto check_cap(std::uint64_t order, const GroupOptions & options, const std::string & what) -> void
    {
        if (order > options.order_cap)
            throw Error(ErrorCode::OrderExceedsCap, what + " has order " + std::to_string(order) +
                                                        " which exceeds the cap " +
                                                        std::to_string(options.order_cap));
    }

    auto saturating_mul(std::uint64_t a, std::uint64_t b) -> std::uint64_t
    {
        if (a && b > std::numeric_limits<std::uint64_t>::max() / a)
            return std::numeric_limits<std::uint64_t>::max();
        return a * b;
    }

    auto construct_atom(const GroupAtom & atom, const GroupOptions & options) -> FiniteGroup
    {
        if (auto file = std::get_if<CayleyFileAtom>(&atom)) {
            auto g = load_cayley_file(file->path, options);
            GroupSpec spec{{atom}};
            auto check = g.provenance().associativity;
            return FiniteGroup::from_table(g.order(), {g.table().begin(), g.table().end()},
                                           Provenance{spec, render(spec), check}, options);
        }

        auto order = nominal_order(atom);
        check_cap(order, options, render(atom));
        auto n = static_cast<std::size_t>(order);

        Table table;
        if (auto c = std::get_if<CyclicAtom>(&atom))
            table = cyclic_table(c->n);
        else if (auto q = std::get_if<QuaternionAtom>(&atom))
            table = quaternion_table(q->k);
        else if (auto d = std::get_if<DihedralAtom>(&atom))
            table = dihedral_table(d->n);
        else if (auto e = std::get_if<ElementaryAbelianAtom>(&atom))
            table = elementary_abelian_table(e->p, n);
        else if (auto h = std::get_if<HeisenbergAtom>(&atom))
            table = heisenberg_table(h->p);

        GroupSpec spec{{atom}};
        return FiniteGroup::from_table(n, std::move(table), Provenance{spec, render(spec), {}}, options);
    }
}

auto direct_product(const FiniteGroup & left, const FiniteGroup & right, const GroupOptions & options)
    -> FiniteGroup
{
    std::size_t nl = left.order(), nr = right.order();
    check_cap(saturating_mul(nl, nr), options, left.provenance().label + "x" + right.provenance().label);
    std::size_t n = nl * nr;
    Table t(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto a = left.mul(static_cast<Element>(i / nr), static_cast<Element>(j / nr));
            auto b = right.mul(static_cast<Element>(i % nr), static_cast<Element>(j % nr));
            t[i * n + j] = static_cast<Element>(a * nr + b);
        }

    Provenance prov;
    prov.label = left.provenance().label + "x" + right.provenance().label;
    if (left.provenance().spec && right.provenance().spec) {
        GroupSpec spec = *left.provenance().spec;
        for (const auto & f : right.provenance().spec->factors)
            spec.factors.push_back(f);
        prov.label = render(spec);
        prov.spec = std::move(spec);
    }
    return FiniteGroup::from_table(n, std::move(t), std::move(prov), options);
}

auto construct_group(const GroupSpec & spec, const GroupOptions & options) -> FiniteGroup
{
    if (spec.factors.empty())
        throw Error(ErrorCode::MalformedToken, "group spec has no factors");

    // reject oversized products before building any table
    std::uint64_t total = 1;
    for (const auto & atom : spec.factors) {
        total = saturating_mul(total, nominal_order(atom));
    }
    check_cap(total, options, render(spec));

    auto group = construct_atom(spec.factors.front(), options);
    for (std::size_t i = 1; i < spec.factors.size(); ++i)
        group = direct_product(group, construct_atom(spec.factors[i], options), options);
    return group;
}

} // namespace epgdom
