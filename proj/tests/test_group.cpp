#include "epgdom/error.hpp"
#include "epgdom/finite_group.hpp"
#include "epgdom/nilpotent_profile.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace epgdom;

namespace
{
    auto build(const std::string & spec, const GroupOptions & options = {}) -> FiniteGroup
    {
        return construct_group(parse_group_spec(spec), options);
    }

    auto code_of(auto && f) -> ErrorCode
    {
        try {
            f();
        }
        catch (const Error & e) {
            return e.code();
        }
        FAIL("expected an error");
        return ErrorCode::Io;
    }

    const char * small_groups[] = {"Z1", "Z6", "Z12", "E2^2", "Z4xZ2", "D4", "D5", "E3^2", "Z8", "H3",
                                   "Q8", "Q16", "Z5xQ8", "E3^2xZ2", "E2^2xE3^2", "Z2xD4"};

    /// Brute-force order: the least m >= 1 with g^m = e.
    auto order_by_iteration(const FiniteGroup & g, Element x) -> std::uint64_t
    {
        std::uint64_t m = 1;
        for (Element y = x; y != g.identity(); y = g.mul(y, x))
            ++m;
        return m;
    }
}

TEST_CASE("spec parser accepts each atom")
{
    CHECK(parse_group_spec("Z6") == GroupSpec{{CyclicAtom{6}}});
    CHECK(parse_group_spec("E3^2xQ8") == GroupSpec{{ElementaryAbelianAtom{3, 2}, QuaternionAtom{3}}});
    CHECK(parse_group_spec("D4xH5") == GroupSpec{{DihedralAtom{4}, HeisenbergAtom{5}}});
    CHECK(parse_group_spec("  Q32 ") == GroupSpec{{QuaternionAtom{5}}});
    CHECK(parse_group_spec("file:/tmp/s3.txt") == GroupSpec{{CayleyFileAtom{"/tmp/s3.txt"}}});
    CHECK(parse_group_spec("file:/tmp/xx.txtxZ3") == GroupSpec{{CayleyFileAtom{"/tmp/xx.txt"}, CyclicAtom{3}}});
    CHECK(parse_group_spec("Z2xfile:a.txt") == GroupSpec{{CyclicAtom{2}, CayleyFileAtom{"a.txt"}}});
}

TEST_CASE("spec parser errors")
{
    CHECK(code_of([] { parse_group_spec("Q7"); }) == ErrorCode::InvalidQuaternionOrder);
    CHECK(code_of([] { parse_group_spec("Q4"); }) == ErrorCode::InvalidQuaternionOrder);
    CHECK(code_of([] { parse_group_spec("Q0"); }) == ErrorCode::InvalidQuaternionOrder);
    CHECK(code_of([] { parse_group_spec("H4"); }) == ErrorCode::InvalidHeisenbergPrime);
    CHECK(code_of([] { parse_group_spec("H2"); }) == ErrorCode::InvalidHeisenbergPrime);
    CHECK(code_of([] { parse_group_spec("H9"); }) == ErrorCode::InvalidHeisenbergPrime);
    CHECK(code_of([] { parse_group_spec("E4^2"); }) == ErrorCode::NonPrimeBase);
    CHECK(code_of([] { parse_group_spec("E1^1"); }) == ErrorCode::NonPrimeBase);
    CHECK(code_of([] { parse_group_spec("Z0"); }) == ErrorCode::InvalidParameter);
    CHECK(code_of([] { parse_group_spec("D2"); }) == ErrorCode::InvalidParameter);
    for (auto bad : {"", "Z", "Zx", "Z3x", "xZ3", "Y3", "E3", "E3^", "Z06", "Z3xxZ2", "Z3 x Z2", "file:", "Z-1"})
        CHECK_MESSAGE(code_of([&] { parse_group_spec(bad); }) == ErrorCode::MalformedToken, bad);
}

TEST_CASE("render inverts parse on canonical strings")
{
    std::mt19937_64 rng(7);
    const std::uint64_t primes[] = {2, 3, 5, 7, 11};
    for (int trial = 0; trial < 300; ++trial) {
        GroupSpec spec;
        auto factors = 1 + rng() % 4;
        for (std::uint64_t i = 0; i < factors; ++i) {
            switch (rng() % 6) {
            case 0: spec.factors.push_back(CyclicAtom{1 + rng() % 100}); break;
            case 1: spec.factors.push_back(QuaternionAtom{static_cast<unsigned>(3 + rng() % 8)}); break;
            case 2: spec.factors.push_back(DihedralAtom{3 + rng() % 50}); break;
            case 3:
                spec.factors.push_back(ElementaryAbelianAtom{primes[rng() % 5], static_cast<unsigned>(1 + rng() % 5)});
                break;
            case 4: spec.factors.push_back(HeisenbergAtom{primes[1 + rng() % 4]}); break;
            default: spec.factors.push_back(CayleyFileAtom{"/data/t" + std::to_string(rng() % 9) + ".txt"}); break;
            }
        }
        auto text = render(spec);
        CHECK(parse_group_spec(text) == spec);
        CHECK(render(parse_group_spec(text)) == text);
    }
}

TEST_CASE("cyclic construction")
{
    auto z6 = build("Z6");
    CHECK(z6.order() == 6);
    std::vector<std::uint64_t> orders(z6.element_orders().begin(), z6.element_orders().end());
    CHECK(orders == std::vector<std::uint64_t>{1, 6, 3, 2, 3, 6});
    CHECK(build("Z1").order() == 1);
}

TEST_CASE("quaternion construction satisfies its presentation")
{
    for (unsigned k = 3; k <= 7; ++k) {
        auto q = construct_group(GroupSpec{{QuaternionAtom{k}}});
        std::size_t half = std::size_t{1} << (k - 1);
        REQUIRE(q.order() == 2 * half);
        Element x = 1, y = static_cast<Element>(half);
        CHECK(q.element_order(x) == half);
        CHECK(q.element_order(y) == 4);
        CHECK(q.power(x, half / 2) == q.mul(y, y));
        CHECK(q.mul(q.mul(y, x), q.inverse(y)) == q.inverse(x));
        auto involutions = std::count(q.element_orders().begin(), q.element_orders().end(), 2u);
        CHECK(involutions == 1);
    }
}

TEST_CASE("klein group and dihedral groups")
{
    auto v4 = construct_group(GroupSpec{{CyclicAtom{2}, CyclicAtom{2}}});
    CHECK(v4.order() == 4);
    CHECK(std::count(v4.element_orders().begin(), v4.element_orders().end(), 2u) == 3);

    auto d4 = build("D4");
    CHECK(d4.order() == 8);
    CHECK(! d4.is_abelian());
    CHECK(std::count(d4.element_orders().begin(), d4.element_orders().end(), 2u) == 5);

    auto h3 = build("H3");
    CHECK(h3.order() == 27);
    CHECK(std::count(h3.element_orders().begin(), h3.element_orders().end(), 3u) == 26);
}

TEST_CASE("group axioms hold exhaustively on constructed groups")
{
    for (auto spec : small_groups) {
        CAPTURE(spec);
        auto g = build(spec);
        CHECK(g.provenance().associativity == AssociativityCheck::Exhaustive);
        CHECK(g.provenance().label == spec);
        bool ok = true;
        for (Element a = 0; a < g.order(); ++a) {
            ok = ok && g.mul(0, a) == a && g.mul(a, 0) == a;
            ok = ok && g.mul(a, g.inverse(a)) == 0 && g.mul(g.inverse(a), a) == 0;
            ok = ok && g.order() % g.element_order(a) == 0;
            ok = ok && g.element_order(a) == order_by_iteration(g, a);
            for (Element b = 0; b < g.order(); ++b)
                for (Element c = 0; c < g.order(); ++c)
                    ok = ok && g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
        }
        CHECK(ok);
        CHECK(g.element_order(0) == 1);
    }
}

TEST_CASE("direct product orders are lcms of component orders")
{
    std::mt19937_64 rng(3);
    const char * parts[] = {"Z4", "Z6", "Q8", "D3", "E3^2", "Z5"};
    for (int trial = 0; trial < 12; ++trial) {
        auto a = build(parts[rng() % 6]), b = build(parts[rng() % 6]);
        auto p = direct_product(a, b);
        REQUIRE(p.order() == a.order() * b.order());
        for (Element i = 0; i < a.order(); ++i)
            for (Element j = 0; j < b.order(); ++j)
                CHECK(p.element_order(static_cast<Element>(i * b.order() + j)) ==
                      std::lcm(a.element_order(i), b.element_order(j)));
    }
}

TEST_CASE("order cap")
{
    CHECK(code_of([] { build("Z5000"); }) == ErrorCode::OrderExceedsCap);
    CHECK(code_of([] { build("Z64xZ65"); }) == ErrorCode::OrderExceedsCap);
    CHECK(code_of([] { build("H17"); }) == ErrorCode::OrderExceedsCap);
    CHECK(code_of([] { build("Z10", GroupOptions{.order_cap = 8}); }) == ErrorCode::OrderExceedsCap);
    CHECK(build("Z4096").order() == 4096);
}

TEST_CASE("large groups use sampled associativity")
{
    auto g = build("Z600");
    CHECK(g.provenance().associativity == AssociativityCheck::Sampled);
    CHECK(build("Z512").provenance().associativity == AssociativityCheck::Exhaustive);
}

TEST_CASE("cayley import")
{
    auto z3 = from_cayley_table("3\n0 1 2\n1 2 0\n2 0 1\n");
    CHECK(z3.order() == 3);
    CHECK(z3.provenance().label == "imported");
    CHECK(! z3.provenance().spec);

    auto s3 = from_cayley_table("# S3\n6\n0 1 2 3 4 5\n1 2 0 4 5 3\n2 0 1 5 3 4\n"
                                "3 5 4 0 2 1\n4 3 5 1 0 2\n5 4 3 2 1 0\n");
    CHECK(s3.order() == 6);
    CHECK(! s3.is_abelian());

    // round trip through the text format
    auto q8 = build("Q8");
    auto again = from_cayley_table(to_cayley_text(q8));
    CHECK(std::equal(q8.table().begin(), q8.table().end(), again.table().begin(), again.table().end()));
}

TEST_CASE("cayley import relabels the identity to 0")
{
    // Z3 with the identity stored as element 2
    auto g = from_cayley_table("3\n1 2 0\n2 0 1\n0 1 2\n");
    CHECK(g.identity() == 0);
    for (Element a = 0; a < 3; ++a)
        CHECK(g.mul(0, a) == a);
    CHECK(g.element_order(0) == 1);
    CHECK(g.element_order(1) == 3);
    CHECK(g.element_order(2) == 3);
}

TEST_CASE("cayley import rejects non-groups")
{
    auto reason = [](const std::string & text) -> std::string {
        try {
            from_cayley_table(text);
        }
        catch (const NotAGroupError & e) {
            return e.reason();
        }
        return "accepted";
    };
    // max(a, b) mod 4: identity 0 but nothing inverts 3
    CHECK(reason("4\n0 1 2 3\n1 1 2 3\n2 2 2 3\n3 3 3 3\n").starts_with("missing inverse"));
    CHECK(reason("2\n0 0\n0 0\n") == "no identity");
    // a Latin square loop of order 5 with every element self-inverse
    auto loop = reason("5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n");
    CHECK(loop.starts_with("non-associative triple ("));
}

TEST_CASE("sampled validation still rejects a large non-associative table")
{
    // the order-5 loop times Z120, too big for the exhaustive check
    const Element loop[5][5] = {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    std::size_t m = 120, n = 5 * m;
    std::vector<Element> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t[i * n + j] = static_cast<Element>(loop[i / m][j / m] * m + (i % m + j % m) % m);
    CHECK_THROWS_AS(FiniteGroup::from_table(n, t, Provenance{}), NotAGroupError);
}

TEST_CASE("cayley import rejects malformed text")
{
    for (auto bad : {"", "# only a comment\n", "2 2\n0 1\n1 0\n", "2\n0 1\n", "2\n0 1\n1 0\n0 1\n", "2\n0 1\n1 2\n",
                     "2\n0 1\n1 x\n", "2\n0 1 0\n1 0\n", "0\n"})
        CHECK_MESSAGE(code_of([&] { from_cayley_table(bad); }) == ErrorCode::MalformedFile, bad);
    CHECK(code_of([] { load_cayley_file("/nonexistent/table.txt"); }) == ErrorCode::Io);
}

TEST_CASE("cyclic subgroups")
{
    auto z6 = build("Z6");
    CHECK(cyclic_subgroup(z6, 1).elements == std::vector<Element>{0, 1, 2, 3, 4, 5});
    CHECK(cyclic_subgroup(z6, 0).elements == std::vector<Element>{0});

    auto q8 = build("Q8");
    auto inv = cyclic_subgroup(q8, 2);
    CHECK(q8.element_order(2) == 2);
    CHECK(inv.elements == std::vector<Element>{0, 2});
    CHECK(inv.order == 2);

    CHECK(distinct_cyclic_subgroups(z6).size() == 4);
    CHECK(distinct_cyclic_subgroups(q8).size() == 5);
    CHECK(distinct_cyclic_subgroups(build("E3^2")).size() == 5);

    CHECK(maximal_cyclic_subgroups(z6).size() == 1);
    CHECK(maximal_cyclic_subgroups(q8).size() == 3);
    CHECK(maximal_cyclic_subgroups(build("E3^2")).size() == 4);
}

TEST_CASE("distinct cyclic subgroups match the powers oracle")
{
    for (auto spec : small_groups) {
        CAPTURE(spec);
        auto g = build(spec);
        auto subgroups = distinct_cyclic_subgroups(g);
        std::set<std::set<Element>> sets;
        for (const auto & c : subgroups) {
            CHECK(c.elements.size() == c.order);
            CHECK(c.order == g.element_order(c.generator));
            sets.emplace(c.elements.begin(), c.elements.end());
        }
        CHECK(sets == oracle::cyclic_subgroup_sets(g));
        CHECK(std::is_sorted(subgroups.begin(), subgroups.end(), [](const auto & a, const auto & b) {
            return std::tie(a.order, a.elements) < std::tie(b.order, b.elements);
        }));
    }
}

TEST_CASE("center")
{
    CHECK(center(build("Z12")).size() == 12);
    CHECK(center(build("Q8")) == std::vector<Element>{0, 2});
    CHECK(center(build("H3")).size() == 3);
    CHECK(center(build("D4")).size() == 2);
}

TEST_CASE("nilpotent profile of cyclic and mixed groups")
{
    auto z12 = nilpotent_profile(build("Z12"));
    REQUIRE(z12.factors.size() == 2);
    CHECK(z12.factors[0].prime == 2);
    CHECK(z12.factors[0].classification == SylowClass::Cyclic);
    CHECK(z12.factors[1].prime == 3);
    CHECK(z12.factors[1].classification == SylowClass::Cyclic);
    CHECK(z12.n_cyclic == 12);
    CHECK(z12.m == 0);

    auto mixed = nilpotent_profile(build("E3^2xQ8"));
    REQUIRE(mixed.factors.size() == 2);
    CHECK(mixed.factors[0].classification == SylowClass::GeneralizedQuaternion);
    CHECK(mixed.factors[0].k == 3u);
    CHECK(mixed.factors[1].classification == SylowClass::Neither);
    CHECK(mixed.factors[1].r == 4);
    CHECK(mixed.has_quaternion);
    CHECK(mixed.m == 1);
    CHECK(mixed.r_sorted == std::vector<std::uint64_t>{4});
    CHECK(mixed.order() == 72);

    auto trivial = nilpotent_profile(build("Z1"));
    CHECK(trivial.factors.empty());
}

TEST_CASE("non-nilpotent groups are rejected with the witness prime")
{
    auto s3 = from_cayley_table("6\n0 1 2 3 4 5\n1 2 0 4 5 3\n2 0 1 5 3 4\n3 5 4 0 2 1\n4 3 5 1 0 2\n5 4 3 2 1 0\n");
    try {
        nilpotent_profile(s3);
        FAIL("S3 accepted");
    }
    catch (const NotNilpotentError & e) {
        CHECK(e.prime() == 2);
    }
    CHECK_THROWS_AS(nilpotent_profile(build("D3")), NotNilpotentError);
    CHECK_THROWS_AS(nilpotent_profile(build("D5")), NotNilpotentError);
}

TEST_CASE("order-p subgroup counts")
{
    auto count = [](const std::string & spec) {
        auto p = nilpotent_profile(build(spec));
        REQUIRE(p.factors.size() == 1);
        return count_order_p_subgroups(p.factors.front());
    };
    CHECK(count("E3^2") == 4);
    CHECK(count("Q8") == 1);
    CHECK(count("Z8") == 1);
    CHECK(count("H3") == 13);
    CHECK(count("D4") == 5);
}

TEST_CASE("Sylow factor invariants and the census cross-check")
{
    for (auto spec : small_groups) {
        CAPTURE(spec);
        auto g = build(spec);
        NilpotentProfile profile;
        try {
            profile = nilpotent_profile(g);
        }
        catch (const NotNilpotentError &) {
            continue;
        }
        CHECK(profile.order() == g.order());
        auto subgroups = distinct_cyclic_subgroups(g);
        std::size_t quaternions = 0;
        for (const auto & f : profile.factors) {
            CHECK(f.elements.size() == f.order());
            auto order_p = std::count_if(f.elements.begin(), f.elements.end(),
                                         [&](Element x) { return g.element_order(x) == f.prime; });
            CHECK(f.r * (f.prime - 1) == static_cast<std::uint64_t>(order_p));
            auto enumerated = std::count_if(subgroups.begin(), subgroups.end(),
                                            [&](const CyclicSubgroup & c) { return c.order == f.prime; });
            CHECK(f.r == static_cast<std::uint64_t>(enumerated));
            CHECK(f.k.has_value() == (f.classification == SylowClass::GeneralizedQuaternion));
            quaternions += f.classification == SylowClass::GeneralizedQuaternion;
        }
        CHECK(quaternions <= 1);
    }
}

TEST_CASE("generalized quaternion dichotomy on 2-groups")
{
    for (auto spec : {"Q8", "Q16", "Q32", "Q64", "Q128"}) {
        auto p = nilpotent_profile(build(spec));
        CHECK_MESSAGE(p.factors.front().classification == SylowClass::GeneralizedQuaternion, spec);
    }
    for (auto spec : {"D4", "D8", "D16", "E2^2", "E2^3", "E2^4", "Z4xZ2", "Z2xQ8", "Z4xZ4"}) {
        auto p = nilpotent_profile(build(spec));
        CHECK_MESSAGE(p.factors.front().classification == SylowClass::Neither, spec);
    }
}

TEST_CASE("isolated involutions")
{
    auto isolated = [](const std::string & spec) {
        return nilpotent_profile(build(spec)).factors.front().isolated_involution;
    };
    CHECK(isolated("E2^2"));
    CHECK(isolated("Z4xZ2"));
    CHECK(isolated("D4"));
    CHECK(! isolated("Q8"));
    CHECK(! isolated("Z8"));
    CHECK(! isolated("Z4xZ4"));
    CHECK(! isolated("E3^2"));
}

TEST_CASE("p-parts multiply back to the element")
{
    for (auto spec : {"Z12", "Z15xQ8", "E3^2xZ4", "E2^2xE3^2"}) {
        auto g = build(spec);
        auto profile = nilpotent_profile(g);
        for (Element x = 0; x < g.order(); ++x) {
            Element product = 0;
            for (const auto & f : profile.factors) {
                auto part = p_part(g, x, f.prime);
                CHECK(std::binary_search(f.elements.begin(), f.elements.end(), part));
                product = g.mul(product, part);
            }
            CHECK(product == x);
        }
    }
}
