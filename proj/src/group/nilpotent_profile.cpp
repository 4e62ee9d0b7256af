#include "epgdom/nilpotent_profile.hpp"

#include "epgdom/error.hpp"

#include <algorithm>
#include <utility>
#include <sstream>

namespace epgdom {

namespace
{
    auto is_power_of(std::uint64_t n, std::uint64_t p) -> bool
    {
        while (n % p == 0)
            n /= p;
        return n == 1;
    }

    auto ipow(std::uint64_t base, unsigned e) -> std::uint64_t
    {
        std::uint64_t v = 1;
        while (e--)
            v *= base;
        return v;
    }

    /// Inverse of a modulo m, for gcd(a, m) = 1.
    auto mod_inverse(std::uint64_t a, std::uint64_t m) -> std::uint64_t
    {
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
        while (new_r) {
            auto q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        if (t < 0)
            t += static_cast<std::int64_t>(m);
        return static_cast<std::uint64_t>(t);
    }
}

auto to_string(SylowClass c) -> const char *
{
    switch (c) {
    case SylowClass::Cyclic: return "Cyclic";
    case SylowClass::GeneralizedQuaternion: return "GeneralizedQuaternion";
    case SylowClass::Neither: return "Neither";
    }
    return "?";
}

auto SylowFactor::order() const -> std::uint64_t { return ipow(prime, exponent); }

auto NilpotentProfile::quaternion() const -> const SylowFactor *
{
    for (const auto & f : factors)
        if (f.classification == SylowClass::GeneralizedQuaternion)
            return &f;
    return nullptr;
}

auto NilpotentProfile::order() const -> std::uint64_t
{
    std::uint64_t o = 1;
    for (const auto & f : factors)
        o *= f.order();
    return o;
}

auto NilpotentProfile::summary() const -> std::string
{
    if (factors.empty())
        return "trivial";
    std::ostringstream out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto & f = factors[i];
        out << (i ? " " : "") << f.prime << "^" << f.exponent << ":";
        switch (f.classification) {
        case SylowClass::Cyclic: out << "C"; break;
        case SylowClass::GeneralizedQuaternion: out << "Q(k=" << *f.k << ")"; break;
        case SylowClass::Neither: out << "N(r=" << f.r << ")"; break;
        }
    }
    return out.str();
}

auto factorize(std::uint64_t n) -> std::vector<std::pair<std::uint64_t, unsigned>>
{
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

auto p_part(const FiniteGroup & group, Element g, std::uint64_t p) -> Element
{
    auto o = group.element_order(g);
    std::uint64_t pa = 1;
    while (o % (pa * p) == 0)
        pa *= p;
    if (pa == 1)
        return group.identity();
    auto rest = o / pa;
    // exponent congruent to 1 mod p^a and 0 mod rest
    auto e = (rest * mod_inverse(rest % pa, pa)) % o;
    return group.power(g, e);
}

auto count_order_p_subgroups(const SylowFactor & factor) -> std::uint64_t
{
    auto it = factor.order_census.find(factor.prime);
    if (it == factor.order_census.end())
        return 0;
    return it->second / (factor.prime - 1);
}

auto finalize_profile(std::vector<SylowFactor> factors) -> NilpotentProfile
{
    NilpotentProfile profile;
    std::sort(factors.begin(), factors.end(),
              [](const SylowFactor & a, const SylowFactor & b) { return a.prime < b.prime; });
    profile.factors = std::move(factors);
    for (const auto & f : profile.factors) {
        switch (f.classification) {
        case SylowClass::Cyclic: profile.n_cyclic *= f.order(); break;
        case SylowClass::GeneralizedQuaternion: profile.has_quaternion = true; break;
        case SylowClass::Neither:
            ++profile.m;
            profile.r_sorted.push_back(f.r);
            break;
        }
    }
    std::sort(profile.r_sorted.begin(), profile.r_sorted.end());
    return profile;
}

auto nilpotent_profile(const FiniteGroup & group) -> NilpotentProfile
{
    std::vector<SylowFactor> factors;
    std::vector<char> member(group.order());

    for (auto [p, t] : factorize(group.order())) {
        SylowFactor f;
        f.prime = p;
        f.exponent = t;
        for (Element g = 0; g < group.order(); ++g)
            if (is_power_of(group.element_order(g), p))
                f.elements.push_back(g);

        if (f.elements.size() != f.order())
            throw NotNilpotentError(p);
        std::fill(member.begin(), member.end(), 0);
        for (auto g : f.elements)
            member[g] = 1;
        for (auto a : f.elements)
            for (auto b : f.elements)
                if (! member[group.mul(a, b)])
                    throw NotNilpotentError(p);

        for (auto g : f.elements)
            ++f.order_census[group.element_order(g)];
        f.r = count_order_p_subgroups(f);

        bool cyclic = f.order_census.contains(f.order());
        auto involutions = p == 2 && f.order_census.contains(2) ? f.order_census.at(2) : 0;
        if (cyclic)
            f.classification = SylowClass::Cyclic;
        else if (p == 2 && involutions == 1) {
            f.classification = SylowClass::GeneralizedQuaternion;
            f.k = t;
        }
        else
            f.classification = SylowClass::Neither;

        if (p == 2) {
            std::vector<char> square(group.order(), 0);
            for (auto g : f.elements)
                square[group.mul(g, g)] = 1;
            for (auto g : f.elements)
                if (group.element_order(g) == 2 && ! square[g])
                    f.isolated_involution = true;
        }

        factors.push_back(std::move(f));
    }

    return finalize_profile(std::move(factors));
}

} // namespace epgdom
