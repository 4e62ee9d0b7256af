#include "epgdom/formulas.hpp"

#include "epgdom/error.hpp"

#include <algorithm>

namespace epgdom {

namespace
{
    auto validate(const NilpotentProfile & profile) -> void
    {
        auto invalid = [](const std::string & why) { return Error(ErrorCode::ProfileInvalid, "invalid profile: " + why); };

        std::size_t quaternions = 0;
        for (std::size_t i = 0; i < profile.factors.size(); ++i) {
            const auto & f = profile.factors[i];
            if (! is_prime(f.prime) || f.exponent == 0)
                throw invalid("factor with prime " + std::to_string(f.prime) + " and exponent " +
                              std::to_string(f.exponent));
            if (i && profile.factors[i - 1].prime >= f.prime)
                throw invalid("factors not sorted by distinct primes");
            switch (f.classification) {
            case SylowClass::GeneralizedQuaternion:
                ++quaternions;
                if (f.prime != 2 || ! f.k || *f.k < 3 || *f.k != f.exponent)
                    throw invalid("quaternion factor must be a 2-group of order 2^k, k >= 3");
                break;
            case SylowClass::Neither:
                if (f.r == 0)
                    throw invalid("non-cyclic factor with r = 0");
                if (f.exponent < 2)
                    throw invalid("a group of prime order is cyclic");
                break;
            case SylowClass::Cyclic:
                break;
            }
        }
        if (quaternions > 1)
            throw invalid("more than one quaternion factor");
    }

    auto gather(const NilpotentProfile & profile) -> FormulaInputs
    {
        FormulaInputs in;
        for (const auto & f : profile.factors) {
            switch (f.classification) {
            case SylowClass::Cyclic: in.has_cyclic = true; break;
            case SylowClass::GeneralizedQuaternion:
                in.has_quaternion = true;
                in.k = f.k;
                break;
            case SylowClass::Neither:
                ++in.m;
                in.r.push_back(f.r);
                if (f.isolated_involution)
                    in.isolated_involution = true;
                break;
            }
        }
        std::sort(in.r.begin(), in.r.end());
        return in;
    }

    auto number(std::uint64_t v, std::string tag, const FormulaInputs & in) -> FormulaOutcome
    {
        FormulaOutcome o;
        o.kind = FormulaOutcome::Kind::Number;
        o.value = v;
        o.discrepancy_flag = is_known_discrepancy(tag);
        o.case_tag = std::move(tag);
        o.inputs = in;
        return o;
    }

    auto not_covered(std::string reason, const FormulaInputs & in) -> FormulaOutcome
    {
        FormulaOutcome o;
        o.kind = FormulaOutcome::Kind::NotCovered;
        o.reason = std::move(reason);
        o.case_tag = "not-covered";
        o.inputs = in;
        return o;
    }

    auto min_r(const FormulaInputs & in) -> std::uint64_t { return *std::min_element(in.r.begin(), in.r.end()); }

    auto pow2(unsigned e) -> std::uint64_t { return std::uint64_t{1} << e; }
}

auto to_string(FormulaOutcome::Kind kind) -> const char *
{
    switch (kind) {
    case FormulaOutcome::Kind::Number: return "Number";
    case FormulaOutcome::Kind::NoTotalDominatingSet: return "NoTotalDominatingSet";
    case FormulaOutcome::Kind::NotCovered: return "NotCovered";
    }
    return "?";
}

auto is_known_discrepancy(const std::string & case_tag) -> bool { return case_tag == "Thm-Zn-m1"; }

auto total_dom_existence(const NilpotentProfile & profile, const FiniteGroup & group) -> bool
{
    if (profile.factors.size() != 1 || profile.factors.front().prime != 2)
        return true;

    // involutions that are some power of an element other than themselves
    std::vector<char> covered(group.order(), 0);
    for (const auto & c : distinct_cyclic_subgroups(group)) {
        if (c.order <= 2)
            continue;
        for (auto e : c.elements)
            if (group.element_order(e) == 2)
                covered[e] = 1;
    }
    for (Element g = 0; g < group.order(); ++g)
        if (group.element_order(g) == 2 && ! covered[g])
            return false;
    return true;
}

auto strong_domination_formula(const NilpotentProfile & profile) -> FormulaOutcome
{
    validate(profile);
    auto in = gather(profile);

    if (in.has_quaternion) {
        auto k = *in.k;
        if (in.m == 0)
            return number(pow2(k - 1) + 2, "Thm-Q-trivialG1", in);
        auto v = std::min(min_r(in), pow2(k - 2) + 1) + 1;
        return number(v, "Thm-Q-G1", in);
    }
    if (in.m == 0)
        return number(0, "Thm-Zn", in);

    if (! in.has_cyclic) {
        if (in.m >= 2) {
            auto v = min_r(in) + 1;
            return number(v, "Thm-G1-m2", in);
        }
        // a single non-cyclic Sylow factor: G is a p-group
        if (in.isolated_involution) {
            FormulaOutcome o;
            o.kind = FormulaOutcome::Kind::NoTotalDominatingSet;
            o.case_tag = "Thm-existence";
            o.inputs = std::move(in);
            return o;
        }
        auto v = 2 * in.r.front();
        return number(v, "Thm-pgroup", in);
    }

    auto v = min_r(in) + 1;
    return number(v, in.m == 1 ? "Thm-Zn-m1" : "Thm-Zn-G1", in);
}

auto domination_formula(const NilpotentProfile & profile) -> FormulaOutcome
{
    validate(profile);
    auto in = gather(profile);
    if (! in.has_quaternion)
        return not_covered("no closed form for the domination number without a quaternion Sylow factor",
                           in);
    auto k = *in.k;
    if (in.m == 0)
        return number(pow2(k - 2) + 1, "Thm-Q-trivialG1", in);
    auto v = std::min(min_r(in), pow2(k - 2) + 1);
    return number(v, "Thm-Q-G1", in);
}

auto component_count_prediction(const NilpotentProfile & profile) -> FormulaOutcome
{
    validate(profile);
    auto in = gather(profile);
    if (! in.has_quaternion && in.m == 1) {
        auto v = in.r.front();
        return number(v, in.has_cyclic ? "Lemma-pgroup-Zn" : "Lemma-pgroup", in);
    }
    if (in.has_quaternion && in.m == 0 && ! in.has_cyclic)
        return number(pow2(*in.k - 2) + 1, "Lemma-Q", in);
    return not_covered("no component-count lemma for this shape", in);
}

auto to_json(const FormulaOutcome & outcome) -> nlohmann::json
{
    nlohmann::json j;
    if (outcome.is_number())
        j["value"] = outcome.value;
    else
        j["special"] = to_string(outcome.kind);
    if (outcome.kind == FormulaOutcome::Kind::NotCovered)
        j["reason"] = outcome.reason;
    j["case_tag"] = outcome.case_tag;
    nlohmann::json in;
    in["r"] = outcome.inputs.r;
    in["k"] = outcome.inputs.k ? nlohmann::json(*outcome.inputs.k) : nlohmann::json(nullptr);
    in["m"] = outcome.inputs.m;
    in["has_cyclic"] = outcome.inputs.has_cyclic;
    in["has_quaternion"] = outcome.inputs.has_quaternion;
    in["isolated_involution"] = outcome.inputs.isolated_involution;
    j["inputs_used"] = std::move(in);
    j["discrepancy_flag"] = outcome.discrepancy_flag;
    return j;
}

} // namespace epgdom
