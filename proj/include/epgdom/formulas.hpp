#pragma once

#include "epgdom/finite_group.hpp"
#include "epgdom/nilpotent_profile.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace epgdom {

/// What a closed-form evaluation consumed.
struct FormulaInputs
{
    std::vector<std::uint64_t> r; ///< r of the Neither factors, sorted
    std::optional<unsigned> k;    ///< quaternion parameter
    std::size_t m = 0;
    bool has_cyclic = false;
    bool has_quaternion = false;
    bool isolated_involution = false;
};

struct FormulaOutcome
{
    enum class Kind { Number, NoTotalDominatingSet, NotCovered };

    Kind kind = Kind::NotCovered;
    std::uint64_t value = 0; ///< meaningful for Number only
    std::string reason;      ///< meaningful for NotCovered only
    std::string case_tag;
    FormulaInputs inputs;
    /// The branch is registered as disagreeing with the exact solver.
    bool discrepancy_flag = false;

    auto is_number() const -> bool { return kind == Kind::Number; }
};

auto to_string(FormulaOutcome::Kind kind) -> const char *;

/// Case tags whose printed value is known to disagree with exhaustive search.
auto is_known_discrepancy(const std::string & case_tag) -> bool;

/// False iff G is a 2-group with an involution a lying in no cyclic subgroup
/// <x> with x != a; scans the cyclic subgroups of G directly.
auto total_dom_existence(const NilpotentProfile & profile, const FiniteGroup & group) -> bool;

/// Strong (total) domination number of the proper enhanced power graph.
auto strong_domination_formula(const NilpotentProfile & profile) -> FormulaOutcome;

/// Domination number of the proper graph; only groups with a quaternion
/// Sylow factor are covered.
auto domination_formula(const NilpotentProfile & profile) -> FormulaOutcome;

/// Number of components of the proper graph where a closed form is known.
auto component_count_prediction(const NilpotentProfile & profile) -> FormulaOutcome;

/// {value | special, case_tag, inputs_used, discrepancy_flag}
auto to_json(const FormulaOutcome & outcome) -> nlohmann::json;

} // namespace epgdom
