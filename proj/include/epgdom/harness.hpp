#pragma once

#include "epgdom/domination.hpp"
#include "epgdom/finite_group.hpp"
#include "epgdom/formulas.hpp"
#include "epgdom/graph.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace epgdom {

inline constexpr const char * version = "1.0.0";

/// Tags understood by the verdict logic; other tags are carried through.
namespace tags {
inline constexpr const char * expect_no_total_dom = "expect-no-total-dom";
inline constexpr const char * known_discrepancy = "known-discrepancy";
inline constexpr const char * non_nilpotent = "non-nilpotent";
} // namespace tags

struct CatalogEntry
{
    std::string label;
    std::optional<GroupSpec> spec;
    std::string cayley_text; ///< used when spec is empty
    std::set<std::string> tags;

    auto has_tag(const std::string & tag) const -> bool { return tags.contains(tag); }
};

auto default_catalog() -> std::vector<CatalogEntry>;

/// One entry per non-blank line: `<spec> [#tags: a, b, ...]`. Lines whose
/// first non-space character is '#' are comments.
auto parse_catalog(std::string_view text) -> std::vector<CatalogEntry>;
auto parse_catalog_line(std::string_view line) -> std::optional<CatalogEntry>;
auto load_catalog(const std::string & path) -> std::vector<CatalogEntry>;

/// The symmetric group on three points as Cayley-table text.
auto s3_cayley_text() -> std::string;

auto construct_entry(const CatalogEntry & entry, const GroupOptions & options = {}) -> FiniteGroup;

struct Budgets
{
    std::uint64_t node_budget = default_node_budget;
};

struct VerifyOptions
{
    Budgets budgets;
    GroupOptions group;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    bool include_timing = false;
};

enum class Verdict { Match, Mismatch, NotCovered, NoTotalDom, Incomplete, InputError };

auto to_string(Verdict verdict) -> const char *;

struct ReportRow
{
    std::string spec;
    std::set<std::string> tags;
    std::size_t order = 0;
    std::string associativity;

    bool nilpotent = false;
    std::string profile; ///< summary, or the NotNilpotent message

    std::vector<Element> dom_graph;
    std::optional<std::vector<Element>> dom_costanzo;
    std::optional<DomPrediction> dom_corollary;
    bool dom_agree = true;

    std::size_t proper_vertices = 0;
    std::size_t components_actual = 0;
    std::optional<FormulaOutcome> components_predicted;

    std::optional<DominationCertificate> gamma_oracle;
    std::optional<FormulaOutcome> gamma_formula;
    std::optional<DominationCertificate> strong_oracle;
    std::optional<FormulaOutcome> strong_formula;
    std::optional<bool> total_dom_predicate;
    nlohmann::json gamma_certificate;  ///< with witness labels; null when unsolved
    nlohmann::json strong_certificate;

    Verdict verdict = Verdict::Match;
    std::vector<std::string> mismatches;    ///< formula vs oracle disagreements
    std::vector<std::string> hard_failures; ///< internal inconsistencies
    std::vector<std::string> notes;
    bool unexpected = false; ///< the verdict contradicts the catalog tags
};

struct VerificationReport
{
    std::vector<ReportRow> rows;
    std::uint64_t seed = 0;
    Budgets budgets;
    std::size_t order_cap = 0;
    std::optional<double> wall_time_ms;
};

auto verify_group(const CatalogEntry & entry, const VerifyOptions & options = {}) -> ReportRow;

/// Rows are produced in catalog order regardless of the worker count.
auto run_verify(const std::vector<CatalogEntry> & catalog, const VerifyOptions & options = {}) -> VerificationReport;

/// 0 success, 1 unexpected mismatch, 2 input error, 3 resource limit.
auto exit_status(const VerificationReport & report) -> int;

auto to_json(const VerificationReport & report) -> nlohmann::json;
auto to_csv(const VerificationReport & report) -> std::string;

struct SelftestFailure
{
    std::string family;
    DominationKind kind;
    std::size_t vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::string branch_and_bound;
    std::string brute_force;
};

struct SelftestSummary
{
    std::size_t graphs = 0;
    std::size_t comparisons = 0;
    std::map<std::string, std::size_t> per_family;
    std::optional<SelftestFailure> failure;

    auto passed() const -> bool { return ! failure; }
};

/// Random graph families used by the self-test; exposed so tests can reuse them.
auto random_graph(std::uint64_t seed, std::size_t n, double density) -> Graph;
auto random_clique_union(std::uint64_t seed, std::size_t n) -> Graph;

/// Compares solve_minimum with brute_force_minimum for both kinds on
/// Erdos-Renyi graphs (densities 0.1, 0.3, 0.6) and clique unions, plus the
/// single-vertex graph and K2.
auto solver_selftest(std::uint64_t seed, std::size_t trials, std::size_t max_n) -> SelftestSummary;

auto describe(const SelftestFailure & failure) -> std::string;

} // namespace epgdom
