#include "epgdom/error.hpp"
#include "epgdom/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace epgdom {

namespace
{
    auto labels_of(const Graph & graph, const VertexSet & set) -> std::vector<Element>
    {
        std::vector<Element> out;
        set.for_each([&](std::size_t v) { out.push_back(graph.label(v)); });
        std::sort(out.begin(), out.end());
        return out;
    }

    auto show(const FormulaOutcome & f) -> std::string
    {
        return f.is_number() ? std::to_string(f.value) : to_string(f.kind);
    }

    auto show(const DominationCertificate & c) -> std::string
    {
        return c.exists() ? std::to_string(c.size) : to_string(c.status);
    }

    /// Number vs Optimal(size), or NoTotalDominatingSet vs NoneExists.
    auto agrees(const FormulaOutcome & f, const DominationCertificate & c) -> bool
    {
        if (f.is_number())
            return c.exists() && c.size == f.value;
        if (f.kind == FormulaOutcome::Kind::NoTotalDominatingSet)
            return ! c.exists();
        return true;
    }

    auto solve_checked(ReportRow & row, const Graph & graph, DominationKind kind, const Budgets & budgets)
        -> DominationCertificate
    {
        auto cert = solve_minimum(graph, kind, SolverOptions{budgets.node_budget});
        if (cert.exists() && ! check_domination(graph, cert.witness, kind))
            row.hard_failures.push_back(std::string(to_string(kind)) + " witness failed re-validation");
        if (cert.exists() && cert.witness.count() != cert.size)
            row.hard_failures.push_back(std::string(to_string(kind)) + " witness size differs from reported size");
        return cert;
    }

    auto classify(ReportRow & row, const CatalogEntry & entry) -> void
    {
        if (row.verdict == Verdict::InputError || row.verdict == Verdict::Incomplete)
            return;
        if (! row.hard_failures.empty())
            row.unexpected = true;
        if (row.verdict == Verdict::Mismatch && ! entry.has_tag(tags::known_discrepancy))
            row.unexpected = true;
        if (entry.has_tag(tags::expect_no_total_dom) && row.verdict != Verdict::NoTotalDom) {
            row.unexpected = true;
            row.notes.push_back("tagged expect-no-total-dom but verdict is " + std::string(to_string(row.verdict)));
        }
        if (entry.has_tag(tags::known_discrepancy) && row.verdict != Verdict::Mismatch)
            row.notes.push_back("tagged known-discrepancy but formula and oracle agree");
    }
}

auto to_string(Verdict verdict) -> const char *
{
    switch (verdict) {
    case Verdict::Match: return "MATCH";
    case Verdict::Mismatch: return "MISMATCH";
    case Verdict::NotCovered: return "NOT_COVERED";
    case Verdict::NoTotalDom: return "NO_TOTAL_DOM";
    case Verdict::Incomplete: return "INCOMPLETE";
    case Verdict::InputError: return "INPUT_ERROR";
    }
    return "?";
}

auto verify_group(const CatalogEntry & entry, const VerifyOptions & options) -> ReportRow
{
    ReportRow row;
    row.spec = entry.label;
    row.tags = entry.tags;

    std::optional<FiniteGroup> constructed;
    try {
        constructed.emplace(construct_entry(entry, options.group));
    }
    catch (const Error & e) {
        row.verdict = Verdict::InputError;
        row.notes.push_back(e.what());
        return row;
    }
    const auto & group = *constructed;
    row.order = group.order();
    row.associativity = to_string(group.provenance().associativity);

    auto full = build_epg(group, EpgMode::Full);
    row.dom_graph = labels_of(full.graph(), graph_dominating_vertices(full));

    std::optional<NilpotentProfile> profile;
    try {
        profile = nilpotent_profile(group);
        row.nilpotent = true;
        row.profile = profile->summary();
    }
    catch (const NotNilpotentError & e) {
        row.nilpotent = false;
        row.profile = "NotNilpotent(p=" + std::to_string(e.prime()) + ")";
        row.notes.push_back(row.profile + ": formulas skipped, graph-only checks");
    }

    if (profile) {
        row.dom_costanzo = costanzo_dominating_vertices(group, *profile);
        row.dom_corollary = corollary_dom_prediction(*profile, group);
        row.dom_agree = *row.dom_costanzo == row.dom_graph && row.dom_corollary->elements == row.dom_graph;
        if (! row.dom_agree)
            row.hard_failures.push_back("dominating-vertex routes disagree (graph " +
                                        std::to_string(row.dom_graph.size()) + ", costanzo " +
                                        std::to_string(row.dom_costanzo->size()) + ", corollary " +
                                        std::to_string(row.dom_corollary->elements.size()) + ")");
    }

    auto proper = build_epg(group, EpgMode::Proper);
    const auto & pg = proper.graph();
    row.proper_vertices = pg.size();
    if (pg.size() + row.dom_graph.size() != group.order())
        row.hard_failures.push_back("proper graph vertex count is not |G| - |Dom|");
    row.components_actual = connected_components(pg).size();

    try {
        row.gamma_oracle = solve_checked(row, pg, DominationKind::Dominating, options.budgets);
        row.gamma_certificate = to_json(*row.gamma_oracle, pg);
        row.strong_oracle = solve_checked(row, pg, DominationKind::TotalDominating, options.budgets);
        row.strong_certificate = to_json(*row.strong_oracle, pg);
    }
    catch (const ResourceLimitError & e) {
        row.verdict = Verdict::Incomplete;
        row.notes.push_back(e.what());
    }

    if (row.gamma_oracle && row.gamma_oracle->size < row.components_actual)
        row.hard_failures.push_back("domination number below component count");
    if (row.strong_oracle && row.strong_oracle->exists() && row.strong_oracle->size < 2 * row.components_actual)
        row.hard_failures.push_back("total domination number below twice the component count");

    if (profile) {
        row.strong_formula = strong_domination_formula(*profile);
        row.gamma_formula = domination_formula(*profile);
        row.components_predicted = component_count_prediction(*profile);
        row.total_dom_predicate = total_dom_existence(*profile, group);

        if (row.components_predicted->is_number() && row.components_predicted->value != row.components_actual)
            row.mismatches.push_back("components: predicted " + show(*row.components_predicted) + ", actual " +
                                     std::to_string(row.components_actual));
        if (row.strong_oracle) {
            if (! agrees(*row.strong_formula, *row.strong_oracle))
                row.mismatches.push_back("strong domination: formula " + show(*row.strong_formula) + " [" +
                                         row.strong_formula->case_tag + "], oracle " + show(*row.strong_oracle));
            if (*row.total_dom_predicate != row.strong_oracle->exists())
                row.mismatches.push_back(std::string("total dominating set existence: predicate ") +
                                         (*row.total_dom_predicate ? "true" : "false") + ", oracle " +
                                         show(*row.strong_oracle));
        }
        if (row.gamma_oracle && ! agrees(*row.gamma_formula, *row.gamma_oracle))
            row.mismatches.push_back("domination: formula " + show(*row.gamma_formula) + " [" +
                                     row.gamma_formula->case_tag + "], oracle " + show(*row.gamma_oracle));

        if (row.verdict != Verdict::Incomplete) {
            if (! row.mismatches.empty())
                row.verdict = Verdict::Mismatch;
            else if (row.strong_formula->kind == FormulaOutcome::Kind::NoTotalDominatingSet)
                row.verdict = Verdict::NoTotalDom;
            else if (! row.strong_formula->is_number() && ! row.gamma_formula->is_number() &&
                     ! row.components_predicted->is_number())
                row.verdict = Verdict::NotCovered;
            else
                row.verdict = Verdict::Match;
        }
    }

    classify(row, entry);
    return row;
}

auto run_verify(const std::vector<CatalogEntry> & catalog, const VerifyOptions & options) -> VerificationReport
{
    auto start = std::chrono::steady_clock::now();

    VerificationReport report;
    report.seed = options.seed;
    report.budgets = options.budgets;
    report.order_cap = options.group.order_cap;
    report.rows.resize(catalog.size());

    auto row_options = options;
    row_options.group.sample_seed = options.seed;

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (auto i = next++; i < catalog.size(); i = next++)
            report.rows[i] = verify_group(catalog[i], row_options);
    };
    auto workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(catalog.size())));
    if (workers <= 1)
        work();
    else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }

    if (options.include_timing)
        report.wall_time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

auto exit_status(const VerificationReport & report) -> int
{
    bool unexpected = false, input_error = false, incomplete = false;
    for (const auto & row : report.rows) {
        unexpected = unexpected || row.unexpected;
        input_error = input_error || row.verdict == Verdict::InputError;
        incomplete = incomplete || row.verdict == Verdict::Incomplete;
    }
    if (unexpected)
        return 1;
    if (input_error)
        return 2;
    if (incomplete)
        return 3;
    return 0;
}

} // namespace epgdom
