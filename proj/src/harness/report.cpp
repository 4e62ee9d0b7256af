#include "epgdom/harness.hpp"

#include <sstream>

namespace epgdom {

namespace
{
    auto formula_json(const std::optional<FormulaOutcome> & f) -> nlohmann::json
    {
        return f ? to_json(*f) : nlohmann::json(nullptr);
    }

    auto oracle_cell(const std::optional<DominationCertificate> & c) -> std::string
    {
        if (! c)
            return "";
        return c->exists() ? std::to_string(c->size) : "none";
    }

    auto formula_cell(const std::optional<FormulaOutcome> & f) -> std::string
    {
        if (! f)
            return "";
        switch (f->kind) {
        case FormulaOutcome::Kind::Number: return std::to_string(f->value);
        case FormulaOutcome::Kind::NoTotalDominatingSet: return "none";
        case FormulaOutcome::Kind::NotCovered: return "not-covered";
        }
        return "";
    }

    auto join(const std::set<std::string> & items, const char * sep) -> std::string
    {
        std::string out;
        for (const auto & s : items) {
            if (! out.empty())
                out += sep;
            out += s;
        }
        return out;
    }

    /// RFC 4180 quoting when needed.
    auto csv_field(const std::string & s) -> std::string
    {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"')
                out += '"';
            out += c;
        }
        return out + "\"";
    }

    auto row_json(const ReportRow & row) -> nlohmann::json
    {
        nlohmann::json j;
        j["spec"] = row.spec;
        j["tags"] = row.tags;
        j["order"] = row.order;
        j["associativity"] = row.associativity;
        j["nilpotent"] = row.nilpotent;
        j["profile"] = row.profile;

        nlohmann::json dom;
        dom["graph"] = row.dom_graph;
        dom["costanzo"] = row.dom_costanzo ? nlohmann::json(*row.dom_costanzo) : nlohmann::json(nullptr);
        if (row.dom_corollary) {
            dom["corollary"] = row.dom_corollary->elements;
            dom["corollary_case"] = row.dom_corollary->case_tag;
        }
        else {
            dom["corollary"] = nullptr;
            dom["corollary_case"] = nullptr;
        }
        dom["agree"] = row.dom_agree;
        j["dominating_vertices"] = std::move(dom);

        j["proper_vertices"] = row.proper_vertices;
        j["components_actual"] = row.components_actual;
        j["components_predicted"] = formula_json(row.components_predicted);
        j["gamma_oracle"] = row.gamma_certificate;
        j["gamma_formula"] = formula_json(row.gamma_formula);
        j["strong_oracle"] = row.strong_certificate;
        j["strong_formula"] = formula_json(row.strong_formula);
        j["total_dom_predicate"] = row.total_dom_predicate ? nlohmann::json(*row.total_dom_predicate)
                                                           : nlohmann::json(nullptr);
        j["verdict"] = to_string(row.verdict);
        j["mismatches"] = row.mismatches;
        j["hard_failures"] = row.hard_failures;
        j["notes"] = row.notes;
        j["unexpected"] = row.unexpected;
        return j;
    }
}

auto to_json(const VerificationReport & report) -> nlohmann::json
{
    nlohmann::json j;
    auto & meta = j["metadata"];
    meta["tool"] = "epgdom";
    meta["version"] = version;
    meta["seed"] = report.seed;
    meta["node_budget"] = report.budgets.node_budget;
    meta["order_cap"] = report.order_cap;
    if (report.wall_time_ms)
        meta["wall_time_ms"] = *report.wall_time_ms;

    auto & rows = j["rows"] = nlohmann::json::array();
    std::map<std::string, std::size_t> counts;
    std::size_t unexpected = 0;
    for (const auto & row : report.rows) {
        rows.push_back(row_json(row));
        ++counts[to_string(row.verdict)];
        unexpected += row.unexpected;
    }
    j["summary"]["verdicts"] = counts;
    j["summary"]["unexpected"] = unexpected;
    j["summary"]["exit_status"] = exit_status(report);
    return j;
}

auto to_csv(const VerificationReport & report) -> std::string
{
    std::ostringstream out;
    out << "spec,order,nilpotent,profile,dom_graph,dom_costanzo,dom_corollary,dom_agree,proper_vertices,"
           "components_actual,components_predicted,gamma_oracle,gamma_formula,strong_oracle,strong_formula,"
           "strong_case,total_dom_predicate,verdict,tags,unexpected\n";
    for (const auto & r : report.rows) {
        out << csv_field(r.spec) << ',' << r.order << ',' << (r.nilpotent ? "true" : "false") << ','
            << csv_field(r.profile) << ',' << r.dom_graph.size() << ','
            << (r.dom_costanzo ? std::to_string(r.dom_costanzo->size()) : "") << ','
            << (r.dom_corollary ? std::to_string(r.dom_corollary->elements.size()) : "") << ','
            << (r.dom_agree ? "true" : "false") << ',' << r.proper_vertices << ',' << r.components_actual << ','
            << formula_cell(r.components_predicted) << ',' << oracle_cell(r.gamma_oracle) << ','
            << formula_cell(r.gamma_formula) << ',' << oracle_cell(r.strong_oracle) << ','
            << formula_cell(r.strong_formula) << ',' << (r.strong_formula ? r.strong_formula->case_tag : "") << ','
            << (r.total_dom_predicate ? (*r.total_dom_predicate ? "true" : "false") : "") << ','
            << to_string(r.verdict) << ',' << csv_field(join(r.tags, ";")) << ','
            << (r.unexpected ? "true" : "false") << '\n';
    }
    return out.str();
}

} // namespace epgdom
