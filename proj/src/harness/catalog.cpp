#include "epgdom/error.hpp"
#include "epgdom/harness.hpp"

#include <fstream>
#include <sstream>

namespace epgdom {

namespace
{
    auto trim(std::string_view s) -> std::string_view
    {
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    }

    auto entry(const std::string & spec, std::set<std::string> tags) -> CatalogEntry
    {
        auto parsed = parse_group_spec(spec);
        return CatalogEntry{render(parsed), parsed, {}, std::move(tags)};
    }
}

auto s3_cayley_text() -> std::string
{
    return "# symmetric group S3: 0=e, 1=(012), 2=(021), 3=(01), 4=(02), 5=(12)\n"
           "6\n"
           "0 1 2 3 4 5\n"
           "1 2 0 4 5 3\n"
           "2 0 1 5 3 4\n"
           "3 5 4 0 2 1\n"
           "4 3 5 1 0 2\n"
           "5 4 3 2 1 0\n";
}

auto default_catalog() -> std::vector<CatalogEntry>
{
    using namespace tags;
    std::vector<CatalogEntry> c;
    c.push_back(entry("Z6", {"cyclic"}));
    c.push_back(entry("Z12", {"cyclic"}));
    c.push_back(entry("E2^2", {"p-group", expect_no_total_dom}));
    c.push_back(entry("Z4xZ2", {"p-group", expect_no_total_dom}));
    c.push_back(entry("D4", {"p-group", "dihedral", expect_no_total_dom}));
    c.push_back(entry("D8", {"p-group", "dihedral", expect_no_total_dom}));
    c.push_back(entry("E3^2", {"p-group"}));
    c.push_back(entry("Z8", {"cyclic", "p-group"}));
    c.push_back(entry("H3", {"p-group"}));
    c.push_back(entry("Q8", {"quaternion", "p-group"}));
    c.push_back(entry("Q16", {"quaternion", "p-group"}));
    c.push_back(entry("Q32", {"quaternion", "p-group"}));
    c.push_back(entry("Z5xQ8", {"quaternion"}));
    c.push_back(entry("Z15xQ8", {"quaternion"}));
    c.push_back(entry("E3^2xQ8", {"quaternion"}));
    c.push_back(entry("E3^2xZ2", {known_discrepancy}));
    c.push_back(entry("E3^2xZ4", {known_discrepancy}));
    c.push_back(entry("E2^2xE3^2", {}));
    c.push_back(CatalogEntry{"S3", std::nullopt, s3_cayley_text(), {non_nilpotent}});
    return c;
}

auto parse_catalog_line(std::string_view line) -> std::optional<CatalogEntry>
{
    std::set<std::string> tag_set;
    if (auto pos = line.find("#tags:"); pos != std::string_view::npos) {
        std::string_view rest = line.substr(pos + 6);
        line = line.substr(0, pos);
        while (! rest.empty()) {
            auto comma = rest.find(',');
            auto tag = trim(rest.substr(0, comma));
            if (! tag.empty())
                tag_set.emplace(tag);
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
    }
    auto spec = trim(line);
    if (spec.empty() || spec.front() == '#')
        return std::nullopt;
    return entry(std::string(spec), std::move(tag_set));
}

auto parse_catalog(std::string_view text) -> std::vector<CatalogEntry>
{
    std::vector<CatalogEntry> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        if (trim(line).starts_with("#") && ! trim(line).starts_with("#tags:"))
            continue;
        if (auto e = parse_catalog_line(line))
            out.push_back(std::move(*e));
    }
    return out;
}

auto load_catalog(const std::string & path) -> std::vector<CatalogEntry>
{
    std::ifstream in(path);
    if (! in)
        throw Error(ErrorCode::Io, "cannot open catalog '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_catalog(buffer.str());
}

auto construct_entry(const CatalogEntry & entry, const GroupOptions & options) -> FiniteGroup
{
    if (entry.spec)
        return construct_group(*entry.spec, options);
    return from_cayley_table(entry.cayley_text, options);
}

} // namespace epgdom
