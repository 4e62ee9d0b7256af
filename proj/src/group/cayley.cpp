#include "epgdom/error.hpp"
#include "epgdom/finite_group.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace epgdom {

namespace
{
    auto malformed(std::size_t line, const std::string & why) -> Error
    {
        return Error(ErrorCode::MalformedFile, "cayley table line " + std::to_string(line) + ": " + why);
    }

    auto tokens(std::string_view line, std::size_t line_no) -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            if (i == line.size())
                break;
            std::uint64_t v = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
            if (ec != std::errc{} || ptr == line.data() + i)
                throw malformed(line_no, "expected a non-negative integer");
            i = static_cast<std::size_t>(ptr - line.data());
            if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
                throw malformed(line_no, "unexpected character '" + std::string(1, line[i]) + "'");
            out.push_back(v);
        }
        return out;
    }
}

auto from_cayley_table(std::string_view text, const GroupOptions & options) -> FiniteGroup
{
    std::optional<std::size_t> n;
    std::vector<Element> table;
    std::size_t rows = 0;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto values = tokens(line, line_no);
        if (values.empty())
            continue;

        if (! n) {
            if (values.size() != 1)
                throw malformed(line_no, "first line must hold only the order");
            if (values[0] == 0)
                throw malformed(line_no, "order must be positive");
            if (values[0] > options.order_cap)
                throw Error(ErrorCode::OrderExceedsCap, "table order " + std::to_string(values[0]) +
                                                            " exceeds the cap " + std::to_string(options.order_cap));
            n = static_cast<std::size_t>(values[0]);
            table.reserve(*n * *n);
            continue;
        }
        if (rows == *n)
            throw malformed(line_no, "more than " + std::to_string(*n) + " rows");
        if (values.size() != *n)
            throw malformed(line_no, "expected " + std::to_string(*n) + " entries, got " + std::to_string(values.size()));
        for (auto v : values) {
            if (v >= *n)
                throw malformed(line_no, "entry " + std::to_string(v) + " outside [0," + std::to_string(*n) + ")");
            table.push_back(static_cast<Element>(v));
        }
        ++rows;
    }

    if (! n)
        throw malformed(line_no, "missing order line");
    if (rows != *n)
        throw malformed(line_no, "expected " + std::to_string(*n) + " rows, got " + std::to_string(rows));

    return FiniteGroup::from_table(*n, std::move(table), Provenance{std::nullopt, "imported", {}}, options);
}

auto load_cayley_file(const std::string & path, const GroupOptions & options) -> FiniteGroup
{
    std::ifstream in(path);
    if (! in)
        throw Error(ErrorCode::Io, "cannot open cayley table '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_cayley_table(buffer.str(), options);
}

auto to_cayley_text(const FiniteGroup & group) -> std::string
{
    std::ostringstream out;
    out << group.order() << '\n';
    for (Element a = 0; a < group.order(); ++a) {
        for (Element b = 0; b < group.order(); ++b)
            out << (b ? " " : "") << group.mul(a, b);
        out << '\n';
    }
    return out.str();
}

} // namespace epgdom
