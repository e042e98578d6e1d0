#include "strictclose/io.hpp"

#include <algorithm>
#include <sstream>

namespace strictclose {

namespace {

struct Line {
    size_t number;
    std::string text;
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        size_t b = raw.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = raw.find_last_not_of(" \t\r");
        lines.push_back(Line{number, raw.substr(b, e - b + 1)});
    }
    return lines;
}

[[noreturn]] void fail(size_t line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::vector<long long> parse_int_row(const Line& line) {
    std::istringstream in(line.text);
    std::vector<long long> row;
    std::string tok;
    while (in >> tok) {
        try {
            size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) fail(line.number, "malformed integer '" + tok + "'");
            row.push_back(v);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            fail(line.number, "malformed integer '" + tok + "'");
        }
    }
    return row;
}

/// Shared skeleton of both file formats: header keyword with one positive
/// integer, a section keyword, integer rows, 'end'.
struct RowFile {
    long long header_value;
    std::vector<std::pair<size_t, std::vector<long long>>> rows;  // (line number, row)
};

RowFile parse_row_file(const std::string& text, const std::string& header_kw,
                       const std::string& section_kw) {
    auto lines = significant_lines(text);
    size_t at = 0;
    auto next = [&]() -> const Line& {
        if (at >= lines.size()) fail(lines.empty() ? 1 : lines.back().number, "unexpected end of file");
        return lines[at++];
    };

    RowFile out;
    {
        const Line& l = next();
        std::istringstream in(l.text);
        std::string kw;
        in >> kw;
        if (kw != header_kw) fail(l.number, "expected '" + header_kw + " <n>'");
        if (!(in >> out.header_value) || out.header_value < 1)
            fail(l.number, "expected a positive integer after '" + header_kw + "'");
        std::string extra;
        if (in >> extra) fail(l.number, "trailing tokens after '" + header_kw + "'");
    }
    {
        const Line& l = next();
        if (l.text != section_kw) fail(l.number, "expected '" + section_kw + "'");
    }
    while (true) {
        const Line& l = next();
        if (l.text == "end") break;
        out.rows.emplace_back(l.number, parse_int_row(l));
    }
    if (at != lines.size()) fail(lines[at].number, "content after 'end'");
    return out;
}

VectorList vector_list_from(const RowFile& f) {
    VectorList out;
    out.ambient_dim = static_cast<size_t>(f.header_value);
    for (const auto& [number, row] : f.rows) {
        if (row.size() != out.ambient_dim)
            fail(number, "expected " + std::to_string(out.ambient_dim) + " entries");
        for (auto x : row)
            if (x < 0) fail(number, "negative entry");
        out.rows.push_back(row);
    }
    std::sort(out.rows.begin(), out.rows.end(), lex_less);
    out.rows.erase(std::unique(out.rows.begin(), out.rows.end()), out.rows.end());
    return out;
}

}  // namespace

VectorList parse_vector_list(const std::string& text) {
    return vector_list_from(parse_row_file(text, "ambient", "generators"));
}

MonomialAlgebra parse_algebra(const std::string& text) {
    auto list = parse_vector_list(text);
    for (const auto& row : list.rows)
        if (is_zero(row)) throw ParseError("algebra file: zero generator row");
    return MonomialAlgebra(
        minimize_generators(AffineSemigroup(list.ambient_dim, std::move(list.rows))));
}

SimplicialComplex parse_complex(const std::string& text) {
    auto f = parse_row_file(text, "vertices", "facets");
    std::vector<std::set<int>> facets;
    for (const auto& [number, row] : f.rows) {
        std::set<int> facet;
        for (auto x : row) {
            if (x < 1 || x > f.header_value) fail(number, "vertex label out of range");
            if (!facet.insert(static_cast<int>(x)).second) fail(number, "repeated vertex label");
        }
        if (facet.empty()) fail(number, "empty facet row");
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex(static_cast<size_t>(f.header_value), std::move(facets));
}

std::string print_algebra(const MonomialAlgebra& a) {
    auto minimized = minimize_generators(a.semigroup);
    std::string out = "ambient " + std::to_string(minimized.ambient_dim) + "\ngenerators\n";
    for (const auto& g : minimized.generators) out += vec_row(g) + "\n";
    out += "end\n";
    return out;
}

}  // namespace strictclose
