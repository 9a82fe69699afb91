#include "gain_inertia/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace gain_inertia {

namespace {

std::vector<std::string_view> split_words(std::string_view line)
{
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            words.push_back(line.substr(i, j - i));
        i = j;
    }
    return words;
}

std::size_t parse_index(std::string_view word, std::size_t line, const char* what)
{
    std::size_t out = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), out);
    if (ec != std::errc{} || ptr != word.data() + word.size() || word.empty())
        throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '"
                                   + std::string(word) + "'");
    return out;
}

} // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message)
    , line_(line)
{
}

GainGraph parse_graph(std::istream& in)
{
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    std::optional<std::size_t> order;
    std::vector<EdgeSpec> edges;
    std::vector<std::size_t> edge_lines;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const auto words = split_words(line);
        if (words.empty())
            continue;
        if (!have_header) {
            if (words.size() != 2 || words[0] != "gaingraph" || words[1] != "v1")
                throw ParseError(line_no, "expected header 'gaingraph v1'");
            have_header = true;
            continue;
        }
        if (!order) {
            if (words.size() != 2 || words[0] != "n")
                throw ParseError(line_no, "expected 'n <vertex count>'");
            order = parse_index(words[1], line_no, "vertex count");
            continue;
        }
        if (words[0] != "e" || words.size() != 4)
            throw ParseError(line_no, "expected 'e <u> <v> <gain>'");
        EdgeSpec spec;
        spec.u = parse_index(words[1], line_no, "edge endpoint");
        spec.v = parse_index(words[2], line_no, "edge endpoint");
        try {
            const Gain g = parse_gain(words[3]);
            if (auto r = g.exact())
                spec.gain = *r;
            else
                spec.gain = g.value();
        } catch (const GainError& e) {
            throw ParseError(line_no, e.what());
        }
        edges.push_back(spec);
        edge_lines.push_back(line_no);
    }
    if (!have_header)
        throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'gaingraph v1'");
    if (!order)
        throw ParseError(line_no, "missing 'n <vertex count>' line");

    // Per-edge validation first so errors point at the offending line.
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (e.u >= *order || e.v >= *order)
            throw ParseError(edge_lines[i], "vertex id out of range [0, " + std::to_string(*order) + ")");
        if (e.u == e.v)
            throw ParseError(edge_lines[i], "loop edge");
        if (!seen.insert(std::minmax(e.u, e.v)).second)
            throw ParseError(edge_lines[i], "duplicate edge");
    }
    try {
        return GainGraph::build(*order, edges);
    } catch (const GraphError& e) {
        throw ParseError(0, e.what());
    }
}

GainGraph parse_graph_text(const std::string& text)
{
    std::istringstream in(text);
    return parse_graph(in);
}

std::string serialize_graph(const GainGraph& g)
{
    std::ostringstream out;
    out << "gaingraph v1\n";
    out << "n " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges())
        out << "e " << e.u << ' ' << e.v << ' ' << format_gain(e.gain) << '\n';
    return out.str();
}

} // namespace gain_inertia
