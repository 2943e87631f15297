#include "stargenus/formats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace stargenus {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        std::istringstream in{std::string(raw)};
        Line line{number, {}};
        for (std::string w; in >> w;)
            line.words.push_back(w);
        if (!line.words.empty())
            out.push_back(std::move(line));
        if (end == text.size())
            break;
    }
    return out;
}

bool is_name(std::string_view s)
{
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

int to_int(std::string_view s, int line, const char* what)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(line, std::string("expected a decimal ") + what + ", got '" + std::string(s) + "'");
    return value;
}

void expect_words(const Line& l, std::size_t n, const char* usage)
{
    if (l.words.size() != n)
        throw ParseError(l.number, std::string("expected '") + usage + "'");
}

ChordGroup parse_group(std::string_view s, int line)
{
    const auto colon = s.find(':');
    if (colon == std::string_view::npos)
        throw ParseError(line, "group must be free:<v>, triad:<v> or double:<v>");
    const std::string_view kind = s.substr(0, colon);
    const std::string label{s.substr(colon + 1)};
    if (!is_name(label))
        throw ParseError(line, "bad group label '" + label + "'");
    if (kind == "free")
        return {GroupKind::Free, label};
    if (kind == "triad")
        return {GroupKind::TriadPair, label};
    if (kind == "double")
        return {GroupKind::DoublePair, label};
    throw ParseError(line, "unknown group kind '" + std::string(kind) + "'");
}

} // namespace

ParseError::ParseError(int line, const std::string& message)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line)
{
}

ParsedGraph parse_graph(std::string_view text)
{
    ParsedGraph out;
    for (const Line& l : tokenize(text)) {
        const std::string& kw = l.words[0];
        if (kw == "vertex") {
            expect_words(l, 3, "vertex <name> <degree>");
            if (!is_name(l.words[1]))
                throw ParseError(l.number, "bad vertex name '" + l.words[1] + "'");
            out.graph.add_vertex(l.words[1], to_int(l.words[2], l.number, "degree"));
            out.vertex_lines.push_back(l.number);
        } else if (kw == "edge") {
            expect_words(l, 3, "edge <name>.<slot> <name>.<slot>");
            HalfEdgeRef ends[2];
            for (int k = 0; k < 2; ++k) {
                const std::string& w = l.words[1 + k];
                const auto dot = w.rfind('.');
                if (dot == std::string::npos)
                    throw ParseError(l.number, "half-edge must be <name>.<slot>, got '" + w + "'");
                const auto v = out.graph.find_vertex(std::string_view(w).substr(0, dot));
                if (!v)
                    throw ParseError(l.number, "unknown vertex '" + w.substr(0, dot) + "'");
                ends[k] = {*v, to_int(std::string_view(w).substr(dot + 1), l.number, "slot")};
            }
            out.graph.add_edge(ends[0], ends[1]);
            out.edge_lines.push_back(l.number);
        } else {
            throw ParseError(l.number, "unknown keyword '" + kw + "'");
        }
    }
    return out;
}

void require_valid(const ParsedGraph& parsed)
{
    const ValidationReport report = validate(parsed.graph);
    if (report.empty())
        return;
    const ValidationIssue& issue = report.front();
    int line = 0;
    if (issue.edge)
        line = parsed.edge_lines.at(*issue.edge);
    else if (issue.vertex)
        line = parsed.vertex_lines.at(*issue.vertex);
    throw ParseError(line, issue.message);
}

StarGraph read_graph(std::string_view text)
{
    ParsedGraph parsed = parse_graph(text);
    require_valid(parsed);
    return std::move(parsed.graph);
}

std::string format_graph(const StarGraph& graph)
{
    std::ostringstream out;
    for (VertexId v = 0; v < graph.vertex_count(); ++v)
        out << "vertex " << graph.name(v) << ' ' << graph.degree(v) << '\n';
    for (const Edge& e : graph.edges())
        out << "edge " << graph.name(e.a.vertex) << '.' << e.a.slot << ' ' << graph.name(e.b.vertex) << '.'
            << e.b.slot << '\n';
    return out.str();
}

SignedChordDiagram parse_diagram(std::string_view text)
{
    int points = -1;
    std::vector<Chord> chords;
    std::vector<ChordGroup> groups;
    std::map<std::pair<GroupKind, std::string>, int> group_index;
    auto group_of = [&](const ChordGroup& g) {
        const auto key = std::make_pair(g.kind, g.label);
        auto it = group_index.find(key);
        if (it != group_index.end())
            return it->second;
        groups.push_back(g);
        return group_index[key] = static_cast<int>(groups.size()) - 1;
    };

    int last_line = 0;
    for (const Line& l : tokenize(text)) {
        last_line = l.number;
        const std::string& kw = l.words[0];
        if (kw == "points") {
            expect_words(l, 2, "points <count>");
            if (points >= 0)
                throw ParseError(l.number, "duplicate 'points' line");
            points = to_int(l.words[1], l.number, "point count");
            if (points < 0)
                throw ParseError(l.number, "point count must be non-negative");
        } else if (points < 0) {
            throw ParseError(l.number, "'points' must come first");
        } else if (kw == "group") {
            expect_words(l, 2, "group <kind>:<label>");
            group_of(parse_group(l.words[1], l.number));
        } else if (kw == "chord") {
            expect_words(l, 5, "chord <p> <q> <+|-> <kind>:<label>");
            Chord c;
            c.p = to_int(l.words[1], l.number, "point");
            c.q = to_int(l.words[2], l.number, "point");
            if (l.words[3] == "+")
                c.sign = Sign::Positive;
            else if (l.words[3] == "-")
                c.sign = Sign::Negative;
            else
                throw ParseError(l.number, "sign must be + or -");
            c.group = group_of(parse_group(l.words[4], l.number));
            chords.push_back(c);
        } else {
            throw ParseError(l.number, "unknown keyword '" + kw + "'");
        }
    }
    if (points < 0)
        throw ParseError(last_line, "missing 'points' line");
    SignedChordDiagram d(points, std::move(chords), std::move(groups));
    if (const auto problems = check_diagram(d); !problems.empty())
        throw ParseError(0, "malformed chord diagram: " + problems.front());
    return d;
}

std::string format_diagram(const SignedChordDiagram& d)
{
    std::ostringstream out;
    out << "points " << d.point_count() << '\n';
    for (const ChordGroup& g : d.groups())
        out << "group " << to_string(g.kind) << ':' << g.label << '\n';
    for (const Chord& c : d.chords()) {
        const ChordGroup& g = d.groups()[c.group];
        out << "chord " << c.p << ' ' << c.q << ' ' << sign_char(c.sign) << ' ' << to_string(g.kind) << ':'
            << g.label << '\n';
    }
    return out.str();
}

bool looks_like_diagram(std::string_view text)
{
    const auto lines = tokenize(text);
    return !lines.empty() && lines.front().words.front() == "points";
}

} // namespace stargenus
