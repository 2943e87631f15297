#pragma once

#include "stargenus/chord_model.hpp"
#include "stargenus/star_graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace stargenus {

/// A parse or validation failure tied to a 1-based input line (0 if none).
class ParseError : public Error {
public:
    ParseError(int line, const std::string& message);

    int line() const { return line_; }

private:
    int line_;
};

struct ParsedGraph {
    StarGraph graph;
    std::vector<int> vertex_lines; // by VertexId
    std::vector<int> edge_lines;   // by edge index
};

/// `vertex <name> <degree>` and `edge <name>.<slot> <name>.<slot>` lines;
/// `#` starts a comment. The graph is returned unvalidated.
ParsedGraph parse_graph(std::string_view text);

/// Throws ParseError naming the line of the first validation issue.
void require_valid(const ParsedGraph& parsed);

/// parse_graph followed by require_valid.
StarGraph read_graph(std::string_view text);

std::string format_graph(const StarGraph& graph);

/// `points <2m>`, optional `group <kind>:<label>` declarations fixing group
/// order, then `chord <p> <q> <+|-> <kind>:<label>` lines with kind one of
/// free, triad, double. Groups not declared are created in order of first use.
/// Throws ParseError unless the result passes check_diagram.
SignedChordDiagram parse_diagram(std::string_view text);

std::string format_diagram(const SignedChordDiagram& d);

/// True when the first keyword of `text` is `points`.
bool looks_like_diagram(std::string_view text);

} // namespace stargenus
