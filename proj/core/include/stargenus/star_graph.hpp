#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stargenus {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using VertexId = int;

struct HalfEdgeRef {
    VertexId vertex = 0;
    int slot = 0;

    auto operator<=>(const HalfEdgeRef&) const = default;
};

struct Edge {
    HalfEdgeRef a;
    HalfEdgeRef b;

    bool operator==(const Edge&) const = default;
};

enum class AngleRelation { Adjacent, Opposite, Neither };

/// Relation between two distinct slots of a vertex of the given degree,
/// measured by circular distance in the vertex's cycle graph.
AngleRelation slot_relation(int degree, int slotA, int slotB);

const char* to_string(AngleRelation r);

struct ValidationIssue {
    std::string message;
    std::optional<VertexId> vertex;
    std::optional<int> edge;
};

using ValidationReport = std::vector<ValidationIssue>;

/// A graph whose half-edges at every vertex are numbered 0..degree-1 along
/// the vertex's cycle graph. The numbering doubles as a stored orientation.
///
/// Ill-formed input (bad degrees, reused or missing slots) is accepted and
/// reported by `validate`. Accessors marked "valid graphs only" assume an
/// empty report.
class StarGraph {
public:
    VertexId add_vertex(std::string name, int degree);
    int add_edge(HalfEdgeRef a, HalfEdgeRef b);

    int vertex_count() const { return static_cast<int>(degrees_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int degree(VertexId v) const { return degrees_.at(v); }
    const std::string& name(VertexId v) const { return names_.at(v); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::optional<VertexId> find_vertex(std::string_view name) const;

    // valid graphs only
    int edge_at(HalfEdgeRef h) const;
    HalfEdgeRef partner(HalfEdgeRef h) const;
    int half_edge_count() const;
    bool is_connected() const;

    bool operator==(const StarGraph& other) const;

private:
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::vector<Edge> edges_;
    // incidence_[v][slot] = index of the first edge using that half-edge, or -1
    std::vector<std::vector<int>> incidence_;
};

ValidationReport validate(const StarGraph& graph);

/// Throws Error carrying the first validation issue, if any.
void require_valid(const StarGraph& graph);

/// Copy of `graph` with the cyclic order at `v` reversed (slot s -> d-1-s).
StarGraph reverse_orientation_at(const StarGraph& graph, VertexId v);

} // namespace stargenus
