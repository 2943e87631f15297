#include "stargenus/star_graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace stargenus {

AngleRelation slot_relation(int degree, int slotA, int slotB)
{
    if (degree != 4 && degree != 6)
        throw Error("slot_relation: degree must be 4 or 6");
    if (slotA < 0 || slotA >= degree || slotB < 0 || slotB >= degree)
        throw Error("slot_relation: slot out of range");
    if (slotA == slotB)
        throw Error("slot_relation: slots must differ");

    int dist = std::abs(slotA - slotB);
    dist = std::min(dist, degree - dist);
    if (dist == 1)
        return AngleRelation::Adjacent;
    if (dist == degree / 2)
        return AngleRelation::Opposite;
    return AngleRelation::Neither;
}

const char* to_string(AngleRelation r)
{
    switch (r) {
    case AngleRelation::Adjacent: return "adjacent";
    case AngleRelation::Opposite: return "opposite";
    case AngleRelation::Neither: return "neither";
    }
    return "?";
}

VertexId StarGraph::add_vertex(std::string name, int degree)
{
    names_.push_back(std::move(name));
    degrees_.push_back(degree);
    incidence_.emplace_back(static_cast<std::size_t>(std::max(degree, 0)), -1);
    return vertex_count() - 1;
}

int StarGraph::add_edge(HalfEdgeRef a, HalfEdgeRef b)
{
    const int index = edge_count();
    edges_.push_back({a, b});
    for (const HalfEdgeRef& h : {a, b}) {
        if (h.vertex < 0 || h.vertex >= vertex_count())
            continue;
        auto& slots = incidence_[h.vertex];
        if (h.slot >= 0 && h.slot < static_cast<int>(slots.size()) && slots[h.slot] < 0)
            slots[h.slot] = index;
    }
    return index;
}

std::optional<VertexId> StarGraph::find_vertex(std::string_view name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<VertexId>(it - names_.begin());
}

int StarGraph::edge_at(HalfEdgeRef h) const
{
    return incidence_.at(h.vertex).at(h.slot);
}

HalfEdgeRef StarGraph::partner(HalfEdgeRef h) const
{
    const Edge& e = edges_.at(edge_at(h));
    return e.a == h ? e.b : e.a;
}

int StarGraph::half_edge_count() const
{
    int total = 0;
    for (int d : degrees_)
        total += d;
    return total;
}

bool StarGraph::is_connected() const
{
    if (vertex_count() == 0)
        return false;
    std::vector<std::vector<VertexId>> adj(vertex_count());
    for (const Edge& e : edges_) {
        adj[e.a.vertex].push_back(e.b.vertex);
        adj[e.b.vertex].push_back(e.a.vertex);
    }
    std::vector<bool> seen(vertex_count(), false);
    std::queue<VertexId> todo;
    todo.push(0);
    seen[0] = true;
    int reached = 1;
    while (!todo.empty()) {
        VertexId v = todo.front();
        todo.pop();
        for (VertexId w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                todo.push(w);
            }
        }
    }
    return reached == vertex_count();
}

bool StarGraph::operator==(const StarGraph& other) const
{
    return names_ == other.names_ && degrees_ == other.degrees_ && edges_ == other.edges_;
}

ValidationReport validate(const StarGraph& graph)
{
    ValidationReport report;
    auto issue = [&](std::string msg, std::optional<VertexId> v, std::optional<int> e) {
        report.push_back({std::move(msg), v, e});
    };

    std::set<std::string> names;
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        const int d = graph.degree(v);
        if (d != 4 && d != 6)
            issue("vertex '" + graph.name(v) + "' has degree " + std::to_string(d) + ", expected 4 or 6", v, {});
        if (!names.insert(graph.name(v)).second)
            issue("duplicate vertex name '" + graph.name(v) + "'", v, {});
    }

    // uses[v][slot] counts how many edge endpoints name that half-edge
    std::vector<std::vector<int>> uses(graph.vertex_count());
    for (VertexId v = 0; v < graph.vertex_count(); ++v)
        uses[v].assign(static_cast<std::size_t>(std::max(graph.degree(v), 0)), 0);

    for (int i = 0; i < graph.edge_count(); ++i) {
        const Edge& e = graph.edges()[i];
        bool endpoints_ok = true;
        for (const HalfEdgeRef& h : {e.a, e.b}) {
            if (h.vertex < 0 || h.vertex >= graph.vertex_count()) {
                issue("edge " + std::to_string(i) + " references an unknown vertex", {}, i);
                endpoints_ok = false;
                continue;
            }
            if (h.slot < 0 || h.slot >= graph.degree(h.vertex)) {
                std::ostringstream os;
                os << "edge " << i << " uses slot " << h.slot << " of vertex '" << graph.name(h.vertex)
                   << "' (degree " << graph.degree(h.vertex) << ")";
                issue(os.str(), h.vertex, i);
                endpoints_ok = false;
                continue;
            }
            ++uses[h.vertex][h.slot];
        }
        if (endpoints_ok && e.a == e.b)
            issue("edge " + std::to_string(i) + " joins half-edge " + graph.name(e.a.vertex) + "." +
                      std::to_string(e.a.slot) + " to itself",
                  e.a.vertex, i);
    }

    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        for (int s = 0; s < static_cast<int>(uses[v].size()); ++s) {
            if (uses[v][s] == 0)
                issue("half-edge " + graph.name(v) + "." + std::to_string(s) + " is unmatched", v, {});
            else if (uses[v][s] > 1)
                issue("half-edge " + graph.name(v) + "." + std::to_string(s) + " is used by " +
                          std::to_string(uses[v][s]) + " edges",
                      v, {});
        }
    }
    return report;
}

void require_valid(const StarGraph& graph)
{
    ValidationReport report = validate(graph);
    if (!report.empty())
        throw Error("invalid graph: " + report.front().message);
}

StarGraph reverse_orientation_at(const StarGraph& graph, VertexId v)
{
    StarGraph out;
    for (VertexId u = 0; u < graph.vertex_count(); ++u)
        out.add_vertex(graph.name(u), graph.degree(u));
    auto flip = [&](HalfEdgeRef h) {
        if (h.vertex == v)
            h.slot = graph.degree(v) - 1 - h.slot;
        return h;
    };
    for (const Edge& e : graph.edges())
        out.add_edge(flip(e.a), flip(e.b));
    return out;
}

} // namespace stargenus
