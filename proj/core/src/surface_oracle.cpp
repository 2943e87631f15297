#include "stargenus/surface_oracle.hpp"

namespace stargenus {

namespace {

// Cycles of the union of two perfect matchings.
int count_components(int n, const std::vector<int>& mate_a, const std::vector<int>& mate_b)
{
    std::vector<bool> seen(n, false);
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        ++components;
        int h = start;
        do {
            seen[h] = true;
            seen[mate_a[h]] = true;
            h = mate_b[mate_a[h]];
        } while (h != start);
    }
    return components;
}

int angle_of(int degree, const Passage& p)
{
    return (p.in + 1) % degree == p.out ? p.in : p.out;
}

} // namespace

AngleColoring AngleColoring::from_mask(int vertex_count, std::uint64_t mask)
{
    AngleColoring c;
    for (int v = 0; v < vertex_count; ++v)
        c.bits.push_back((mask >> v) & 1U);
    return c;
}

AtomSurface trace_atom(const StarGraph& graph, const AngleColoring& coloring)
{
    require_valid(graph);
    if (!graph.is_connected())
        throw Error("trace_atom: graph is not connected");
    if (static_cast<int>(coloring.bits.size()) != graph.vertex_count())
        throw Error("trace_atom: coloring needs one bit per vertex");

    const int nv = graph.vertex_count();
    std::vector<int> offset(nv + 1, 0);
    for (VertexId v = 0; v < nv; ++v)
        offset[v + 1] = offset[v] + graph.degree(v);
    const int nh = offset[nv];
    auto id = [&](HalfEdgeRef h) { return offset[h.vertex] + h.slot; };

    std::vector<int> edge_mate(nh);
    for (const Edge& e : graph.edges()) {
        edge_mate[id(e.a)] = id(e.b);
        edge_mate[id(e.b)] = id(e.a);
    }
    std::vector<int> black_mate(nh), white_mate(nh);
    for (VertexId v = 0; v < nv; ++v) {
        const int d = graph.degree(v);
        for (int i = 0; i < d; ++i) {
            const int a = offset[v] + i, b = offset[v] + (i + 1) % d;
            auto& mate = coloring.black(v, i) ? black_mate : white_mate;
            mate[a] = b;
            mate[b] = a;
        }
    }

    AtomSurface s;
    s.black_faces = count_components(nh, edge_mate, black_mate);
    s.white_faces = count_components(nh, edge_mate, white_mate);
    s.euler_characteristic = nv - graph.edge_count() + s.black_faces + s.white_faces;

    // orientable iff the band twists (s + t + 1 mod 2) form a coboundary
    std::vector<std::vector<std::pair<VertexId, int>>> adj(nv);
    for (const Edge& e : graph.edges()) {
        const int twist = (e.a.slot + e.b.slot + 1) % 2;
        adj[e.a.vertex].push_back({e.b.vertex, twist});
        adj[e.b.vertex].push_back({e.a.vertex, twist});
    }
    std::vector<int> flip(nv, -1);
    flip[0] = 0;
    std::vector<VertexId> stack{0};
    s.orientable = true;
    while (!stack.empty()) {
        const VertexId u = stack.back();
        stack.pop_back();
        for (const auto& [w, twist] : adj[u]) {
            const int want = flip[u] ^ twist;
            if (flip[w] < 0) {
                flip[w] = want;
                stack.push_back(w);
            } else if (flip[w] != want) {
                s.orientable = false;
            }
        }
    }
    return s;
}

std::set<AtomGenus> atom_spectrum(const StarGraph& graph)
{
    const int n = graph.vertex_count();
    if (n > kMaxOracleVertices)
        throw Error("atom_spectrum: " + std::to_string(n) + " vertices exceeds the limit of " +
                    std::to_string(kMaxOracleVertices));
    std::set<AtomGenus> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const AtomSurface s = trace_atom(graph, AngleColoring::from_mask(n, mask));
        out.insert({s.genus(), s.orientable});
    }
    return out;
}

PermissiblePartition partition_for_coloring(const StarGraph& graph, const RotatingSplittingCircuit& circuit,
                                            const Expansion& expansion, const AngleColoring& coloring)
{
    if (static_cast<int>(coloring.bits.size()) != graph.vertex_count())
        throw Error("partition_for_coloring: coloring needs one bit per vertex");
    PermissiblePartition p;
    for (const ChordOrigin& o : expansion.origins) {
        const Passage& at = circuit.passages().at(o.anchor);
        const int angle = angle_of(graph.degree(o.vertex), at);
        p.sides.push_back(coloring.black(o.vertex, angle) ? Side::W : Side::B);
    }
    return p;
}

std::pair<int, int> separation_surgery_check(const SignedChordDiagram& dprime, const std::vector<Side>& sides)
{
    const std::string why = permissibility_violation(dprime, sides);
    if (!why.empty())
        throw Error("partition is not permissible: " + why);
    return {surgery_circle_count(restrict_to(dprime, chords_on(sides, Side::W))),
            surgery_circle_count(restrict_to(dprime, chords_on(sides, Side::B)))};
}

} // namespace stargenus
