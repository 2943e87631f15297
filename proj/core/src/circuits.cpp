#include "stargenus/circuits.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace stargenus {

namespace {

SlotPair ordered(int a, int b)
{
    return a < b ? SlotPair{a, b} : SlotPair{b, a};
}

std::vector<SlotPair> normalized(std::vector<SlotPair> pairs)
{
    for (auto& p : pairs)
        p = ordered(p.first, p.second);
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

std::vector<std::vector<SlotPair>> rotating_matchings(int degree)
{
    std::vector<std::vector<SlotPair>> out(2);
    for (int s = 0; s < degree; s += 2) {
        out[0].push_back(ordered(s, s + 1));
        out[1].push_back(ordered(s + 1, (s + 2) % degree));
    }
    out[0] = normalized(out[0]);
    out[1] = normalized(out[1]);
    return out;
}

std::vector<std::vector<SlotPair>> splitting_matchings()
{
    std::vector<std::vector<SlotPair>> out;
    for (int i = 0; i < 3; ++i)
        out.push_back(normalized({{i, i + 3}, {i + 1, i + 2}, {(i + 4) % 6, (i + 5) % 6}}));
    return out;
}

bool forms_single_cycle(int degree, std::span<const SlotPair> routes, std::span<const SlotPair> matching)
{
    std::vector<int> route_mate(degree), match_mate(degree);
    for (auto [a, b] : routes) {
        route_mate[a] = b;
        route_mate[b] = a;
    }
    for (auto [a, b] : matching) {
        match_mate[a] = b;
        match_mate[b] = a;
    }
    int s = 0, seen = 0;
    do {
        seen += 2;
        s = match_mate[route_mate[s]];
    } while (s != 0);
    return seen == degree;
}

// Slot pairing at v induced by leaving along a slot and walking until the
// walk first re-enters v.
int return_slot(const StarGraph& graph, const TransitionSystem& ts, VertexId v, int slot)
{
    HalfEdgeRef cur{v, slot};
    for (;;) {
        HalfEdgeRef arr = graph.partner(cur);
        if (arr.vertex == v)
            return arr.slot;
        cur = {arr.vertex, ts.mate(arr.vertex, arr.slot)};
    }
}

} // namespace

TransitionSystem::TransitionSystem(const StarGraph& graph)
{
    mate_.resize(graph.vertex_count());
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        const int d = graph.degree(v);
        mate_[v].resize(d);
        for (int s = 0; s < d; ++s)
            mate_[v][s] = s ^ 1;
    }
}

std::vector<SlotPair> TransitionSystem::matching(VertexId v) const
{
    std::vector<SlotPair> out;
    const auto& m = mate_.at(v);
    for (int s = 0; s < static_cast<int>(m.size()); ++s)
        if (s < m[s])
            out.push_back({s, m[s]});
    return out;
}

void TransitionSystem::set_matching(VertexId v, std::span<const SlotPair> pairs)
{
    auto& m = mate_.at(v);
    std::vector<int> next(m.size(), -1);
    for (auto [a, b] : pairs) {
        if (a == b || a < 0 || b < 0 || a >= static_cast<int>(m.size()) || b >= static_cast<int>(m.size()) ||
            next[a] >= 0 || next[b] >= 0)
            throw Error("set_matching: not a perfect matching of the vertex's slots");
        next[a] = b;
        next[b] = a;
    }
    if (std::find(next.begin(), next.end(), -1) != next.end())
        throw Error("set_matching: not a perfect matching of the vertex's slots");
    m = std::move(next);
}

const char* to_string(VertexKind k)
{
    switch (k) {
    case VertexKind::Rotating: return "rotating";
    case VertexKind::Splitting: return "splitting";
    case VertexKind::Neither: return "neither";
    }
    return "?";
}

VertexKind classify_matching(int degree, std::span<const SlotPair> pairs)
{
    int adjacent = 0, opposite = 0;
    for (auto [a, b] : pairs) {
        switch (slot_relation(degree, a, b)) {
        case AngleRelation::Adjacent: ++adjacent; break;
        case AngleRelation::Opposite: ++opposite; break;
        case AngleRelation::Neither: break;
        }
    }
    const int n = static_cast<int>(pairs.size());
    if (adjacent == n)
        return VertexKind::Rotating;
    if (degree == 6 && n == 3 && opposite == 1 && adjacent == 2)
        return VertexKind::Splitting;
    return VertexKind::Neither;
}

VertexKind classify_vertex(const StarGraph& graph, const TransitionSystem& ts, VertexId v)
{
    if (v < 0 || v >= graph.vertex_count())
        throw Error("classify_vertex: unknown vertex");
    const auto pairs = ts.matching(v);
    return classify_matching(graph.degree(v), pairs);
}

std::vector<ClosedWalk> cycles_of(const StarGraph& graph, const TransitionSystem& ts)
{
    std::vector<ClosedWalk> walks;
    std::vector<bool> used(graph.edge_count(), false);
    for (int e = 0; e < graph.edge_count(); ++e) {
        if (used[e])
            continue;
        const HalfEdgeRef start = graph.edges()[e].a;
        ClosedWalk walk;
        HalfEdgeRef dep = start;
        for (;;) {
            const int edge = graph.edge_at(dep);
            used[edge] = true;
            walk.edges.push_back(edge);
            const HalfEdgeRef arr = graph.partner(dep);
            const int out = ts.mate(arr.vertex, arr.slot);
            walk.passages.push_back({arr.vertex, arr.slot, out});
            dep = {arr.vertex, out};
            if (dep == start)
                break;
        }
        // Put the passage that leaves `start` first so edges[i] leaves passages[i].
        std::rotate(walk.passages.rbegin(), walk.passages.rbegin() + 1, walk.passages.rend());
        walks.push_back(std::move(walk));
    }
    return walks;
}

RotatingSplittingCircuit::RotatingSplittingCircuit(std::vector<Passage> passages, std::vector<int> edges,
                                                   int vertex_count)
    : passages_(std::move(passages)), edges_(std::move(edges)), visits_(vertex_count)
{
    if (passages_.size() != edges_.size())
        throw Error("circuit: passage and edge counts differ");
    for (int i = 0; i < size(); ++i) {
        const VertexId v = passages_[i].vertex;
        if (v < 0 || v >= vertex_count)
            throw Error("circuit: passage at unknown vertex");
        visits_[v].push_back(i);
    }
}

TransitionSystem RotatingSplittingCircuit::transitions(const StarGraph& graph) const
{
    TransitionSystem ts(graph);
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        std::vector<SlotPair> pairs;
        for (int pos : visits_.at(v))
            pairs.push_back(ordered(passages_[pos].in, passages_[pos].out));
        ts.set_matching(v, pairs);
    }
    return ts;
}

RotatingSplittingCircuit RotatingSplittingCircuit::reversed() const
{
    const int k = size();
    std::vector<Passage> p;
    std::vector<int> e;
    p.reserve(k);
    e.reserve(k);
    for (int i = 0; i < k; ++i) {
        const Passage& src = passages_[(k - i) % k];
        p.push_back({src.vertex, src.out, src.in});
        e.push_back(edges_[k - 1 - i]);
    }
    return {std::move(p), std::move(e), static_cast<int>(visits_.size())};
}

VertexKind classify_vertex(const StarGraph& graph, const RotatingSplittingCircuit& circuit, VertexId v)
{
    if (v < 0 || v >= graph.vertex_count())
        throw Error("classify_vertex: unknown vertex");
    std::vector<SlotPair> pairs;
    for (int pos : circuit.visits(v))
        pairs.push_back(ordered(circuit.passages()[pos].in, circuit.passages()[pos].out));
    return classify_matching(graph.degree(v), pairs);
}

const char* to_string(RouteCase c)
{
    switch (c) {
    case RouteCase::FourVertex: return "four-vertex";
    case RouteCase::ThreeAdjacent: return "three-adjacent";
    case RouteCase::TwoAdjacentOneOpposite: return "two-adjacent-one-opposite";
    case RouteCase::OneAdjacentTwoNeither: return "one-adjacent-two-neither";
    case RouteCase::ThreeOpposite: return "three-opposite";
    case RouteCase::OneOppositeTwoNeither: return "one-opposite-two-neither";
    }
    return "?";
}

RouteCase classify_routes(int degree, std::span<const SlotPair> routes)
{
    if (degree == 4)
        return RouteCase::FourVertex;
    int adjacent = 0, opposite = 0, neither = 0;
    for (auto [a, b] : routes) {
        switch (slot_relation(degree, a, b)) {
        case AngleRelation::Adjacent: ++adjacent; break;
        case AngleRelation::Opposite: ++opposite; break;
        case AngleRelation::Neither: ++neither; break;
        }
    }
    if (adjacent == 3)
        return RouteCase::ThreeAdjacent;
    if (adjacent == 2 && opposite == 1)
        return RouteCase::TwoAdjacentOneOpposite;
    if (adjacent == 1 && neither == 2)
        return RouteCase::OneAdjacentTwoNeither;
    if (opposite == 3)
        return RouteCase::ThreeOpposite;
    if (opposite == 1 && neither == 2)
        return RouteCase::OneOppositeTwoNeither;
    throw Error("classify_routes: route pairing is not a perfect matching of a 6-vertex");
}

std::vector<SlotPair> merging_matching(int degree, std::span<const SlotPair> routes)
{
    const RouteCase rc = classify_routes(degree, routes);
    const auto candidates = rc == RouteCase::TwoAdjacentOneOpposite ? splitting_matchings() : rotating_matchings(degree);
    for (const auto& m : candidates)
        if (forms_single_cycle(degree, routes, m))
            return m;
    throw Error(std::string("merging_matching: no structure joins the routes (case ") + to_string(rc) + ")");
}

std::vector<SlotPair> external_routes(const StarGraph& graph, const TransitionSystem& ts, VertexId v)
{
    std::vector<SlotPair> routes;
    std::vector<bool> done(graph.degree(v), false);
    for (int s = 0; s < graph.degree(v); ++s) {
        if (done[s])
            continue;
        const int t = return_slot(graph, ts, v, s);
        done[s] = done[t] = true;
        routes.push_back(ordered(s, t));
    }
    return routes;
}

RotatingSplittingCircuit circuit_from_transitions(const StarGraph& graph, const TransitionSystem& ts, HalfEdgeRef start)
{
    std::vector<Passage> passages{{start.vertex, ts.mate(start.vertex, start.slot), start.slot}};
    std::vector<int> edges;
    HalfEdgeRef dep = start;
    for (;;) {
        edges.push_back(graph.edge_at(dep));
        const HalfEdgeRef arr = graph.partner(dep);
        const int out = ts.mate(arr.vertex, arr.slot);
        dep = {arr.vertex, out};
        if (dep == start)
            break;
        passages.push_back({arr.vertex, arr.slot, out});
        if (static_cast<int>(edges.size()) > graph.edge_count())
            throw Error("circuit_from_transitions: walk does not close");
    }
    return {std::move(passages), std::move(edges), graph.vertex_count()};
}

RotatingSplittingCircuit build_rotating_splitting_circuit(const StarGraph& graph, const CircuitOptions& options)
{
    require_valid(graph);
    if (graph.vertex_count() == 0)
        throw Error("cannot build a circuit of the empty graph");
    if (!graph.is_connected())
        throw Error("graph is disconnected");

    std::mt19937_64 rng(options.seed.value_or(0));
    const bool randomized = options.seed.has_value();

    TransitionSystem ts(graph);
    if (randomized) {
        for (VertexId v = 0; v < graph.vertex_count(); ++v) {
            auto choices = rotating_matchings(graph.degree(v));
            if (graph.degree(v) == 6)
                for (auto& m : splitting_matchings())
                    choices.push_back(m);
            std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
            ts.set_matching(v, choices[pick(rng)]);
        }
    }

    int previous = -1;
    for (;;) {
        const auto walks = cycles_of(graph, ts);
        const int count = static_cast<int>(walks.size());
        if (options.cycle_trace)
            options.cycle_trace->push_back(count);
        if (previous >= 0 && count >= previous)
            throw Error("internal: merge step did not reduce the cycle count");
        if (count == 1)
            break;
        previous = count;

        // cycle id of the passage through each (vertex, slot)
        std::vector<std::vector<int>> cycle_at(graph.vertex_count());
        for (VertexId v = 0; v < graph.vertex_count(); ++v)
            cycle_at[v].assign(graph.degree(v), -1);
        for (int c = 0; c < count; ++c)
            for (const Passage& p : walks[c].passages)
                cycle_at[p.vertex][p.in] = cycle_at[p.vertex][p.out] = c;

        std::vector<VertexId> shared;
        for (VertexId v = 0; v < graph.vertex_count(); ++v) {
            const auto& ids = cycle_at[v];
            if (std::any_of(ids.begin(), ids.end(), [&](int c) { return c != ids.front(); }))
                shared.push_back(v);
        }
        if (shared.empty())
            throw Error("graph is disconnected");

        VertexId v = shared.front();
        if (randomized) {
            std::uniform_int_distribution<std::size_t> pick(0, shared.size() - 1);
            v = shared[pick(rng)];
        }
        const auto routes = external_routes(graph, ts, v);
        ts.set_matching(v, merging_matching(graph.degree(v), routes));
    }

    if (!randomized)
        return circuit_from_transitions(graph, ts, {0, 0});

    std::uniform_int_distribution<int> pick_vertex(0, graph.vertex_count() - 1);
    const VertexId v0 = pick_vertex(rng);
    std::uniform_int_distribution<int> pick_slot(0, graph.degree(v0) - 1);
    auto circuit = circuit_from_transitions(graph, ts, {v0, pick_slot(rng)});
    if (std::bernoulli_distribution(0.5)(rng))
        circuit = circuit.reversed();
    return circuit;
}

std::vector<std::string> check_circuit(const StarGraph& graph, const RotatingSplittingCircuit& circuit)
{
    std::vector<std::string> problems;
    const auto& ps = circuit.passages();
    const int k = circuit.size();

    std::vector<int> visit_count(graph.vertex_count(), 0);
    for (int i = 0; i < k; ++i) {
        const Passage& p = ps[i];
        if (p.vertex < 0 || p.vertex >= graph.vertex_count() || p.in < 0 || p.out < 0 ||
            p.in >= graph.degree(p.vertex) || p.out >= graph.degree(p.vertex) || p.in == p.out) {
            problems.push_back("position " + std::to_string(i) + ": not a passage of the graph");
            return problems;
        }
        ++visit_count[p.vertex];
    }
    for (VertexId v = 0; v < graph.vertex_count(); ++v)
        if (visit_count[v] != graph.degree(v) / 2)
            problems.push_back("vertex '" + graph.name(v) + "' visited " + std::to_string(visit_count[v]) +
                               " times, expected " + std::to_string(graph.degree(v) / 2));
    if (!problems.empty())
        return problems;

    std::vector<int> edge_uses(graph.edge_count(), 0);
    for (int i = 0; i < k; ++i) {
        const int e = circuit.edges()[i];
        if (e < 0 || e >= graph.edge_count()) {
            problems.push_back("position " + std::to_string(i) + ": unknown edge");
            continue;
        }
        ++edge_uses[e];
        const HalfEdgeRef leave{ps[i].vertex, ps[i].out};
        const Passage& next = ps[(i + 1) % k];
        const HalfEdgeRef enter{next.vertex, next.in};
        if (graph.edge_at(leave) != e || graph.partner(leave) != enter)
            problems.push_back("position " + std::to_string(i) + ": edge does not join consecutive passages");
    }
    for (int e = 0; e < graph.edge_count(); ++e)
        if (edge_uses[e] != 1)
            problems.push_back("edge " + std::to_string(e) + " traversed " + std::to_string(edge_uses[e]) + " times");

    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        const int d = graph.degree(v);
        std::set<int> slots;
        for (int pos : circuit.visits(v)) {
            slots.insert(ps[pos].in);
            slots.insert(ps[pos].out);
        }
        if (static_cast<int>(slots.size()) != d) {
            problems.push_back("vertex '" + graph.name(v) + "': passages do not partition the slots");
            continue;
        }
        if (classify_vertex(graph, circuit, v) == VertexKind::Neither)
            problems.push_back("vertex '" + graph.name(v) + "' is neither rotating nor splitting");
    }
    return problems;
}

std::vector<bool> twist_flags(std::span<const Passage> visits)
{
    if (visits.size() != 3)
        throw Error("twist_flags: a 6-vertex has three visits");
    std::vector<int> angle;
    for (const Passage& p : visits) {
        if (slot_relation(6, p.in, p.out) != AngleRelation::Adjacent)
            throw Error("twist_flags: vertex is not rotating");
        angle.push_back((p.in + 1) % 6 == p.out ? p.in : p.out);
    }
    // The circuit meets the angles in increasing cyclic order iff the induced
    // orientation agrees with the stored slot order.
    const bool agrees = (angle[0] + 2) % 6 == angle[1];
    std::vector<bool> flags;
    for (const Passage& p : visits) {
        const bool against_stored = p.out == (p.in + 5) % 6;
        flags.push_back(against_stored == agrees);
    }
    return flags;
}

std::vector<bool> twisted_angles(const StarGraph& graph, const RotatingSplittingCircuit& circuit, VertexId v)
{
    if (v < 0 || v >= graph.vertex_count())
        throw Error("twisted_angles: unknown vertex");
    if (graph.degree(v) != 6 || classify_vertex(graph, circuit, v) != VertexKind::Rotating)
        throw Error("twisted_angles: '" + graph.name(v) + "' is not a rotating 6-vertex");
    std::vector<Passage> visits;
    for (int pos : circuit.visits(v))
        visits.push_back(circuit.passages()[pos]);
    return twist_flags(visits);
}

} // namespace stargenus
