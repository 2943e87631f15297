#pragma once

#include "stargenus/star_graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace stargenus {

using SlotPair = std::pair<int, int>;

/// One visit of a circuit to a vertex: it arrives along slot `in` and
/// leaves along slot `out`.
struct Passage {
    VertexId vertex = 0;
    int in = 0;
    int out = 0;

    bool operator==(const Passage&) const = default;
};

/// A perfect matching of the slots at every vertex.
class TransitionSystem {
public:
    TransitionSystem() = default;

    /// Every vertex gets the rotating matching {(0,1),(2,3)[,(4,5)]}.
    explicit TransitionSystem(const StarGraph& graph);

    int mate(VertexId v, int slot) const { return mate_.at(v).at(slot); }
    int vertex_count() const { return static_cast<int>(mate_.size()); }

    /// Pairs (a, b) with a < b, sorted.
    std::vector<SlotPair> matching(VertexId v) const;
    void set_matching(VertexId v, std::span<const SlotPair> pairs);

private:
    std::vector<std::vector<int>> mate_;
};

enum class VertexKind { Rotating, Splitting, Neither };

const char* to_string(VertexKind k);

VertexKind classify_matching(int degree, std::span<const SlotPair> pairs);
VertexKind classify_vertex(const StarGraph& graph, const TransitionSystem& ts, VertexId v);

/// A closed walk: edges[i] is the edge leaving passages[i].
struct ClosedWalk {
    std::vector<Passage> passages;
    std::vector<int> edges;
};

/// Splits the edge set into the closed walks obtained by following edges
/// and the transition system's passages.
std::vector<ClosedWalk> cycles_of(const StarGraph& graph, const TransitionSystem& ts);

/// A single closed walk through every edge, every vertex rotating or
/// splitting. Positions on the circle are indices into passages().
class RotatingSplittingCircuit {
public:
    RotatingSplittingCircuit() = default;
    RotatingSplittingCircuit(std::vector<Passage> passages, std::vector<int> edges, int vertex_count);

    const std::vector<Passage>& passages() const { return passages_; }
    const std::vector<int>& edges() const { return edges_; }
    int size() const { return static_cast<int>(passages_.size()); }

    /// Circle positions of the visits to v, increasing.
    const std::vector<int>& visits(VertexId v) const { return visits_.at(v); }

    TransitionSystem transitions(const StarGraph& graph) const;

    /// Same circuit traversed backwards, starting at the same passage.
    RotatingSplittingCircuit reversed() const;

private:
    std::vector<Passage> passages_;
    std::vector<int> edges_;
    std::vector<std::vector<int>> visits_;
};

VertexKind classify_vertex(const StarGraph& graph, const RotatingSplittingCircuit& circuit, VertexId v);

struct CircuitOptions {
    /// Unset: fixed rotating start, smallest merge vertex, walk from v0.0.
    /// Set: random rotating/splitting start, random merge vertex, random
    /// starting half-edge and direction, all drawn from this seed.
    std::optional<std::uint64_t> seed;

    /// When non-null, receives the cycle count before every merge step and
    /// the final count (1).
    std::vector<int>* cycle_trace = nullptr;
};

/// Builds a rotating-splitting circuit by repeatedly re-matching a vertex
/// shared by several cycles until one cycle remains.
/// Throws Error for invalid, empty or disconnected graphs.
RotatingSplittingCircuit build_rotating_splitting_circuit(const StarGraph& graph, const CircuitOptions& options = {});

/// Walks a single-cycle transition system, leaving `start` first.
RotatingSplittingCircuit circuit_from_transitions(const StarGraph& graph, const TransitionSystem& ts, HalfEdgeRef start);

/// Every violated circuit invariant; empty iff `circuit` is a valid
/// rotating-splitting circuit of `graph`.
std::vector<std::string> check_circuit(const StarGraph& graph, const RotatingSplittingCircuit& circuit);

/// Twist flags for the three visits of a rotating 6-vertex, given in circle
/// order. The orientation is the one induced by the circuit: the cyclic slot
/// order in which the three passages are met. A visit is twisted when it
/// runs against that orientation.
std::vector<bool> twist_flags(std::span<const Passage> visits_in_order);

/// twist_flags for vertex v of the circuit; flags follow visits(v).
/// Throws Error unless v is a rotating 6-vertex.
std::vector<bool> twisted_angles(const StarGraph& graph, const RotatingSplittingCircuit& circuit, VertexId v);

// Merge step internals.

/// Composition of the three return routes at a 6-vertex (or the two at a
/// 4-vertex), which decides the structure installed when merging.
enum class RouteCase {
    FourVertex,
    ThreeAdjacent,          // rotating, untwisted
    TwoAdjacentOneOpposite, // splitting
    OneAdjacentTwoNeither,  // rotating, one twist
    ThreeOpposite,          // rotating, three twists
    OneOppositeTwoNeither,  // rotating, two twists
};

const char* to_string(RouteCase c);

/// routes: the slot pairing obtained by leaving v along one slot and
/// following the transition system until the first return to v.
RouteCase classify_routes(int degree, std::span<const SlotPair> routes);

/// A rotating or splitting matching that, together with `routes`, forms a
/// single cycle. The kind (rotating / splitting) is the one prescribed by
/// classify_routes. Throws Error if none exists.
std::vector<SlotPair> merging_matching(int degree, std::span<const SlotPair> routes);

std::vector<SlotPair> external_routes(const StarGraph& graph, const TransitionSystem& ts, VertexId v);

} // namespace stargenus
