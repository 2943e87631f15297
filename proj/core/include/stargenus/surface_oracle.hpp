#pragma once

#include "stargenus/chord_model.hpp"
#include "stargenus/circuits.hpp"
#include "stargenus/genus_solver.hpp"
#include "stargenus/star_graph.hpp"

#include <compare>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace stargenus {

/// One bit per vertex: angle i (between slots i and i+1) is black iff
/// i % 2 == bits[v].
struct AngleColoring {
    std::vector<bool> bits;

    bool black(VertexId v, int angle) const { return (angle % 2 == 0) != static_cast<bool>(bits.at(v)); }

    /// Bit v of `mask` becomes bits[v].
    static AngleColoring from_mask(int vertex_count, std::uint64_t mask);
};

struct AtomSurface {
    int black_faces = 0;
    int white_faces = 0;
    int euler_characteristic = 0;
    bool orientable = false;

    /// Orientable genus (2 - chi) / 2, or nonorientable genus 2 - chi.
    int genus() const { return orientable ? (2 - euler_characteristic) / 2 : 2 - euler_characteristic; }
};

/// The closed surface obtained by gluing a disc into every black and every
/// white boundary walk of the graph's vertex-and-band neighbourhood.
/// Throws Error for invalid or disconnected graphs.
AtomSurface trace_atom(const StarGraph& graph, const AngleColoring& coloring);

struct AtomGenus {
    int genus = 0;
    bool orientable = false;

    auto operator<=>(const AtomGenus&) const = default;
};

inline constexpr int kMaxOracleVertices = 16;

/// (genus, orientable) over all 2^n colorings. Throws Error above
/// kMaxOracleVertices vertices.
std::set<AtomGenus> atom_spectrum(const StarGraph& graph);

/// The partition of the expansion whose chords sit on the sides given by
/// the coloring: a chord lies on W iff the angle of its anchor passage is
/// black.
PermissiblePartition partition_for_coloring(const StarGraph& graph, const RotatingSplittingCircuit& circuit,
                                            const Expansion& expansion, const AngleColoring& coloring);

/// Circles left by surgery on each side, traced directly.
/// Throws Error for impermissible partitions.
std::pair<int, int> separation_surgery_check(const SignedChordDiagram& dprime, const std::vector<Side>& sides);

} // namespace stargenus
