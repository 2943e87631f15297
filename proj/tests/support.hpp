#pragma once

#include "stargenus/chord_model.hpp"
#include "stargenus/star_graph.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace stargenus::testing {

inline StarGraph one_vertex(int degree, const std::vector<std::pair<int, int>>& loops)
{
    StarGraph g;
    g.add_vertex("v", degree);
    for (const auto& [a, b] : loops)
        g.add_edge({0, a}, {0, b});
    return g;
}

inline StarGraph g1() { return one_vertex(4, {{0, 2}, {1, 3}}); }
inline StarGraph g3() { return one_vertex(6, {{0, 2}, {1, 4}, {3, 5}}); }
inline StarGraph orientable_variant() { return one_vertex(4, {{0, 1}, {2, 3}}); }

/// (p, q, negative) triples, every chord in its own Free group.
inline SignedChordDiagram free_diagram(const std::vector<std::tuple<int, int, bool>>& chords)
{
    std::vector<Chord> cs;
    std::vector<ChordGroup> groups;
    for (const auto& [p, q, negative] : chords) {
        cs.push_back({p, q, negative ? Sign::Negative : Sign::Positive, static_cast<int>(groups.size())});
        groups.push_back({GroupKind::Free, "c" + std::to_string(groups.size())});
    }
    return SignedChordDiagram(2 * static_cast<int>(chords.size()), std::move(cs), std::move(groups));
}

} // namespace stargenus::testing
