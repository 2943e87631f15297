#pragma once

#include "stargenus/chord_model.hpp"
#include "stargenus/star_graph.hpp"

#include <functional>
#include <random>

namespace stargenus {

using Rng = std::mt19937_64;

/// Connected graph with `vertices` vertices named v0, v1, ..., each of degree
/// 6 with probability `six_fraction`, half-edges paired uniformly (loops
/// and multiple edges allowed). Resamples until connected.
StarGraph random_star_graph(Rng& rng, int vertices, double six_fraction = 0.5);

/// Every connected graph on 1 or 2 vertices, one per perfect matching of the
/// half-edges, for every choice of degrees.
void for_each_small_graph(const std::function<void(const StarGraph&)>& visit);

/// Every perfect matching of 2m points combined with every sign vector, all
/// chords free.
void for_each_chord_diagram(int chords, const std::function<void(const SignedChordDiagram&)>& visit);

/// Uniform matching of 2m points with independent signs. With `grouped`,
/// consecutive chords of a random permutation are paired into triad or
/// double groups; a leftover chord stays free.
SignedChordDiagram random_chord_diagram(Rng& rng, int chords, double negative_fraction = 0.5, bool grouped = false);

} // namespace stargenus
