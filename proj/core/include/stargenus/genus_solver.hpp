#pragma once

#include "stargenus/chord_model.hpp"
#include "stargenus/circuits.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace stargenus {

/// The white (W) or black (B) side of the smoothed circuit.
enum class Side : unsigned char { W, B };

inline Side other(Side s) { return s == Side::W ? Side::B : Side::W; }
inline char side_char(Side s) { return s == Side::W ? 'W' : 'B'; }

/// One side per chord of the expansion, canonical chord order.
struct PermissiblePartition {
    std::vector<Side> sides;

    auto operator<=>(const PermissiblePartition&) const = default;
};

enum class Orientability { Orientable, Nonorientable };

const char* to_string(Orientability o);

/// Raised when a nonorientable-genus operation meets an all-positive expansion.
class OrientableGateError : public Error {
public:
    OrientableGateError() : Error("every chord of the expansion is positive: atoms are orientable") {}
};

/// Nonorientable iff the expansion has a negative chord.
Orientability source_sink_gate(const SignedChordDiagram& dprime);

/// Empty string iff `sides` keeps triad pairs together and splits double pairs.
std::string permissibility_violation(const SignedChordDiagram& d, const std::vector<Side>& sides);

/// Chord indices on one side, canonical order.
std::vector<int> chords_on(const std::vector<Side>& sides, Side s);

/// rank(M_W) + rank(M_B) for the principal submatrices of the intersection
/// matrix. Throws Error if the partition is not permissible.
int genus_of_partition(const SignedChordDiagram& dprime, const PermissiblePartition& p);

/// Sides for a choice bit per group (bit set = the group's first chord on B).
std::vector<Side> partition_from_choices(const SignedChordDiagram& d, std::uint64_t choices);

/// Visits permissible partitions in increasing choice order. With
/// `canonical`, only those whose first group's first chord lies on W.
void for_each_permissible_partition(const SignedChordDiagram& d, bool canonical,
                                    const std::function<void(const std::vector<Side>&)>& visit);

struct GenusReport {
    Orientability orientability = Orientability::Nonorientable;
    std::set<int> spectrum;
    /// Lexicographically least partition (W < B) per achieved genus.
    std::map<int, PermissiblePartition> witnesses;
    SignedChordDiagram expansion;

    int min_genus() const { return *spectrum.begin(); }
};

/// Largest group count genus_spectrum will enumerate.
inline constexpr int kMaxEnumeratedGroups = 30;

/// All achievable rank sums over permissible partitions of `dprime`.
/// Throws OrientableGateError for all-positive diagrams.
GenusReport genus_spectrum(const SignedChordDiagram& dprime);

/// Builds a circuit, its star-chord diagram and expansion, then enumerates.
GenusReport genus_spectrum(const StarGraph& graph, const CircuitOptions& options = {});

bool is_genus_achievable(const StarGraph& graph, int g);

/// Circuit, star-chord diagram and expansion of a graph in one step.
Expansion expansion_of(const StarGraph& graph, const RotatingSplittingCircuit& circuit);

} // namespace stargenus
