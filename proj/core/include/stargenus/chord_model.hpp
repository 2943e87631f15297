#pragma once

#include "stargenus/circuits.hpp"
#include "stargenus/gf2.hpp"
#include "stargenus/star_graph.hpp"

#include <array>
#include <string>
#include <variant>
#include <vector>

namespace stargenus {

enum class Sign : unsigned char { Positive, Negative };

inline Sign flip(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }
inline char sign_char(Sign s) { return s == Sign::Positive ? '+' : '-'; }

// ---- signed star-chord diagram (one element per vertex) ----

/// From a 4-vertex.
struct StarChord {
    int p = 0;
    int q = 0;
    Sign sign = Sign::Positive;
    VertexId vertex = 0;
};

/// From a rotating 6-vertex: a triad point joined to three circle positions.
struct Triad {
    std::array<int, 3> points{};
    std::array<Sign, 3> signs{};
    VertexId vertex = 0;
};

/// From a splitting 6-vertex: two edges sharing the principal position.
struct DoubleChord {
    int principal = 0;
    std::array<int, 2> others{};
    std::array<Sign, 2> signs{};
    VertexId vertex = 0;
};

using StarElement = std::variant<StarChord, Triad, DoubleChord>;

struct SignedStarChordDiagram {
    int point_count = 0;
    std::vector<StarElement> elements;     // in vertex order
    std::vector<std::string> vertex_names; // indexed by VertexId
};

SignedStarChordDiagram build_star_chord_diagram(const StarGraph& graph, const RotatingSplittingCircuit& circuit);

// ---- signed chord diagram ----

enum class GroupKind : unsigned char { Free, TriadPair, DoublePair };

const char* to_string(GroupKind k);

/// Provenance of a chord: chords expanded from one vertex share a group.
struct ChordGroup {
    GroupKind kind = GroupKind::Free;
    std::string label;

    bool operator==(const ChordGroup&) const = default;
};

struct Chord {
    int p = 0; // p < q
    int q = 0;
    Sign sign = Sign::Positive;
    int group = 0; // index into SignedChordDiagram::groups

    bool operator==(const Chord&) const = default;
};

/// 2m points on a circle, m chords. Chords are kept in canonical order
/// (by smaller endpoint); that order indexes intersection matrices and
/// partitions.
class SignedChordDiagram {
public:
    SignedChordDiagram() = default;
    SignedChordDiagram(int point_count, std::vector<Chord> chords, std::vector<ChordGroup> groups);

    int point_count() const { return point_count_; }
    int size() const { return static_cast<int>(chords_.size()); }
    const std::vector<Chord>& chords() const { return chords_; }
    const Chord& chord(int i) const { return chords_.at(i); }
    const std::vector<ChordGroup>& groups() const { return groups_; }

    /// Chord indices of group g, canonical order.
    const std::vector<int>& members(int g) const { return members_.at(g); }

    bool linked(int i, int j) const;

    bool operator==(const SignedChordDiagram&) const = default;

private:
    int point_count_ = 0;
    std::vector<Chord> chords_;
    std::vector<ChordGroup> groups_;
    std::vector<std::vector<int>> members_;
};

bool chords_linked(const Chord& a, const Chord& b);

/// Empty iff `d` is well-formed: every point is the endpoint of exactly one
/// chord, paired groups hold two chords, free groups one.
std::vector<std::string> check_diagram(const SignedChordDiagram& d);

/// Where each expanded chord came from. `anchor` is the circle position of
/// the star-diagram point at the far end from the hub; its passage angle
/// decides on which side of the circuit the chord lies.
struct ChordOrigin {
    VertexId vertex = 0;
    int anchor = 0;
};

struct Expansion {
    SignedChordDiagram diagram;
    std::vector<ChordOrigin> origins; // parallel to diagram.chords()
};

/// Replaces triads and double chords by chord pairs.
SignedChordDiagram expand(const SignedStarChordDiagram& d);
Expansion expand_with_origins(const SignedStarChordDiagram& d);

/// Number of circles produced by surgery, traced directly.
int surgery_circle_count(const SignedChordDiagram& d);

Gf2Matrix intersection_matrix(const SignedChordDiagram& d);

/// Sub-diagram on the given chord indices, points renumbered, groups kept.
SignedChordDiagram restrict_to(const SignedChordDiagram& d, const std::vector<int>& chord_indices);

/// Removes negative chord c, reverses the points strictly inside it (the
/// arc away from point 0) and flips the sign of every chord crossing it.
/// A group left empty is dropped; a pair that loses c keeps its tag.
SignedChordDiagram reverse_segment_transform(const SignedChordDiagram& d, int c);

} // namespace stargenus
