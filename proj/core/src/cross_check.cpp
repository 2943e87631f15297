#include "stargenus/cross_check.hpp"

#include "stargenus/gf2.hpp"
#include "stargenus/surface_oracle.hpp"

#include <set>
#include <sstream>

namespace stargenus {

namespace {

std::string sides_string(const std::vector<Side>& sides)
{
    std::string s;
    for (Side x : sides)
        s += side_char(x);
    return s;
}

} // namespace

CrossCheckReport cross_check(const StarGraph& graph, const KleinOptions& klein)
{
    CrossCheckReport report;
    auto mismatch = [&](const std::string& what) { report.mismatches.push_back(what); };

    const auto circuit = build_rotating_splitting_circuit(graph);
    const Expansion ex = expansion_of(graph, circuit);
    const SignedChordDiagram& d = ex.diagram;
    const int n = graph.vertex_count();
    if (n > kMaxOracleVertices)
        throw Error("cross_check: graph exceeds the oracle vertex limit");

    std::vector<AtomSurface> atoms;
    bool all_orientable = true, none_orientable = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        atoms.push_back(trace_atom(graph, AngleColoring::from_mask(n, mask)));
        (atoms.back().orientable ? none_orientable : all_orientable) = false;
    }
    const Orientability gate = source_sink_gate(d);
    report.nonorientable = gate == Orientability::Nonorientable;
    if (report.nonorientable ? !none_orientable : !all_orientable) {
        mismatch(std::string("gate says ") + to_string(gate) + " but traced atoms disagree");
        return report;
    }
    if (!report.nonorientable)
        return report;

    const Gf2Matrix m = intersection_matrix(d);
    std::set<std::vector<Side>> from_colorings;
    std::set<int> atom_genera;
    for (std::uint64_t mask = 0; mask < atoms.size(); ++mask) {
        const AngleColoring coloring = AngleColoring::from_mask(n, mask);
        const PermissiblePartition p = partition_for_coloring(graph, circuit, ex, coloring);
        const std::string label = "coloring " + std::to_string(mask) + " -> " + sides_string(p.sides);
        if (const auto why = permissibility_violation(d, p.sides); !why.empty()) {
            mismatch(label + ": " + why);
            continue;
        }
        ++report.partitions_checked;
        from_colorings.insert(p.sides);
        atom_genera.insert(atoms[mask].genus());

        const auto w = chords_on(p.sides, Side::W), b = chords_on(p.sides, Side::B);
        const int rank_w = principal_submatrix(m, w).rank(), rank_b = principal_submatrix(m, b).rank();
        if (rank_w + rank_b != atoms[mask].genus())
            mismatch(label + ": rank sum " + std::to_string(rank_w + rank_b) + ", traced genus " +
                     std::to_string(atoms[mask].genus()));
        const auto [circles_w, circles_b] = separation_surgery_check(d, p.sides);
        const int corank_w = static_cast<int>(w.size()) - rank_w, corank_b = static_cast<int>(b.size()) - rank_b;
        if (corank_w + corank_b + 2 != circles_w + circles_b)
            mismatch(label + ": coranks " + std::to_string(corank_w) + "+" + std::to_string(corank_b) +
                     " but surgery leaves " + std::to_string(circles_w) + "+" + std::to_string(circles_b) +
                     " circles");
        if (circles_w != atoms[mask].white_faces || circles_b != atoms[mask].black_faces)
            mismatch(label + ": surgery circles differ from traced faces");
    }

    std::set<std::vector<Side>> permissible;
    for_each_permissible_partition(d, false, [&](const std::vector<Side>& s) { permissible.insert(s); });
    if (permissible != from_colorings)
        mismatch("colorings reach " + std::to_string(from_colorings.size()) + " of " +
                 std::to_string(permissible.size()) + " permissible partitions");

    const GenusReport spectrum = genus_spectrum(d);
    if (spectrum.spectrum != atom_genera) {
        std::ostringstream os;
        os << "rank spectrum {";
        for (int g : spectrum.spectrum)
            os << ' ' << g;
        os << " } but traced atoms give {";
        for (int g : atom_genera)
            os << ' ' << g;
        os << " }";
        mismatch(os.str());
    }

    const bool want_rp2 = spectrum.spectrum.contains(1);
    const FastTestResult rp2 = rp2_embeddable(d);
    if (rp2.embeddable != want_rp2)
        mismatch(std::string("rp2 fast test says ") + (rp2.embeddable ? "yes" : "no") + ", spectrum says " +
                 (want_rp2 ? "yes" : "no"));
    else if (rp2.witness && genus_of_partition(d, {*rp2.witness}) != 1)
        mismatch("rp2 witness does not have genus 1");

    const bool want_klein = spectrum.spectrum.contains(2);
    const FastTestResult kb = klein_embeddable(d, klein);
    if (kb.embeddable != want_klein)
        mismatch(std::string("klein fast test says ") + (kb.embeddable ? "yes" : "no") + ", spectrum says " +
                 (want_klein ? "yes" : "no"));
    else if (kb.witness && genus_of_partition(d, {*kb.witness}) != 2)
        mismatch("klein witness does not have genus 2");
    return report;
}

} // namespace stargenus
