#include "stargenus/genus_solver.hpp"

#include <algorithm>

namespace stargenus {

const char* to_string(Orientability o)
{
    return o == Orientability::Orientable ? "orientable" : "nonorientable";
}

Orientability source_sink_gate(const SignedChordDiagram& dprime)
{
    for (const Chord& c : dprime.chords())
        if (c.sign == Sign::Negative)
            return Orientability::Nonorientable;
    return Orientability::Orientable;
}

std::string permissibility_violation(const SignedChordDiagram& d, const std::vector<Side>& sides)
{
    if (static_cast<int>(sides.size()) != d.size())
        return "partition has " + std::to_string(sides.size()) + " entries for " + std::to_string(d.size()) +
               " chords";
    for (int g = 0; g < static_cast<int>(d.groups().size()); ++g) {
        const auto& m = d.members(g);
        if (m.size() != 2)
            continue;
        const bool same = sides[m[0]] == sides[m[1]];
        const ChordGroup& grp = d.groups()[g];
        if (grp.kind == GroupKind::TriadPair && !same)
            return "triad pair '" + grp.label + "' is split";
        if (grp.kind == GroupKind::DoublePair && same)
            return "double pair '" + grp.label + "' is on one side";
    }
    return {};
}

std::vector<int> chords_on(const std::vector<Side>& sides, Side s)
{
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(sides.size()); ++i)
        if (sides[i] == s)
            out.push_back(i);
    return out;
}

namespace {

int rank_sum(const Gf2Matrix& m, const std::vector<Side>& sides)
{
    const auto w = chords_on(sides, Side::W);
    const auto b = chords_on(sides, Side::B);
    return principal_submatrix(m, w).rank() + principal_submatrix(m, b).rank();
}

} // namespace

int genus_of_partition(const SignedChordDiagram& dprime, const PermissiblePartition& p)
{
    const std::string why = permissibility_violation(dprime, p.sides);
    if (!why.empty())
        throw Error("partition is not permissible: " + why);
    return rank_sum(intersection_matrix(dprime), p.sides);
}

std::vector<Side> partition_from_choices(const SignedChordDiagram& d, std::uint64_t choices)
{
    std::vector<Side> sides(d.size(), Side::W);
    for (int g = 0; g < static_cast<int>(d.groups().size()); ++g) {
        const Side first = (choices >> g) & 1U ? Side::B : Side::W;
        const auto& m = d.members(g);
        for (std::size_t k = 0; k < m.size(); ++k) {
            const bool split = d.groups()[g].kind == GroupKind::DoublePair && k > 0;
            sides[m[k]] = split ? other(first) : first;
        }
    }
    return sides;
}

void for_each_permissible_partition(const SignedChordDiagram& d, bool canonical,
                                    const std::function<void(const std::vector<Side>&)>& visit)
{
    const int groups = static_cast<int>(d.groups().size());
    if (groups > kMaxEnumeratedGroups)
        throw Error("too many chord groups to enumerate (" + std::to_string(groups) + ")");
    if (groups == 0) {
        visit({});
        return;
    }
    const std::uint64_t total = std::uint64_t{1} << groups;
    // Group 0 on W: the other half is the W/B mirror image.
    const std::uint64_t step = canonical ? 2 : 1;
    for (std::uint64_t choices = 0; choices < total; choices += step)
        visit(partition_from_choices(d, choices));
}

GenusReport genus_spectrum(const SignedChordDiagram& dprime)
{
    GenusReport report;
    report.expansion = dprime;
    report.orientability = source_sink_gate(dprime);
    if (report.orientability == Orientability::Orientable)
        throw OrientableGateError();

    const Gf2Matrix m = intersection_matrix(dprime);
    for_each_permissible_partition(dprime, true, [&](const std::vector<Side>& sides) {
        const int g = rank_sum(m, sides);
        report.spectrum.insert(g);
        PermissiblePartition p{sides};
        // the mirror image has the same genus; keep whichever is smaller
        PermissiblePartition mirror{sides};
        for (Side& s : mirror.sides)
            s = other(s);
        if (mirror < p)
            p = std::move(mirror);
        auto it = report.witnesses.find(g);
        if (it == report.witnesses.end())
            report.witnesses.emplace(g, std::move(p));
        else if (p < it->second)
            it->second = std::move(p);
    });
    return report;
}

Expansion expansion_of(const StarGraph& graph, const RotatingSplittingCircuit& circuit)
{
    return expand_with_origins(build_star_chord_diagram(graph, circuit));
}

GenusReport genus_spectrum(const StarGraph& graph, const CircuitOptions& options)
{
    const auto circuit = build_rotating_splitting_circuit(graph, options);
    return genus_spectrum(expansion_of(graph, circuit).diagram);
}

bool is_genus_achievable(const StarGraph& graph, int g)
{
    return genus_spectrum(graph).spectrum.contains(g);
}

} // namespace stargenus
