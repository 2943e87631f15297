#include "stargenus/chord_model.hpp"

#include <algorithm>
#include <numeric>

namespace stargenus {

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<int> parent_;
};

Chord normalized(Chord c)
{
    if (c.p > c.q)
        std::swap(c.p, c.q);
    return c;
}

} // namespace

const char* to_string(GroupKind k)
{
    switch (k) {
    case GroupKind::Free: return "free";
    case GroupKind::TriadPair: return "triad";
    case GroupKind::DoublePair: return "double";
    }
    return "?";
}

bool chords_linked(const Chord& a, const Chord& b)
{
    const bool b_p_inside = a.p < b.p && b.p < a.q;
    const bool b_q_inside = a.p < b.q && b.q < a.q;
    return b_p_inside != b_q_inside;
}

SignedChordDiagram::SignedChordDiagram(int point_count, std::vector<Chord> chords, std::vector<ChordGroup> groups)
    : point_count_(point_count), chords_(std::move(chords)), groups_(std::move(groups)), members_(groups_.size())
{
    for (Chord& c : chords_) {
        c = normalized(c);
        if (c.group < 0 || c.group >= static_cast<int>(groups_.size()))
            throw Error("chord diagram: chord refers to an unknown group");
    }
    std::stable_sort(chords_.begin(), chords_.end(), [](const Chord& a, const Chord& b) { return a.p < b.p; });
    for (int i = 0; i < size(); ++i)
        members_[chords_[i].group].push_back(i);
}

bool SignedChordDiagram::linked(int i, int j) const
{
    return chords_linked(chords_[i], chords_[j]);
}

std::vector<std::string> check_diagram(const SignedChordDiagram& d)
{
    std::vector<std::string> problems;
    if (d.point_count() != 2 * d.size())
        problems.push_back("point count " + std::to_string(d.point_count()) + " is not twice the chord count " +
                           std::to_string(d.size()));
    std::vector<int> uses(std::max(d.point_count(), 0), 0);
    for (const Chord& c : d.chords()) {
        if (c.p == c.q) {
            problems.push_back("chord joins point " + std::to_string(c.p) + " to itself");
            continue;
        }
        for (int x : {c.p, c.q}) {
            if (x < 0 || x >= d.point_count())
                problems.push_back("chord endpoint " + std::to_string(x) + " out of range");
            else
                ++uses[x];
        }
    }
    for (int x = 0; x < static_cast<int>(uses.size()); ++x)
        if (uses[x] != 1)
            problems.push_back("point " + std::to_string(x) + " is an endpoint of " + std::to_string(uses[x]) +
                               " chords");
    for (int g = 0; g < static_cast<int>(d.groups().size()); ++g) {
        const auto& grp = d.groups()[g];
        const int want = grp.kind == GroupKind::Free ? 1 : 2;
        const int have = static_cast<int>(d.members(g).size());
        if (have != want)
            problems.push_back(std::string(to_string(grp.kind)) + " group '" + grp.label + "' has " +
                               std::to_string(have) + " chords, expected " + std::to_string(want));
    }
    return problems;
}

SignedStarChordDiagram build_star_chord_diagram(const StarGraph& graph, const RotatingSplittingCircuit& circuit)
{
    if (!check_circuit(graph, circuit).empty())
        throw Error("build_star_chord_diagram: circuit does not belong to the graph");

    SignedStarChordDiagram out;
    out.point_count = circuit.size();
    for (VertexId v = 0; v < graph.vertex_count(); ++v)
        out.vertex_names.push_back(graph.name(v));

    const auto& ps = circuit.passages();
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        const auto& pos = circuit.visits(v);
        if (graph.degree(v) == 4) {
            // positive iff the two arrival half-edges are not adjacent
            const bool adjacent = slot_relation(4, ps[pos[0]].in, ps[pos[1]].in) == AngleRelation::Adjacent;
            out.elements.push_back(StarChord{pos[0], pos[1], adjacent ? Sign::Negative : Sign::Positive, v});
            continue;
        }
        if (classify_vertex(graph, circuit, v) == VertexKind::Rotating) {
            const auto twisted = twisted_angles(graph, circuit, v);
            Triad t;
            t.vertex = v;
            for (int k = 0; k < 3; ++k) {
                t.points[k] = pos[k];
                t.signs[k] = twisted[k] ? Sign::Negative : Sign::Positive;
            }
            out.elements.push_back(t);
            continue;
        }
        // splitting: the principal visit pairs opposite slots
        int principal = -1;
        for (int k = 0; k < 3; ++k)
            if (slot_relation(6, ps[pos[k]].in, ps[pos[k]].out) == AngleRelation::Opposite)
                principal = k;
        DoubleChord dc;
        dc.vertex = v;
        dc.principal = pos[principal];
        const Passage& a = ps[pos[principal]];
        int j = 0;
        for (int k = 0; k < 3; ++k) {
            if (k == principal)
                continue;
            const Passage& b = ps[pos[k]];
            dc.others[j] = pos[k];
            // positive iff the departure of b is adjacent to the arrival of a
            dc.signs[j] = slot_relation(6, b.out, a.in) == AngleRelation::Adjacent ? Sign::Positive : Sign::Negative;
            ++j;
        }
        out.elements.push_back(dc);
    }
    return out;
}

Expansion expand_with_origins(const SignedStarChordDiagram& d)
{
    const int n = d.point_count;
    std::vector<bool> hub(n, false);
    auto triad_hub = [](const Triad& t) {
        for (int k = 0; k < 3; ++k)
            if (t.signs[k] == Sign::Positive)
                return k;
        return 0;
    };
    for (const auto& el : d.elements) {
        if (const auto* t = std::get_if<Triad>(&el))
            hub[t->points[triad_hub(*t)]] = true;
        else if (const auto* dc = std::get_if<DoubleChord>(&el))
            hub[dc->principal] = true;
    }
    // base[p]: new index of p, or of p-e when p is split into p-e, p+e
    std::vector<int> base(n + 1, 0);
    for (int p = 0; p < n; ++p)
        base[p + 1] = base[p] + (hub[p] ? 2 : 1);

    // position following p in circle order among the given ones
    auto after = [n](int from, int x) { return (x - from + n) % n; };

    std::vector<std::pair<Chord, ChordOrigin>> items;
    std::vector<ChordGroup> groups;
    for (const auto& el : d.elements) {
        const int g = static_cast<int>(groups.size());
        if (const auto* c = std::get_if<StarChord>(&el)) {
            groups.push_back({GroupKind::Free, d.vertex_names.at(c->vertex)});
            items.push_back({{base[c->p], base[c->q], c->sign, g}, {c->vertex, c->q}});
        } else if (const auto* t = std::get_if<Triad>(&el)) {
            groups.push_back({GroupKind::TriadPair, d.vertex_names.at(t->vertex)});
            const int h = triad_hub(*t);
            const int a = t->points[h];
            int k1 = (h + 1) % 3, k2 = (h + 2) % 3;
            if (after(a, t->points[k1]) > after(a, t->points[k2]))
                std::swap(k1, k2);
            // k1 is met first after the hub
            const int x1 = base[t->points[k1]], x2 = base[t->points[k2]];
            if (t->signs[h] == Sign::Positive) {
                // unlinked, signs copied
                items.push_back({{base[a] + 1, x1, t->signs[k1], g}, {t->vertex, t->points[k1]}});
                items.push_back({{base[a], x2, t->signs[k2], g}, {t->vertex, t->points[k2]}});
            } else {
                // all negative: linked, signs flipped
                items.push_back({{base[a], x1, flip(t->signs[k1]), g}, {t->vertex, t->points[k1]}});
                items.push_back({{base[a] + 1, x2, flip(t->signs[k2]), g}, {t->vertex, t->points[k2]}});
            }
        } else {
            const auto& dc = std::get<DoubleChord>(el);
            groups.push_back({GroupKind::DoublePair, d.vertex_names.at(dc.vertex)});
            const int a = dc.principal;
            // b is the non-principal position met last after a; (a-e, b) and
            // (a+e, c) are then unlinked
            const int kb = after(a, dc.others[0]) > after(a, dc.others[1]) ? 0 : 1;
            const int kc = 1 - kb;
            items.push_back({{base[a], base[dc.others[kb]], dc.signs[kb], g}, {dc.vertex, dc.others[kb]}});
            items.push_back({{base[a] + 1, base[dc.others[kc]], dc.signs[kc], g}, {dc.vertex, dc.others[kc]}});
        }
    }
    for (auto& [c, o] : items)
        c = normalized(c);
    std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.first.p < y.first.p; });

    Expansion out;
    std::vector<Chord> chords;
    for (const auto& [c, o] : items) {
        chords.push_back(c);
        out.origins.push_back(o);
    }
    out.diagram = SignedChordDiagram(base[n], std::move(chords), std::move(groups));
    return out;
}

SignedChordDiagram expand(const SignedStarChordDiagram& d)
{
    return expand_with_origins(d).diagram;
}

int surgery_circle_count(const SignedChordDiagram& d)
{
    const int n = d.point_count();
    if (n == 0)
        return 1;
    // end 2x is x-e, end 2x+1 is x+e
    UnionFind uf(2 * n);
    int components = 2 * n;
    auto join = [&](int a, int b) {
        if (uf.unite(a, b))
            --components;
    };
    std::vector<bool> covered(n, false);
    for (int x = 0; x < n; ++x)
        join(2 * x + 1, 2 * ((x + 1) % n));
    for (const Chord& c : d.chords()) {
        covered[c.p] = covered[c.q] = true;
        if (c.sign == Sign::Positive) {
            join(2 * c.p + 1, 2 * c.q);
            join(2 * c.p, 2 * c.q + 1);
        } else {
            join(2 * c.p + 1, 2 * c.q + 1);
            join(2 * c.p, 2 * c.q);
        }
    }
    for (int x = 0; x < n; ++x)
        if (!covered[x])
            join(2 * x, 2 * x + 1);
    return components;
}

Gf2Matrix intersection_matrix(const SignedChordDiagram& d)
{
    const int n = d.size();
    Gf2Matrix m(n);
    for (int i = 0; i < n; ++i) {
        m.set(i, i, d.chord(i).sign == Sign::Negative);
        for (int j = i + 1; j < n; ++j) {
            if (d.linked(i, j)) {
                m.set(i, j, true);
                m.set(j, i, true);
            }
        }
    }
    return m;
}

SignedChordDiagram restrict_to(const SignedChordDiagram& d, const std::vector<int>& chord_indices)
{
    std::vector<int> renumber(d.point_count(), -1);
    for (int i : chord_indices) {
        renumber.at(d.chord(i).p) = 0;
        renumber.at(d.chord(i).q) = 0;
    }
    int next = 0;
    for (int& r : renumber)
        if (r == 0)
            r = next++;
    std::vector<Chord> chords;
    for (int i : chord_indices) {
        Chord c = d.chord(i);
        c.p = renumber[c.p];
        c.q = renumber[c.q];
        chords.push_back(c);
    }
    return {next, std::move(chords), d.groups()};
}

SignedChordDiagram reverse_segment_transform(const SignedChordDiagram& d, int c)
{
    if (c < 0 || c >= d.size())
        throw Error("reverse_segment_transform: no such chord");
    const Chord cut = d.chord(c);
    if (cut.sign != Sign::Negative)
        throw Error("reverse_segment_transform: chord must be negative");

    auto inside = [&](int x) { return cut.p < x && x < cut.q; };
    auto image = [&](int x) {
        int y = inside(x) ? cut.p + cut.q - x : x;
        // drop the two endpoints of the cut chord
        return y - (y > cut.p ? 1 : 0) - (y > cut.q ? 1 : 0);
    };
    std::vector<Chord> chords;
    for (int i = 0; i < d.size(); ++i) {
        if (i == c)
            continue;
        Chord x = d.chord(i);
        const bool crosses = inside(x.p) != inside(x.q);
        x.p = image(x.p);
        x.q = image(x.q);
        if (crosses)
            x.sign = flip(x.sign);
        chords.push_back(x);
    }
    // a group left without chords disappears
    std::vector<int> group_index(d.groups().size(), -1);
    std::vector<ChordGroup> groups;
    for (int g = 0; g < static_cast<int>(d.groups().size()); ++g) {
        if (d.members(g).size() == 1 && d.members(g)[0] == c)
            continue;
        group_index[g] = static_cast<int>(groups.size());
        groups.push_back(d.groups()[g]);
    }
    for (Chord& x : chords)
        x.group = group_index[x.group];
    return {d.point_count() - 2, std::move(chords), std::move(groups)};
}

} // namespace stargenus
