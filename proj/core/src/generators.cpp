#include "stargenus/generators.hpp"

#include <algorithm>
#include <numeric>

namespace stargenus {

namespace {

// Calls visit(pairs) for each perfect matching of 0..n-1.
void for_each_matching(int n, const std::function<void(const std::vector<std::pair<int, int>>&)>& visit)
{
    std::vector<bool> used(n, false);
    std::vector<std::pair<int, int>> pairs;
    std::function<void()> rec = [&] {
        int first = 0;
        while (first < n && used[first])
            ++first;
        if (first == n) {
            visit(pairs);
            return;
        }
        used[first] = true;
        for (int other = first + 1; other < n; ++other) {
            if (used[other])
                continue;
            used[other] = true;
            pairs.push_back({first, other});
            rec();
            pairs.pop_back();
            used[other] = false;
        }
        used[first] = false;
    };
    rec();
}

std::vector<HalfEdgeRef> half_edges(const std::vector<int>& degrees)
{
    std::vector<HalfEdgeRef> out;
    for (int v = 0; v < static_cast<int>(degrees.size()); ++v)
        for (int s = 0; s < degrees[v]; ++s)
            out.push_back({v, s});
    return out;
}

StarGraph make_graph(const std::vector<int>& degrees)
{
    StarGraph g;
    for (int v = 0; v < static_cast<int>(degrees.size()); ++v)
        g.add_vertex("v" + std::to_string(v), degrees[v]);
    return g;
}

} // namespace

StarGraph random_star_graph(Rng& rng, int vertices, double six_fraction)
{
    if (vertices < 1)
        throw Error("random_star_graph: need at least one vertex");
    std::bernoulli_distribution six(six_fraction);
    for (;;) {
        std::vector<int> degrees;
        for (int v = 0; v < vertices; ++v)
            degrees.push_back(six(rng) ? 6 : 4);
        auto hs = half_edges(degrees);
        std::shuffle(hs.begin(), hs.end(), rng);
        StarGraph g = make_graph(degrees);
        for (std::size_t i = 0; i < hs.size(); i += 2)
            g.add_edge(hs[i], hs[i + 1]);
        if (g.is_connected())
            return g;
    }
}

void for_each_small_graph(const std::function<void(const StarGraph&)>& visit)
{
    const std::vector<std::vector<int>> degree_choices{{4}, {6}, {4, 4}, {4, 6}, {6, 6}};
    for (const auto& degrees : degree_choices) {
        const auto hs = half_edges(degrees);
        for_each_matching(static_cast<int>(hs.size()), [&](const std::vector<std::pair<int, int>>& pairs) {
            StarGraph g = make_graph(degrees);
            for (const auto& [a, b] : pairs)
                g.add_edge(hs[a], hs[b]);
            if (g.is_connected())
                visit(g);
        });
    }
}

void for_each_chord_diagram(int chords, const std::function<void(const SignedChordDiagram&)>& visit)
{
    std::vector<ChordGroup> groups;
    for (int i = 0; i < chords; ++i)
        groups.push_back({GroupKind::Free, "c" + std::to_string(i)});
    for_each_matching(2 * chords, [&](const std::vector<std::pair<int, int>>& pairs) {
        for (std::uint32_t signs = 0; signs < (1U << chords); ++signs) {
            std::vector<Chord> cs;
            for (int i = 0; i < chords; ++i)
                cs.push_back({pairs[i].first, pairs[i].second, (signs >> i) & 1U ? Sign::Negative : Sign::Positive, i});
            visit(SignedChordDiagram(2 * chords, std::move(cs), groups));
        }
    });
}

SignedChordDiagram random_chord_diagram(Rng& rng, int chords, double negative_fraction, bool grouped)
{
    std::vector<int> points(2 * chords);
    std::iota(points.begin(), points.end(), 0);
    std::shuffle(points.begin(), points.end(), rng);
    std::bernoulli_distribution negative(negative_fraction);
    std::bernoulli_distribution triad(0.5);

    std::vector<Chord> cs;
    for (int i = 0; i < chords; ++i)
        cs.push_back({points[2 * i], points[2 * i + 1], negative(rng) ? Sign::Negative : Sign::Positive, 0});

    std::vector<ChordGroup> groups;
    int i = 0;
    if (grouped) {
        // chords are in random order already
        for (; i + 1 < chords; i += 2) {
            const int g = static_cast<int>(groups.size());
            groups.push_back({triad(rng) ? GroupKind::TriadPair : GroupKind::DoublePair, "g" + std::to_string(g)});
            cs[i].group = cs[i + 1].group = g;
        }
    }
    for (; i < chords; ++i) {
        const int g = static_cast<int>(groups.size());
        groups.push_back({GroupKind::Free, "g" + std::to_string(g)});
        cs[i].group = g;
    }
    return SignedChordDiagram(2 * chords, std::move(cs), std::move(groups));
}

} // namespace stargenus
