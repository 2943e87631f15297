// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "cli.hpp"
#include "stargenus/fast_tests.hpp"
#include "stargenus/formats.hpp"
#include "stargenus/generators.hpp"
#include "stargenus/genus_solver.hpp"
#include "stargenus/surface_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace sg = stargenus;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t)
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

int failures = 0;

void report(int criterion, const char* title, bool ok, const std::string& detail)
{
    std::printf("criterion %d %-28s %s  %s\n", criterion, title, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    failures += !ok;
}

void reproducer(const std::string& what, const sg::StarGraph& g)
{
    std::cerr << "reproducer (" << what << "):\n" << sg::format_graph(g);
}

void reproducer(const std::string& what, const sg::SignedChordDiagram& d)
{
    std::cerr << "reproducer (" << what << "):\n" << sg::format_diagram(d);
}

// ---- 1 ----

void circuit_nullity()
{
    const auto start = Clock::now();
    int checked = 0, bad = 0;
    auto check = [&](const sg::SignedChordDiagram& d) {
        ++checked;
        if (sg::surgery_circle_count(d) != 1 + sg::intersection_matrix(d).corank()) {
            if (bad++ == 0)
                reproducer("circuit-nullity", d);
        }
    };
    for (int m = 0; m <= 4; ++m)
        sg::for_each_chord_diagram(m, check);
    const int exhaustive = checked;
    sg::Rng rng(1);
    for (int i = 0; i < 1000; ++i)
        check(sg::random_chord_diagram(rng, i % 13, 0.5));
    const double t = seconds_since(start);
    std::ostringstream os;
    os << exhaustive << " exhaustive + " << checked - exhaustive << " random diagrams, " << bad << " mismatches, "
       << t << " s";
    report(1, "circuit-nullity", bad == 0 && t < 10.0, os.str());
}

// ---- 2 ----

void circuit_existence()
{
    sg::Rng rng(2);
    std::uniform_int_distribution<int> size(1, 8);
    int bad = 0, sixes = 0, fours = 0;
    for (int i = 0; i < 500; ++i) {
        const sg::StarGraph g = sg::random_star_graph(rng, size(rng));
        for (sg::VertexId v = 0; v < g.vertex_count(); ++v)
            (g.degree(v) == 6 ? sixes : fours) += 1;
        try {
            sg::CircuitOptions opts;
            if (i % 2)
                opts.seed = i;
            const auto c = sg::build_rotating_splitting_circuit(g, opts);
            if (!sg::check_circuit(g, c).empty() && bad++ == 0)
                reproducer("invalid circuit", g);
        } catch (const sg::Error& e) {
            if (bad++ == 0)
                reproducer(e.what(), g);
        }
    }
    std::ostringstream os;
    os << "500 graphs (" << fours << " 4-vertices, " << sixes << " 6-vertices), " << bad << " failures";
    report(2, "circuit existence", bad == 0, os.str());
}

// ---- 3, 4, 5 ----

std::vector<sg::StarGraph> gate_corpus(int wanted)
{
    sg::Rng rng(3);
    std::uniform_int_distribution<int> size(1, 6);
    std::vector<sg::StarGraph> out;
    while (static_cast<int>(out.size()) < wanted) {
        sg::StarGraph g = sg::random_star_graph(rng, size(rng));
        const auto d = sg::expansion_of(g, sg::build_rotating_splitting_circuit(g)).diagram;
        if (sg::source_sink_gate(d) == sg::Orientability::Nonorientable)
            out.push_back(std::move(g));
    }
    return out;
}

void oracle_equivalence(const std::vector<sg::StarGraph>& corpus)
{
    const auto start = Clock::now();
    int bad = 0, colorings = 0;
    for (const sg::StarGraph& g : corpus) {
        const auto circuit = sg::build_rotating_splitting_circuit(g);
        const sg::Expansion ex = sg::expansion_of(g, circuit);
        const auto spectrum = sg::genus_spectrum(ex.diagram).spectrum;

        std::set<int> traced;
        bool all_nonorientable = true;
        for (const sg::AtomGenus& a : sg::atom_spectrum(g)) {
            all_nonorientable &= !a.orientable;
            traced.insert(a.genus);
        }

        std::set<std::vector<sg::Side>> reached, permissible;
        bool per_coloring = true;
        const int n = g.vertex_count();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            ++colorings;
            const auto c = sg::AngleColoring::from_mask(n, mask);
            const auto p = sg::partition_for_coloring(g, circuit, ex, c);
            if (!sg::permissibility_violation(ex.diagram, p.sides).empty() ||
                sg::genus_of_partition(ex.diagram, p) != sg::trace_atom(g, c).genus())
                per_coloring = false;
            else
                reached.insert(p.sides);
        }
        sg::for_each_permissible_partition(ex.diagram, false,
                                           [&](const std::vector<sg::Side>& s) { permissible.insert(s); });

        if (!(all_nonorientable && spectrum == traced && per_coloring && reached == permissible) && bad++ == 0)
            reproducer("rank spectrum differs from traced atoms", g);
    }
    const double t = seconds_since(start);
    std::ostringstream os;
    os << corpus.size() << " graphs, " << colorings << " colorings, " << bad << " mismatches, " << t << " s";
    report(3, "spectrum = traced atoms", bad == 0 && t < 60.0, os.str());
}

void cell_count_identity(const std::vector<sg::StarGraph>& corpus)
{
    int bad = 0, partitions = 0;
    for (const sg::StarGraph& g : corpus) {
        const auto d = sg::expansion_of(g, sg::build_rotating_splitting_circuit(g)).diagram;
        const sg::Gf2Matrix m = sg::intersection_matrix(d);
        sg::for_each_permissible_partition(d, false, [&](const std::vector<sg::Side>& s) {
            ++partitions;
            const auto w = sg::chords_on(s, sg::Side::W), b = sg::chords_on(s, sg::Side::B);
            const int corank_w = sg::principal_submatrix(m, w).corank();
            const int corank_b = sg::principal_submatrix(m, b).corank();
            const auto [circles_w, circles_b] = sg::separation_surgery_check(d, s);
            if (corank_w + corank_b + 2 != circles_w + circles_b && bad++ == 0)
                reproducer("corank identity", d);
        });
    }
    std::ostringstream os;
    os << partitions << " partitions, " << bad << " mismatches";
    report(4, "corank cell count", bad == 0, os.str());
}

void fast_test_equivalence(const std::vector<sg::StarGraph>& corpus)
{
    std::vector<sg::StarGraph> graphs = corpus;
    int small = 0;
    sg::for_each_small_graph([&](const sg::StarGraph& g) {
        const auto d = sg::expansion_of(g, sg::build_rotating_splitting_circuit(g)).diagram;
        if (sg::source_sink_gate(d) == sg::Orientability::Nonorientable) {
            graphs.push_back(g);
            ++small;
        }
    });

    sg::KleinOptions literal;
    literal.literal_transform = true;
    int bad = 0, literal_mismatches = 0;
    for (const sg::StarGraph& g : graphs) {
        const bool rp2 = sg::rp2_embeddable(g).embeddable;
        const bool klein = sg::klein_embeddable(g).embeddable;
        const bool want_rp2 = sg::is_genus_achievable(g, 1);
        const bool want_klein = sg::is_genus_achievable(g, 2);
        if (rp2 != want_rp2) {
            ++bad;
            reproducer(std::string("rp2 says ") + (rp2 ? "yes" : "no"), g);
        }
        if (klein != want_klein) {
            ++bad;
            reproducer(std::string("klein says ") + (klein ? "yes" : "no"), g);
        }
        literal_mismatches += sg::klein_embeddable(g, literal).embeddable != want_klein;
    }
    std::ostringstream os;
    os << graphs.size() << " graphs (" << small << " exhaustive on <= 2 vertices), " << bad
       << " mismatches; literal surgery transform would disagree on " << literal_mismatches;
    report(5, "fast tests = spectrum", bad == 0, os.str());
}

// ---- 6 ----

void invariance()
{
    sg::Rng rng(6);
    std::uniform_int_distribution<int> size(1, 6);
    int graphs = 0, bad = 0;
    while (graphs < 100) {
        const sg::StarGraph g = sg::random_star_graph(rng, size(rng));
        const auto d = sg::expansion_of(g, sg::build_rotating_splitting_circuit(g)).diagram;
        if (sg::source_sink_gate(d) == sg::Orientability::Orientable)
            continue;
        ++graphs;
        const auto base = sg::genus_spectrum(d).spectrum;
        bool ok = true;
        for (sg::VertexId v = 0; v < g.vertex_count(); ++v)
            ok &= sg::genus_spectrum(sg::reverse_orientation_at(g, v)).spectrum == base;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            sg::CircuitOptions opts;
            opts.seed = seed * 7919 + graphs;
            ok &= sg::genus_spectrum(g, opts).spectrum == base;
        }
        if (!ok && bad++ == 0)
            reproducer("spectrum depends on orientation or circuit", g);
    }
    std::ostringstream os;
    os << graphs << " graphs, per-vertex reversal + 5 seeded circuits each, " << bad << " mismatches";
    report(6, "invariance", bad == 0, os.str());
}

// ---- 7 ----

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void golden_cli()
{
    struct Case {
        const char* graph;
        const char* command;
        int code;
    };
    const Case cases[] = {{"g1", "spectrum", 0}, {"g1", "rp2", 0},         {"g1", "klein", 1},
                          {"g3", "spectrum", 0}, {"g3", "rp2", 1},         {"g3", "klein", 0},
                          {"orientable", "spectrum", 2}};
    const std::string dir = STARGENUS_GOLDEN_DIR;
    int bad = 0;
    for (const Case& c : cases) {
        const std::string file = dir + "/" + c.graph + ".star";
        std::string outputs[2];
        int codes[2];
        for (int k = 0; k < 2; ++k) {
            std::ostringstream out, err;
            codes[k] = sg::cli::run({"stargenus", c.command, "--json", file}, out, err);
            outputs[k] = out.str();
        }
        const std::string expected = slurp(dir + "/" + c.graph + "." + c.command + ".json");
        if (codes[0] != c.code || codes[1] != c.code || outputs[0] != expected || outputs[1] != expected) {
            ++bad;
            std::cerr << "golden mismatch: " << c.command << ' ' << c.graph << "\n" << outputs[0];
        }
    }
    std::ostringstream os;
    os << std::size(cases) << " golden runs (G1, G3, orientable variant), " << bad << " mismatches";
    report(7, "worked examples", bad == 0, os.str());
}

// ---- 8 ----

void quadratic_visits()
{
    sg::Rng rng(8);
    std::vector<double> ratios;
    std::ostringstream os;
    for (int n : {50, 100, 200, 400}) {
        double sum = 0;
        const int samples = 5;
        for (int k = 0; k < samples; ++k) {
            sg::SignedChordDiagram d;
            do
                d = sg::random_chord_diagram(rng, n, 0.5, true);
            while (sg::source_sink_gate(d) == sg::Orientability::Orientable);
            sg::PairCounter rp2, mobius;
            sg::rp2_embeddable(d, &rp2);
            sg::klein_case_mobius(d, &mobius);
            sum += static_cast<double>(rp2.visits + mobius.visits) / (static_cast<double>(n) * n);
        }
        ratios.push_back(sum / samples);
        os << "n=" << n << ": " << ratios.back() << "  ";
    }
    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    os << "max/min " << *hi / *lo;
    report(8, "quadratic pair visits", *hi <= 2.0 * *lo, os.str());
}

} // namespace

int main()
{
    circuit_nullity();
    circuit_existence();
    const auto corpus = gate_corpus(200);
    oracle_equivalence(corpus);
    cell_count_identity(corpus);
    fast_test_equivalence(corpus);
    invariance();
    golden_cli();
    quadratic_visits();
    std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria FAILED");
    return failures == 0 ? 0 : 1;
}
