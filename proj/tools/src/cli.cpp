#include "cli.hpp"

#include "stargenus/cross_check.hpp"
#include "stargenus/fast_tests.hpp"
#include "stargenus/formats.hpp"
#include "stargenus/generators.hpp"
#include "stargenus/genus_solver.hpp"
#include "stargenus/surface_oracle.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace stargenus::cli {

namespace {

using nlohmann::json;

constexpr int kSchema = 1;

struct Options {
    std::string file;
    bool json = false;
    std::optional<std::uint64_t> seed;
    int g = 0;
    bool literal = false;
    bool first_negative_only = false;
    std::uint64_t family_seed = 1;
    int count = 200;
    int max_vertices = 6;
};

struct Input {
    bool is_diagram = false;
    StarGraph graph;
    SignedChordDiagram diagram;
};

class Command {
public:
    Command(std::string name, const Options& opts, std::ostream& out) : name_(std::move(name)), opts_(opts), out_(out) {}

    const std::string& name() const { return name_; }

    json header() const { return json{{"schema", kSchema}, {"command", name_}}; }

    void emit(const json& j, const std::string& text) const
    {
        if (opts_.json)
            out_ << j.dump(2) << '\n';
        else
            out_ << text;
    }

private:
    std::string name_;
    const Options& opts_;
    std::ostream& out_;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Input load(const std::string& path, bool allow_diagram)
{
    const std::string text = read_file(path);
    Input in;
    try {
        if (looks_like_diagram(text)) {
            if (!allow_diagram)
                throw Error("this command needs a graph file, not a chord diagram");
            in.is_diagram = true;
            in.diagram = parse_diagram(text);
        } else {
            in.graph = read_graph(text);
        }
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
    return in;
}

CircuitOptions circuit_options(const Options& opts)
{
    CircuitOptions c;
    c.seed = opts.seed;
    return c;
}

SignedChordDiagram expansion_for(const Input& in, const Options& opts)
{
    if (in.is_diagram)
        return in.diagram;
    const auto circuit = build_rotating_splitting_circuit(in.graph, circuit_options(opts));
    return expansion_of(in.graph, circuit).diagram;
}

std::string sides_string(const std::vector<Side>& sides)
{
    std::string s;
    for (Side x : sides)
        s += side_char(x);
    return s;
}

std::string group_ref(const SignedChordDiagram& d, const Chord& c)
{
    const ChordGroup& g = d.groups()[c.group];
    return std::string(to_string(g.kind)) + ":" + g.label;
}

json diagram_json(const SignedChordDiagram& d)
{
    json chords = json::array();
    for (const Chord& c : d.chords())
        chords.push_back({{"p", c.p}, {"q", c.q}, {"sign", std::string(1, sign_char(c.sign))}, {"group", group_ref(d, c)}});
    return {{"points", d.point_count()}, {"chords", chords}};
}

int cmd_check(const Command& cmd, const Options& opts)
{
    const Input in = load(opts.file, true);
    json j = cmd.header();
    j["valid"] = true;
    std::ostringstream text;
    if (in.is_diagram) {
        j["kind"] = "diagram";
        j["chords"] = in.diagram.size();
        text << "valid chord diagram: " << in.diagram.size() << " chords\n";
    } else {
        j["kind"] = "graph";
        j["vertices"] = in.graph.vertex_count();
        j["edges"] = in.graph.edge_count();
        j["connected"] = in.graph.is_connected();
        text << "valid graph: " << in.graph.vertex_count() << " vertices, " << in.graph.edge_count() << " edges"
             << (in.graph.is_connected() ? "" : " (disconnected)") << '\n';
    }
    cmd.emit(j, text.str());
    return kYes;
}

int cmd_circuit(const Command& cmd, const Options& opts)
{
    const Input in = load(opts.file, false);
    const auto circuit = build_rotating_splitting_circuit(in.graph, circuit_options(opts));
    const StarGraph& g = in.graph;

    json passages = json::array();
    std::ostringstream text;
    text << "circuit of length " << circuit.size() << '\n';
    for (int i = 0; i < circuit.size(); ++i) {
        const Passage& p = circuit.passages()[i];
        passages.push_back({{"vertex", g.name(p.vertex)}, {"in", p.in}, {"out", p.out}, {"edge", circuit.edges()[i]}});
        text << i << "  " << g.name(p.vertex) << '.' << p.in << " -> " << g.name(p.vertex) << '.' << p.out
             << "  edge " << circuit.edges()[i] << '\n';
    }
    json vertices = json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const char* kind = to_string(classify_vertex(g, circuit, v));
        vertices.push_back({{"name", g.name(v)}, {"kind", kind}, {"visits", circuit.visits(v)}});
        text << g.name(v) << "  " << kind << "  visits";
        for (int pos : circuit.visits(v))
            text << ' ' << pos;
        text << '\n';
    }
    json j = cmd.header();
    j["passages"] = passages;
    j["vertices"] = vertices;
    cmd.emit(j, text.str());
    return kYes;
}

int cmd_diagram(const Command& cmd, const Options& opts)
{
    const Input in = load(opts.file, false);
    const auto circuit = build_rotating_splitting_circuit(in.graph, circuit_options(opts));
    const SignedStarChordDiagram d = build_star_chord_diagram(in.graph, circuit);

    json elements = json::array();
    std::ostringstream text;
    text << "points " << d.point_count << '\n';
    for (const auto& el : d.elements) {
        if (const auto* c = std::get_if<StarChord>(&el)) {
            const std::string& name = d.vertex_names[c->vertex];
            elements.push_back({{"type", "chord"}, {"vertex", name}, {"points", {c->p, c->q}},
                                {"signs", std::string(1, sign_char(c->sign))}});
            text << "chord " << name << ' ' << c->p << ' ' << c->q << ' ' << sign_char(c->sign) << '\n';
        } else if (const auto* t = std::get_if<Triad>(&el)) {
            const std::string& name = d.vertex_names[t->vertex];
            std::string signs;
            for (Sign s : t->signs)
                signs += sign_char(s);
            elements.push_back({{"type", "triad"}, {"vertex", name}, {"points", t->points}, {"signs", signs}});
            text << "triad " << name << ' ' << t->points[0] << ' ' << t->points[1] << ' ' << t->points[2] << ' '
                 << signs << '\n';
        } else {
            const auto& dc = std::get<DoubleChord>(el);
            const std::string& name = d.vertex_names[dc.vertex];
            const std::string signs{sign_char(dc.signs[0]), sign_char(dc.signs[1])};
            elements.push_back({{"type", "double"}, {"vertex", name},
                                {"points", {dc.principal, dc.others[0], dc.others[1]}}, {"signs", signs}});
            text << "double " << name << ' ' << dc.principal << ' ' << dc.others[0] << ' ' << dc.others[1] << ' '
                 << signs << '\n';
        }
    }
    json j = cmd.header();
    j["points"] = d.point_count;
    j["elements"] = elements;
    cmd.emit(j, text.str());
    return kYes;
}

int cmd_expand(const Command& cmd, const Options& opts)
{
    const Input in = load(opts.file, false);
    const SignedChordDiagram d = expansion_for(in, opts);
    json j = cmd.header();
    j["diagram"] = diagram_json(d);
    j["orientability"] = to_string(source_sink_gate(d));
    cmd.emit(j, format_diagram(d));
    return kYes;
}

int cmd_genus(const Command& cmd, const Options& opts)
{
    const Input in = load(opts.file, true);
    const GenusReport r = genus_spectrum(expansion_for(in, opts));
    const auto it = r.witnesses.find(opts.g);
    const bool yes = it != r.witnesses.end();
    json j = cmd.header();
    j["g"] = opts.g;
    j["achievable"] = yes;
    j["witness"] = yes ? json(sides_string(it->second.sides)) : json(nullptr);
    std::string text = yes ? "achievable\nwitness: " + sides_string(it->second.sides) + "\n" : "not achievable\n";
    cmd.emit(j, text);
    return yes ? kYes : kNo;
}

int cmd_spectrum(const Command& cmd, const Options& opts)
{
    const Input in = load(opts.file, true);
    const GenusReport r = genus_spectrum(expansion_for(in, opts));
    json witnesses = json::object();
    std::ostringstream text;
    text << "orientability: " << to_string(r.orientability) << '\n';
    text << "chords: " << r.expansion.size() << '\n';
    text << "spectrum:";
    for (int g : r.spectrum)
        text << ' ' << g;
    text << "\nminimum: " << r.min_genus() << '\n';
    for (const auto& [g, p] : r.witnesses) {
        witnesses[std::to_string(g)] = sides_string(p.sides);
        text << "witness " << g << ": " << sides_string(p.sides) << '\n';
    }
    json j = cmd.header();
    j["orientability"] = to_string(r.orientability);
    j["chords"] = r.expansion.size();
    j["spectrum"] = r.spectrum;
    j["minimum"] = r.min_genus();
    j["witnesses"] = witnesses;
    cmd.emit(j, text.str());
    return kYes;
}

int report_fast_test(const Command& cmd, const FastTestResult& r)
{
    json j = cmd.header();
    j["embeddable"] = r.embeddable;
    j["witness"] = r.witness ? json(sides_string(*r.witness)) : json(nullptr);
    std::string text = r.embeddable ? "embeddable\n" : "not embeddable\n";
    if (r.witness)
        text += "witness: " + sides_string(*r.witness) + "\n";
    cmd.emit(j, text);
    return r.embeddable ? kYes : kNo;
}

int cmd_rp2(const Command& cmd, const Options& opts)
{
    const Input in = load(opts.file, true);
    return report_fast_test(cmd, rp2_embeddable(expansion_for(in, opts)));
}

int cmd_klein(const Command& cmd, const Options& opts)
{
    const Input in = load(opts.file, true);
    KleinOptions k;
    k.literal_transform = opts.literal;
    k.first_negative_only = opts.first_negative_only;
    return report_fast_test(cmd, klein_embeddable(expansion_for(in, opts), k));
}

int cmd_oracle_verify(const Command& cmd, const Options& opts)
{
    std::vector<StarGraph> graphs;
    if (!opts.file.empty()) {
        graphs.push_back(load(opts.file, false).graph);
    } else {
        if (opts.count < 0 || opts.max_vertices < 1 || opts.max_vertices > kMaxOracleVertices)
            throw Error("oracle-verify: --count must be >= 0 and --max-vertices in 1.." +
                        std::to_string(kMaxOracleVertices));
        Rng rng(opts.family_seed);
        std::uniform_int_distribution<int> size(1, opts.max_vertices);
        for (int i = 0; i < opts.count; ++i)
            graphs.push_back(random_star_graph(rng, size(rng)));
    }

    int nonorientable = 0, partitions = 0;
    json mismatches = json::array();
    std::ostringstream text;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const CrossCheckReport r = cross_check(graphs[i]);
        nonorientable += r.nonorientable;
        partitions += r.partitions_checked;
        if (r.mismatches.empty())
            continue;
        const std::string reproducer = format_graph(graphs[i]);
        mismatches.push_back({{"index", i}, {"reasons", r.mismatches}, {"graph", reproducer}});
        text << "mismatch in graph " << i << ":\n";
        for (const auto& m : r.mismatches)
            text << "  " << m << '\n';
        text << "# reproducer\n" << reproducer;
    }
    text << (mismatches.empty() ? "ok" : "FAILED") << ": " << graphs.size() << " graphs, " << nonorientable
         << " nonorientable, " << partitions << " partitions checked\n";
    json j = cmd.header();
    j["graphs"] = graphs.size();
    j["nonorientable"] = nonorientable;
    j["partitions"] = partitions;
    j["mismatches"] = mismatches;
    cmd.emit(j, text.str());
    return mismatches.empty() ? kYes : kNo;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Checkerboard embeddings of *-graphs in nonorientable surfaces", "stargenus"};
    app.require_subcommand(1);
    Options opts;

    using Handler = int (*)(const Command&, const Options&);
    std::vector<std::pair<CLI::App*, Handler>> handlers;
    auto add = [&](const char* name, const char* about, Handler h, bool takes_seed, bool file_required = true) {
        CLI::App* sub = app.add_subcommand(name, about);
        auto* file = sub->add_option("file", opts.file, "graph or chord diagram file");
        if (file_required)
            file->required();
        sub->add_flag("--json", opts.json, "structured output");
        if (takes_seed)
            sub->add_option("--seed", opts.seed, "derive the circuit from this seed");
        handlers.push_back({sub, h});
        return sub;
    };
    add("check", "validate a graph or chord diagram file", cmd_check, false);
    add("circuit", "print a rotating-splitting circuit", cmd_circuit, true);
    add("diagram", "print the signed star-chord diagram", cmd_diagram, true);
    add("expand", "print the expanded signed chord diagram", cmd_expand, true);
    add("genus", "is nonorientable genus g achievable", cmd_genus, true)
        ->add_option("--g", opts.g, "target genus")
        ->required();
    add("spectrum", "all achievable nonorientable genera", cmd_spectrum, true);
    add("rp2", "projective plane test", cmd_rp2, true);
    CLI::App* klein = add("klein", "Klein bottle test", cmd_klein, true);
    klein->add_flag("--literal-transform", opts.literal, "drop the surgery chord instead of keeping it");
    klein->add_flag("--first-negative-only", opts.first_negative_only, "try a single surgery chord");
    CLI::App* verify = add("oracle-verify", "compare the solver against traced atoms", cmd_oracle_verify, false, false);
    verify->add_option("--seed", opts.family_seed, "seed of the random graph family");
    verify->add_option("--count", opts.count, "number of random graphs");
    verify->add_option("--max-vertices", opts.max_vertices, "largest random graph");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kYes : kError;
    }

    for (const auto& [sub, handler] : handlers) {
        if (!sub->parsed())
            continue;
        const Command cmd(sub->get_name(), opts, out);
        try {
            return handler(cmd, opts);
        } catch (const Error& e) {
            const bool gate = dynamic_cast<const OrientableGateError*>(&e) != nullptr;
            err << "error: " << e.what() << '\n';
            if (opts.json) {
                json j = cmd.header();
                j["error"] = gate ? "orientable" : "invalid";
                j["message"] = e.what();
                out << j.dump(2) << '\n';
            }
            return kError;
        }
    }
    return kError;
}

} // namespace stargenus::cli
