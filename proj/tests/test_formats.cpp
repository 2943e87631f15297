#include "stargenus/formats.hpp"
#include "stargenus/generators.hpp"
#include "stargenus/genus_solver.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace stargenus {
namespace {

TEST(GraphFile, Parse)
{
    const StarGraph g = read_graph("# g3\nvertex v 6\nedge v.0 v.2   # loop\n\nedge v.1 v.4\nedge v.3 v.5\n");
    EXPECT_EQ(g, testing::g3());
}

int error_line(std::string_view text)
{
    try {
        read_graph(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

TEST(GraphFile, ErrorsNameTheLine)
{
    EXPECT_EQ(error_line("vertex a 4\nvertex b 5\n"), 2);
    EXPECT_EQ(error_line("vertex a 4\nedge a.0 b.1\n"), 2);
    EXPECT_EQ(error_line("vertex a 4\nedge a.0 a.1\nedge a.2 a.9\n"), 3);
    EXPECT_EQ(error_line("vertex a 4\nedge a.0 a.1\n"), 1);
    EXPECT_EQ(error_line("vertex a-b 4\n"), 1);
    EXPECT_EQ(error_line("vertex a four\n"), 1);
    EXPECT_EQ(error_line("\n\nfoo\n"), 3);
    EXPECT_EQ(error_line("vertex a 4\nedge a.0\n"), 2);
}

TEST(GraphFile, RoundTrip)
{
    Rng rng(2);
    for (int i = 0; i < 100; ++i) {
        const StarGraph g = random_star_graph(rng, 1 + i % 9);
        EXPECT_EQ(read_graph(format_graph(g)), g);
    }
}

TEST(DiagramFile, Parse)
{
    const auto d = parse_diagram("points 4\nchord 0 1 - triad:v\nchord 3 2 - triad:v\n");
    EXPECT_EQ(d.size(), 2);
    EXPECT_EQ(d.chord(1), (Chord{2, 3, Sign::Negative, 0}));
    EXPECT_EQ(d.groups().front().kind, GroupKind::TriadPair);
}

TEST(DiagramFile, Errors)
{
    EXPECT_THROW(parse_diagram("chord 0 1 + free:a\n"), ParseError);
    EXPECT_THROW(parse_diagram("points 2\nchord 0 1 * free:a\n"), ParseError);
    EXPECT_THROW(parse_diagram("points 2\nchord 0 1 + odd:a\n"), ParseError);
    EXPECT_THROW(parse_diagram("points 4\nchord 0 1 + free:a\n"), ParseError);
    EXPECT_THROW(parse_diagram("points 4\nchord 0 1 + triad:a\nchord 2 3 + free:b\n"), ParseError);
    EXPECT_THROW(parse_diagram("points 4\nchord 0 1 + free:a\nchord 1 3 + free:b\n"), ParseError);
    try {
        parse_diagram("points 2\nchord 0 x + free:a\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
    }
}

TEST(DiagramFile, RoundTrip)
{
    Rng rng(6);
    for (int i = 0; i < 200; ++i) {
        const auto d = random_chord_diagram(rng, i % 13, 0.5, i % 2 == 0);
        EXPECT_EQ(parse_diagram(format_diagram(d)), d);
    }
    for (int i = 0; i < 50; ++i) {
        const StarGraph g = random_star_graph(rng, 1 + i % 6);
        const auto d = expansion_of(g, build_rotating_splitting_circuit(g)).diagram;
        EXPECT_EQ(parse_diagram(format_diagram(d)), d);
    }
}

TEST(DiagramFile, Detection)
{
    EXPECT_TRUE(looks_like_diagram("# c\n\npoints 0\n"));
    EXPECT_FALSE(looks_like_diagram("vertex v 4\n"));
    EXPECT_FALSE(looks_like_diagram(""));
}

} // namespace
} // namespace stargenus
