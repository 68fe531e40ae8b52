#include <doctest.h>

#include "gdiff/io.hpp"

using namespace gdiff;

TEST_CASE("parse_group_spec") {
    GroupSpec g = parse_group_spec("2:2;3:1");
    CHECK(g == make_group(SylowSpec(2, {2}), SylowSpec(3, {1})));
    CHECK(parse_group_spec("3:1;2:2") == g);  // canonicalized
    CHECK(format_group_spec(g) == "2:2;3:1");
    CHECK(parse_group_spec(format_group_spec(g)) == g);

    CHECK_THROWS_AS(parse_group_spec("4:1;3:1"), group_error);       // non-prime
    CHECK_THROWS_AS(parse_group_spec("2:1,2;3:1"), group_error);     // increasing
    CHECK_THROWS_AS(parse_group_spec("5:1;5:2"), equal_primes_error);
    CHECK_THROWS_AS(parse_group_spec("2:1"), parse_error);           // no ';'
    CHECK_THROWS_AS(parse_group_spec("2:1;3:1;5:1"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("2:;3:1"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("2:1,;3:1"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("2x:1;3:1"), parse_error);
}

TEST_CASE("graph file round trip") {
    GroupSpec spec = parse_group_spec("2:1;3:1");
    auto L = difference_graph(spec);
    GraphFile f = to_graph_file(L);
    CHECK(f.vertex_count == 3);
    // a path: (1,0) sorts after the (0,*) vertices and is the middle vertex
    CHECK(f.edges == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});

    std::string text = write_graph(f);
    GraphFile g = read_graph(text);
    CHECK(g.vertex_count == f.vertex_count);
    CHECK(g.edges == f.edges);
    CHECK(g.labels == f.labels);
    CHECK(g.spec == f.spec);
    CHECK(write_graph(g) == text);  // byte-identical round trip
}

TEST_CASE("empty graph file") {
    GraphFile f;
    std::string text = write_graph(f);
    CHECK(text == "gdiff-graph 1\ndirected 0\nvertices 0\nedges 0\n");
    GraphFile g = read_graph(text);
    CHECK(g.vertex_count == 0);
    CHECK(g.edges.empty());
}

TEST_CASE("malformed graph files") {
    CHECK_THROWS_AS(read_graph(""), parse_error);
    CHECK_THROWS_AS(read_graph("bogus 1\n"), parse_error);
    std::string base = "gdiff-graph 1\ndirected 0\nvertices 3\nedges 2\n";
    CHECK_THROWS_AS(read_graph(base + "0 1\n0 1\n"), parse_error);  // duplicate edge
    CHECK_THROWS_AS(read_graph(base + "0 1\n2 1\n"), parse_error);  // u > v
    CHECK_THROWS_AS(read_graph(base + "0 1\n1 5\n"), parse_error);  // out of range
    CHECK_THROWS_AS(read_graph(base + "0 1\n2 2\n"), parse_error);  // loop
    CHECK_THROWS_AS(read_graph(base + "0 1\n"), parse_error);       // truncated
    // line number in the diagnostic
    try {
        read_graph(base + "0 1\n0 1\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("line 6") != std::string::npos);
    }
}

TEST_CASE("directed graph file") {
    GroupCache c(parse_group_spec("2:1;3:1"));
    GraphFile f = to_graph_file(directed_power_graph(c));
    CHECK(f.directed);
    std::string text = write_graph(f);
    GraphFile g = read_graph(text);
    CHECK(g.directed);
    CHECK(g.edges == f.edges);
    CHECK(write_graph(g) == text);
    CHECK_THROWS_AS(graph_from_file(g), parse_error);  // undirected expected
}

TEST_CASE("export_dot") {
    GraphFile f;
    f.vertex_count = 3;
    f.edges = {{0, 1}, {1, 2}};
    std::string dot = export_dot(f);
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("1 -- 2;") != std::string::npos);
    CHECK(export_dot(f) == dot);  // deterministic

    f.labels[0] = "1;0";
    std::string labeled = export_dot(f);
    CHECK(labeled.find("label=\"1;0\"") != std::string::npos);

    GraphFile d;
    d.directed = true;
    d.vertex_count = 2;
    d.edges = {{0, 1}};
    CHECK(export_dot(d).find("digraph G {") == 0);
    CHECK(export_dot(d).find("0 -> 1;") != std::string::npos);
}

TEST_CASE("labels survive the file format") {
    auto L = difference_graph(parse_group_spec("2:2;3:1"));
    GraphFile f = to_graph_file(L);
    GraphFile g = read_graph(write_graph(f));
    REQUIRE(g.labels.size() == static_cast<std::size_t>(L.graph.vertex_count()));
    for (int v = 0; v < L.graph.vertex_count(); ++v)
        CHECK(g.labels.at(v) == format_label(L.labels[static_cast<std::size_t>(v)]));
    REQUIRE(g.spec.has_value());
    CHECK(parse_group_spec(*g.spec) == L.spec);
}
