#include <sstream>

#include "doctest.h"
#include "eptas/graph.hpp"

using namespace eptas;

namespace {

Graph parse(const std::string& text) {
    std::istringstream in(text);
    return load_graph(in);
}

}  // namespace

TEST_CASE("instance parsing") {
    Graph tri = parse("p 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(tri.num_vertices() == 3);
    CHECK(tri.num_edges() == 3);
    CHECK(tri.has_edge(0, 2));

    Graph edgeless = parse("p 2 0\n");
    CHECK(edgeless.num_vertices() == 2);
    CHECK(edgeless.num_edges() == 0);

    CHECK_THROWS_AS(parse("p 2 1\ne 1 1\n"), ParseError);             // self-loop
    CHECK_THROWS_AS(parse("p 2 2\ne 1 2\ne 2 1\n"), ParseError);      // duplicate
    CHECK_THROWS_AS(parse("p 3 2\ne 1 2\n"), ParseError);             // count mismatch
    CHECK_THROWS_AS(parse("p 2 1\ne 1 3\n"), ParseError);             // out of range
    CHECK_THROWS_AS(parse("e 1 2\n"), ParseError);                    // edge before header
    CHECK_NOTHROW(parse("c hello\np 1 0\nc bye\n"));

    // non-planar density only warns
    std::istringstream k5("p 5 10\ne 1 2\ne 1 3\ne 1 4\ne 1 5\ne 2 3\ne 2 4\ne 2 5\ne 3 4\ne 3 5\ne 4 5\n");
    std::vector<std::string> warnings;
    load_graph(k5, &warnings);
    CHECK(warnings.size() == 1);
}

TEST_CASE("save/load round trip") {
    Graph g = gen_stacked_planar(30, 99, 0.8);
    std::ostringstream os;
    save_graph(os, g);
    Graph h = parse(os.str());
    CHECK(h.num_vertices() == g.num_vertices());
    CHECK(h.edges() == g.edges());
}

TEST_CASE("grid generator") {
    CHECK_THROWS_AS(gen_grid(1), std::invalid_argument);

    Graph c4 = gen_grid(2);
    CHECK(c4.num_vertices() == 4);
    CHECK(c4.num_edges() == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    Graph g6 = gen_grid(6);
    CHECK(g6.num_vertices() == 36);
    CHECK(g6.num_edges() == 60);

    CHECK(gen_grid(3).degree(4) == 4);  // center of the 3x3 grid

    for (int r = 2; r <= 10; ++r) {
        Graph g = gen_grid(r);
        int d2 = 0, d3 = 0, d4 = 0;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            int d = g.degree(v);
            if (d == 2) ++d2;
            if (d == 3) ++d3;
            if (d == 4) ++d4;
        }
        CHECK(d2 == 4);
        CHECK(d3 == 4 * (r - 2));
        CHECK(d4 == (r - 2) * (r - 2));
        CHECK(g.num_edges() <= 3LL * g.num_vertices() - 6);
    }
}

TEST_CASE("triangulated grid generator") {
    Graph pre = gen_gamma(6, false);
    CHECK(pre.num_vertices() == 36);
    int internal6 = 0, external4 = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Vertex v = i * 6 + j;
            bool ext = i == 0 || j == 0 || i == 5 || j == 5;
            if (!ext && pre.degree(v) == 6) ++internal6;
            bool corner = (i == 0 || i == 5) && (j == 0 || j == 5);
            if (ext && !corner && pre.degree(v) == 4) ++external4;
        }
    CHECK(internal6 == 16);
    CHECK(external4 == 16);

    for (int r = 2; r <= 8; ++r) {
        Graph g = gen_gamma(r);
        CHECK(g.num_edges() <= 3LL * g.num_vertices() - 6);
        // the join corner reaches every external vertex
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                Vertex v = i * r + j;
                bool ext = i == 0 || j == 0 || i == r - 1 || j == r - 1;
                if (ext && v != 0) CHECK(g.has_edge(0, v));
            }
    }
    CHECK_NOTHROW(gen_gamma(2));  // no internal faces, still valid
}

TEST_CASE("stacked planar generator") {
    Graph k3 = gen_stacked_planar(3, 17);
    CHECK(k3.num_vertices() == 3);
    CHECK(k3.num_edges() == 3);

    Graph k4 = gen_stacked_planar(4, 17);
    CHECK(k4.num_vertices() == 4);
    CHECK(k4.num_edges() == 6);

    Graph g = gen_stacked_planar(50, 7);
    CHECK(g.num_edges() == 3 * 50 - 6);
    CHECK(is_connected(g));

    Graph again = gen_stacked_planar(50, 7);
    CHECK(again.edges() == g.edges());

    for (uint64_t seed = 0; seed < 8; ++seed) {
        Graph s = gen_stacked_planar(40, seed, 0.7);
        CHECK(s.num_edges() <= 3LL * s.num_vertices() - 6);
    }
}

TEST_CASE("components") {
    Graph two_tri = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto comps = components(two_tri);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 3);
    CHECK(comps[1].size() == 3);
    CHECK(comps[0].members().front() == 0);

    CHECK(components(gen_grid(4)).size() == 1);
    CHECK(components(Graph(3)).size() == 3);

    // partition properties on random graphs
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        Graph g = gen_stacked_planar(40, seed, 0.5);
        auto cs = components(g);
        std::vector<int> owner(g.num_vertices(), -1);
        for (size_t c = 0; c < cs.size(); ++c)
            for (Vertex v : cs[c]) {
                CHECK(owner[v] == -1);
                owner[v] = static_cast<int>(c);
            }
        for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK(owner[v] >= 0);
        for (auto [u, v] : g.edges()) CHECK(owner[u] == owner[v]);
    }
}

TEST_CASE("ball") {
    Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(ball(path, VertexSet({0}), 1).members() == std::vector<Vertex>{0, 1});
    CHECK(ball(path, VertexSet({0, 2}), 0).members() == std::vector<Vertex>{0, 2});

    // corner ball of radius 2 in the 5x5 grid, counted by hand
    Graph g5 = gen_grid(5);
    CHECK(ball(g5, VertexSet({0}), 2).size() == 6);

    // monotone and stabilizing
    Graph g = gen_stacked_planar(30, 3, 0.6);
    VertexSet s({0, 5});
    VertexSet prev = ball(g, s, 0);
    for (int r = 1; r <= g.num_vertices(); ++r) {
        VertexSet cur = ball(g, s, r);
        CHECK(set_difference(prev, cur).empty());
        prev = cur;
    }
    VertexSet comp_union;
    for (const auto& c : components(g))
        for (Vertex v : s)
            if (c.contains(v)) comp_union = set_union(comp_union, c);
    CHECK(prev == comp_union);
}

TEST_CASE("neighborhood") {
    Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(neighborhood(star, VertexSet({0})).members() == std::vector<Vertex>{1, 2, 3, 4});

    Graph tri = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(neighborhood(tri, VertexSet({0, 1, 2})).empty());
    CHECK(neighborhood(tri, VertexSet({0})).members() == std::vector<Vertex>{1, 2});
}
