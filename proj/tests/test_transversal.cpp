#include "doctest.h"
#include "eptas/graph.hpp"
#include "eptas/oracle.hpp"
#include "eptas/transversal.hpp"

using namespace eptas;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, es);
}

Graph minus_set(const Graph& g, const VertexSet& x) {
    std::vector<char> in(g.num_vertices(), 0);
    for (Vertex v : x) in[v] = 1;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!in[v]) rest.push_back(v);
    return g.induced(rest).graph;
}

}  // namespace

TEST_CASE("matching transversal") {
    Graph tri = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    auto x = vc_matching_transversal(tri);
    CHECK(x.size() == 2);
    CHECK(minus_set(tri, x).num_edges() == 0);

    Graph pm = Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK(vc_matching_transversal(pm).size() == 6);

    CHECK(vc_matching_transversal(Graph(4)).empty());

    for (uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = gen_stacked_planar(4 + seed % 10, seed, 0.9);
        auto xm = vc_matching_transversal(g);
        CHECK(minus_set(g, xm).num_edges() == 0);
        auto opt = oracle::brute_force(Problem::VertexCover, g);
        CHECK(xm.size() <= 2 * opt.objective);
    }
}

TEST_CASE("feedback vertex set 2-approximation") {
    std::vector<std::pair<Vertex, Vertex>> tre;
    for (int i = 1; i < 12; ++i) tre.emplace_back(i / 2, i);
    CHECK(fvs_2approx(Graph::from_edges(12, tre)).empty());

    Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto xk4 = fvs_2approx(k4);
    CHECK(is_acyclic(minus_set(k4, xk4)));
    CHECK(xk4.size() <= 4);  // oracle optimum is 2

    auto xc5 = fvs_2approx(cycle(5));
    CHECK(xc5.size() <= 2);
    CHECK(is_acyclic(minus_set(cycle(5), xc5)));

    for (uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = gen_stacked_planar(5 + seed % 10, seed, seed % 2 ? 1.0 : 0.8);
        auto x = fvs_2approx(g);
        CHECK(is_acyclic(minus_set(g, x)));
        auto opt = oracle::brute_force(Problem::FeedbackVertexSet, g);
        CHECK(x.size() <= 2 * opt.objective);
    }

    // stays acyclic at larger scale too
    Graph big = gen_stacked_planar(300, 3);
    CHECK(is_acyclic(minus_set(big, fvs_2approx(big))));
}

TEST_CASE("max-leaf transversal") {
    CHECK(maxleaf_transversal(cycle(8)).empty());

    Graph star = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(maxleaf_transversal(star).members() == std::vector<Vertex>{0});

    CHECK(maxleaf_transversal(gen_grid(4)).size() == 12);

    Graph disconnected = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(maxleaf_transversal(disconnected), std::invalid_argument);

    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = gen_stacked_planar(30, seed);
        auto rest = minus_set(g, maxleaf_transversal(g));
        for (Vertex v = 0; v < rest.num_vertices(); ++v) CHECK(rest.degree(v) <= 2);
    }
}

TEST_CASE("generic eta transversal") {
    std::vector<std::pair<Vertex, Vertex>> tre;
    for (int i = 1; i < 9; ++i) tre.emplace_back(i / 2, i);
    auto forest_res = eta_transversal_approx(Graph::from_edges(9, tre), 0);
    CHECK(forest_res.x.empty());
    CHECK(forest_res.iterations == 0);
    CHECK(!forest_res.fallback_used);

    Graph two_tri = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto tt = eta_transversal_approx(two_tri, 0);
    CHECK(tt.x.size() == 2);
    CHECK(is_acyclic(minus_set(two_tri, tt.x)));

    auto c6 = eta_transversal_approx(cycle(6), 0);
    CHECK(c6.x.size() == 1);

    CHECK_THROWS_AS(eta_transversal_approx(cycle(6), 3), std::invalid_argument);

    // a wide grid defeats the enumeration at cap 0 and falls back, flagged
    Graph wide = gen_grid(12);
    auto fb = eta_transversal_approx(wide, 0);
    CHECK(fb.fallback_used);
    CHECK(is_acyclic(minus_set(wide, fb.x)));

    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = gen_stacked_planar(6 + seed % 8, seed, 0.9);
        for (int cap : {0, 1, 2}) {
            auto res = eta_transversal_approx(g, cap);
            CHECK(is_acyclic(minus_set(g, res.x)));
        }
    }
}

TEST_CASE("transversal dispatch") {
    Graph tri = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    auto vc = build_transversal(Problem::VertexCover, tri);
    CHECK(vc.x.size() == 2);
    CHECK(vc.eta == 0);

    std::vector<std::pair<Vertex, Vertex>> tre;
    for (int i = 1; i < 7; ++i) tre.emplace_back(i / 2, i);
    auto cp = build_transversal(Problem::CyclePacking, Graph::from_edges(7, tre));
    CHECK(cp.x.empty());
    CHECK(cp.eta == 1);

    auto ml = build_transversal(Problem::MaxLeaf, cycle(8));
    CHECK(ml.x.empty());
    CHECK(ml.eta == 2);

    CHECK_THROWS_AS(build_transversal(Problem::DominatingSet, tri), std::invalid_argument);
}
