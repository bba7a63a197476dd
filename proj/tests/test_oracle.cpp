#include <bit>

#include "doctest.h"
#include "eptas/graph.hpp"
#include "eptas/oracle.hpp"

using namespace eptas;
using oracle::brute_force;
using oracle::brute_force_annotated;
using oracle::brute_force_annotated_serial;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, es);
}

// test-only independent enumerations
long long max_independent_set(const Graph& g) {
    int n = g.num_vertices();
    long long best = 0;
    for (uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if ((s >> u & 1) && (s >> v & 1)) ok = false;
        if (ok) best = std::max<long long>(best, std::popcount(s));
    }
    return best;
}

long long max_induced_forest(const Graph& g) {
    int n = g.num_vertices();
    long long best = 0;
    for (uint32_t s = 0; s < (1u << n); ++s) {
        std::vector<Vertex> keep;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1) keep.push_back(v);
        if (is_acyclic(g.induced(keep).graph)) best = std::max<long long>(best, keep.size());
    }
    return best;
}

}  // namespace

TEST_CASE("oracle fixed values") {
    CHECK(brute_force(Problem::VertexCover, cycle(5)).objective == 3);
    Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(brute_force(Problem::FeedbackVertexSet, k4).objective == 2);
    CHECK(brute_force(Problem::CyclePacking, cycle(6)).objective == 1);

    Graph star4 = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    auto ml = brute_force(Problem::MaxLeaf, star4);
    CHECK(ml.objective == 4);
    CHECK(check_plain(Problem::MaxLeaf, star4, ml));

    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    auto pvc = brute_force(Problem::PartialVertexCover, p3, 2);
    CHECK(pvc.objective == 1);
    CHECK(pvc.witness == std::vector<Vertex>{1});

    CHECK(brute_force(Problem::DominatingSet, p3).objective == 1);
    // every size-3 cover of the 5-cycle is disconnected, so the optimum is 4
    CHECK(brute_force(Problem::ConnectedVertexCover, cycle(5)).objective == 4);
}

TEST_CASE("oracle annotated instances") {
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    auto ds_all = make_instance(AnnotatedTag::DsAnnotated, p3, VertexSet({0, 1, 2}));
    CHECK(brute_force_annotated(ds_all).objective == 0);

    // two disjoint edges and no anchors: no single cover component exists
    Graph two_e = Graph::from_edges(4, {{0, 1}, {2, 3}});
    auto cvc = make_instance(AnnotatedTag::CvcAnnotated, two_e, VertexSet{});
    CHECK(!brute_force_annotated(cvc).feasible);
    auto cvc_anch = make_instance(AnnotatedTag::CvcAnnotated, two_e, VertexSet({0, 2}));
    auto sol = brute_force_annotated(cvc_anch);
    CHECK(sol.feasible);
    CHECK(sol.objective == 2);

    // anchors equal to V make the leaf conditions vacuous
    auto ml_all = make_instance(AnnotatedTag::MaxleafAnnotated, p3, VertexSet({0, 1, 2}));
    CHECK(brute_force_annotated(ml_all).objective == 3);
}

TEST_CASE("oracle self-consistency") {
    for (uint64_t seed = 1; seed <= 15; ++seed) {
        Graph g = gen_stacked_planar(4 + seed % 7, seed, seed % 2 ? 1.0 : 0.75);
        long long vc = brute_force(Problem::VertexCover, g).objective;
        CHECK(vc + max_independent_set(g) == g.num_vertices());
        long long fvs = brute_force(Problem::FeedbackVertexSet, g).objective;
        CHECK(fvs == g.num_vertices() - max_induced_forest(g));
        CHECK(brute_force(Problem::PartialVertexCover, g, g.num_edges()).objective == vc);
        CHECK(brute_force(Problem::PartialVertexCover, g, 0).objective == 0);
    }
}

TEST_CASE("oracle witnesses are lexicographically smallest") {
    auto sol = brute_force(Problem::VertexCover, cycle(4));
    CHECK(sol.objective == 2);
    CHECK(sol.witness == std::vector<Vertex>{0, 2});
}

TEST_CASE("serial reference agrees with the parallel scan") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = gen_stacked_planar(13, seed, 0.85);
        for (AnnotatedTag tag : {AnnotatedTag::Vc, AnnotatedTag::Fvs, AnnotatedTag::DsAnnotated,
                                 AnnotatedTag::CvcAnnotated, AnnotatedTag::MaxleafAnnotated}) {
            auto inst = make_instance(tag, g, VertexSet({0, 1}));
            auto a = brute_force_annotated(inst);
            auto b = brute_force_annotated_serial(inst);
            CHECK(a.feasible == b.feasible);
            CHECK(a.objective == b.objective);
            CHECK(a.witness == b.witness);
        }
        auto pv = make_instance(AnnotatedTag::PartialVc, g, VertexSet{}, g.num_edges() / 2);
        CHECK(brute_force_annotated(pv).witness == brute_force_annotated_serial(pv).witness);
    }
}

TEST_CASE("oracle errors") {
    Graph disconnected = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(brute_force(Problem::MaxLeaf, disconnected), std::invalid_argument);
    CHECK_THROWS_AS(brute_force(Problem::VertexCover, Graph(17)), std::invalid_argument);
    CHECK_THROWS_AS(brute_force(Problem::PartialVertexCover, cycle(4), std::nullopt),
                    std::invalid_argument);
}

TEST_CASE("cycle packing oracle details") {
    Graph two_tri = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto sol = brute_force(Problem::CyclePacking, two_tri);
    CHECK(sol.objective == 2);
    CHECK(is_cycle_packing(two_tri, sol.cycles));

    // K4 packs exactly one triangle
    Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(brute_force(Problem::CyclePacking, k4).objective == 1);

    // dense planar instance: value matches a direct greedy lower bound
    Graph g = gen_stacked_planar(12, 3);
    auto big = brute_force(Problem::CyclePacking, g);
    CHECK(big.objective >= 1);
    CHECK(is_cycle_packing(g, big.cycles));
    CHECK(static_cast<long long>(big.cycles.size()) == big.objective);
}
