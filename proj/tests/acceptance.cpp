// Acceptance suite: one line per criterion, then a summary. Exit code is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "eptas/dp.hpp"
#include "eptas/eptas.hpp"
#include "eptas/graph.hpp"
#include "eptas/oracle.hpp"
#include "eptas/partition.hpp"
#include "eptas/transversal.hpp"
#include "eptas/treewidth.hpp"

using namespace eptas;

namespace {

int failures = 0;

void report(int crit, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s — %s\n", crit, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++failures;
}

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// ---- 1: dp equals the oracle on an exact decomposition ----------------------
void criterion1() {
    double t0 = now_ms();
    int mismatches = 0;
    std::string first;
    for (AnnotatedTag tag : {AnnotatedTag::Vc, AnnotatedTag::Fvs, AnnotatedTag::DsAnnotated,
                             AnnotatedTag::CyclePacking, AnnotatedTag::PartialVc,
                             AnnotatedTag::CvcAnnotated, AnnotatedTag::MaxleafAnnotated}) {
        auto rep = dp_selfcheck(tag, 14, 200, 0xC0FFEEull ^ static_cast<uint64_t>(tag));
        mismatches += rep.mismatches;
        if (!rep.details.empty() && first.empty()) first = rep.details.front();
    }
    double secs = (now_ms() - t0) / 1000.0;
    bool pass = mismatches == 0 && secs < 120.0;
    report(1, pass,
           "7 problems x 200 graphs (n<=14): " + std::to_string(mismatches) + " mismatches in " +
               std::to_string(secs).substr(0, 5) + "s" + (first.empty() ? "" : "; " + first));
}

// ---- 2: separator contract conformance ------------------------------------------
void criterion2() {
    int pass_count = 0, total = 500;
    std::string first;
    for (int i = 0; i < total; ++i) {
        Rng rng(0xBA1Aull ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
        int n = 60 + static_cast<int>(rng.below(141));  // 60..200
        double kp = i % 4 == 0 ? 0.9 : 1.0;
        Graph g = gen_stacked_planar(n, rng.next(), kp);
        std::vector<double> w(n);
        for (int v = 0; v < n; ++v) w[v] = static_cast<double>(rng.below(51));
        auto td = heuristic_decomposition(g);
        bool ok = true;
        std::string why;
        try {
            auto tp = balanced_separator(g, td, w);
            long long total_w = 0, ws = 0, wl = 0, wr = 0;
            for (double x : w) total_w += static_cast<long long>(x);
            for (Vertex v : tp.separator) ws += static_cast<long long>(w[v]);
            for (Vertex v : tp.left) wl += static_cast<long long>(w[v]);
            for (Vertex v : tp.right) wr += static_cast<long long>(w[v]);
            if (tp.separator.size() > td.width() + 1) ok = false, why = "|S| > t+1";
            std::vector<int> side(n, -1);
            for (Vertex v : tp.left) side[v] = 0;
            for (Vertex v : tp.separator) side[v] = 1;
            for (Vertex v : tp.right) side[v] = 2;
            for (auto [u, v] : g.edges())
                if ((side[u] == 0 && side[v] == 2) || (side[u] == 2 && side[v] == 0))
                    ok = false, why = "L-R edge";
            std::vector<char> in_s(n, 0);
            for (Vertex v : tp.separator) in_s[v] = 1;
            std::vector<Vertex> rest;
            for (Vertex v = 0; v < n; ++v)
                if (!in_s[v]) rest.push_back(v);
            auto ind = g.induced(rest);
            for (const auto& comp : components(ind.graph)) {
                long long cw = 0;
                for (Vertex v : comp) cw += static_cast<long long>(w[ind.to_original[v]]);
                if (2 * cw > total_w) ok = false, why = "component over w(V)/2";
            }
            long long west = total_w - ws;
            if (west > 0 && (3 * wl < west || 3 * wl > 2 * west || 3 * wr < west ||
                             3 * wr > 2 * west))
                ok = false, why = "window violated";
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        if (ok)
            ++pass_count;
        else if (first.empty())
            first = "run " + std::to_string(i) + ": " + why;
    }
    report(2, pass_count == total,
           std::to_string(pass_count) + "/" + std::to_string(total) +
               " random (graph, weight) pairs satisfy all three conditions" +
               (first.empty() ? "" : "; " + first));
}

// ---- 3: partition post-conditions ---------------------------------------------
void criterion3() {
    int runs = 200, flagged = 0, base_cases = 0, violations = 0, base_violations = 0;
    const double gammas[4] = {2, 5, 10, 20};
    for (int i = 0; i < runs; ++i) {
        Rng rng(0x9A9Aull ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
        // mostly mid-to-large instances, every fourth one small enough that
        // gamma = 20 can swallow the whole transversal (base case)
        int n = i % 4 == 3 ? 12 + static_cast<int>(rng.below(40))
                           : 50 + static_cast<int>(rng.below(951));
        Graph g = gen_stacked_planar(n, rng.next(), i % 5 == 0 ? 0.9 : 1.0);
        VertexSet x = fvs_2approx(g);
        double gamma = gammas[i % 4];
        auto res = recursive_partition(g, x, gamma);
        if (static_cast<double>(x.size()) <= gamma) {
            ++base_cases;
            if (!res.x_prime.empty()) ++base_violations;
        }
        bool guard = res.report.progress_guard_triggers > 0;
        if (guard) ++flagged;
        // recompute the component statistics from scratch
        std::vector<char> in_xp(g.num_vertices(), 0), in_x(g.num_vertices(), 0);
        for (Vertex v : res.x_prime) in_xp[v] = 1;
        for (Vertex v : x) in_x[v] = 1;
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (!in_xp[v]) rest.push_back(v);
        auto ind = g.induced(rest);
        for (const auto& comp : components(ind.graph)) {
            int xo = 0;
            std::vector<Vertex> orig;
            for (Vertex v : comp) {
                orig.push_back(ind.to_original[v]);
                if (in_x[ind.to_original[v]]) ++xo;
            }
            int boundary = neighborhood(g, VertexSet(orig)).size();
            if (xo > gamma) ++violations;                  // never excused
            if (boundary > gamma && !guard) ++violations;  // excused only when flagged
        }
    }
    bool pass = violations == 0 && base_violations == 0;
    report(3, pass,
           std::to_string(runs) + " runs, gamma in {2,5,10,20}: " + std::to_string(violations) +
               " unflagged violations, " + std::to_string(flagged) + " guarded runs, " +
               std::to_string(base_cases) + " base cases (all empty: " +
               (base_violations == 0 ? "yes" : "no") + ")");
}

// ---- 4: constants reproduction -------------------------------------------------
void criterion4() {
    auto c = derive_constants(0.5, 0.5, 1, 1);
    // independent route: dense grid search for rho, direct arithmetic after
    double rho_grid = 1e18;
    const int steps = 3'000'000;
    for (int i = 0; i <= steps; ++i) {
        double a = 1.0 / 3.0 + (i * (1.0 / 3.0)) / steps;
        rho_grid = std::min(rho_grid, std::pow(a, 0.5) + std::pow(1 - a, 0.5));
    }
    double delta_direct = (2 * 0.5 + 1) * (1 + 1 + 1) / (rho_grid - 1);
    double gamma_direct = std::pow(3 * delta_direct / 0.5, 2.0);
    bool match = std::abs(c.rho - rho_grid) <= 1e-9 &&
                 std::abs(c.delta - delta_direct) <= 1e-9 * delta_direct &&
                 std::abs(c.gamma - gamma_direct) <= 1e-9 * gamma_direct;
    // quoted reference decimals at their displayed precision; the quoted
    // delta and gamma carry rounding drift in the last digit (exact values
    // are 15.234348 and 8355.073)
    bool quoted = std::abs(c.rho - 1.393847) <= 1e-6 && std::abs(c.delta - 15.2344) <= 1e-4 &&
                  std::abs(c.gamma - 8354.7) <= 1.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "rho=%.9f delta=%.6f gamma=%.4f (independent eval to 1e-9: %s)",
                  c.rho, c.delta, c.gamma, match ? "yes" : "no");
    report(4, match && quoted, buf);
}

// ---- 5: approximation ratios at oracle scale -----------------------------------
void criterion5() {
    const Problem problems[] = {Problem::VertexCover, Problem::FeedbackVertexSet,
                                Problem::CyclePacking, Problem::ConnectedVertexCover,
                                Problem::MaxLeaf};
    int total = 0, feasible = 0, within = 0, marked_shortfalls = 0, shortfalls = 0;
    int exact_total = 0, exact_hits = 0;
    for (int i = 0; i < 100; ++i) {
        Rng rng(0xE9A5ull ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
        int n = 5 + static_cast<int>(rng.below(10));  // 5..14, connected
        Graph g = gen_stacked_planar(n, rng.next(), 1.0);
        for (Problem p : problems) {
            auto ref = oracle::brute_force(p, g);
            for (double eps : {0.5, 1.0}) {
                EptasOptions opts;
                opts.gamma = 4;
                auto res = eptas_solve(p, g, eps, opts);
                ++total;
                if (!res.solution.feasible || !check_plain(p, g, res.solution)) continue;
                ++feasible;
                bool ok = is_minimization(p)
                              ? res.solution.objective <= (1 + eps) * ref.objective + 1e-9
                              : (1 + eps) * res.solution.objective + 1e-9 >= ref.objective;
                if (ok) {
                    ++within;
                } else {
                    ++shortfalls;
                    if (res.guarantee == "override-no-guarantee") ++marked_shortfalls;
                }
            }
            // analytic gamma: the modulator collapses and the answer is exact
            auto exact = eptas_solve(p, g, 0.5);
            ++exact_total;
            if (exact.solution.feasible && exact.solution.objective == ref.objective &&
                exact.guarantee == "paper-constants")
                ++exact_hits;
        }
    }
    bool pass = feasible == total && within >= total * 95 / 100 &&
                marked_shortfalls == shortfalls && exact_hits == exact_total;
    report(5, pass,
           "override: " + std::to_string(feasible) + "/" + std::to_string(total) + " feasible, " +
               std::to_string(within) + " within (1+eps) (" +
               std::to_string(shortfalls) + " marked shortfalls); analytic gamma exact " +
               std::to_string(exact_hits) + "/" + std::to_string(exact_total));
}

// ---- 6: transversal guarantees --------------------------------------------------
void criterion6() {
    int bad = 0, kw_checked = 0;
    std::string first;
    for (int i = 0; i < 200; ++i) {
        Rng rng(0x7A7Aull ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
        int n = 4 + static_cast<int>(rng.below(11));  // 4..14
        double kp = i % 3 == 0 ? 0.8 : 1.0;
        Graph g = gen_stacked_planar(n, rng.next(), kp);

        auto note = [&](const std::string& s) {
            ++bad;
            if (first.empty()) first = "run " + std::to_string(i) + ": " + s;
        };

        auto xm = vc_matching_transversal(g);
        std::vector<char> in(g.num_vertices(), 0);
        for (Vertex v : xm) in[v] = 1;
        for (auto [u, v] : g.edges())
            if (!in[u] && !in[v]) note("matching leftover edge");
        if (xm.size() > 2 * oracle::brute_force(Problem::VertexCover, g).objective)
            note("matching ratio");

        auto xf = fvs_2approx(g);
        {
            std::vector<char> inf(g.num_vertices(), 0);
            for (Vertex v : xf) inf[v] = 1;
            std::vector<Vertex> rest;
            for (Vertex v = 0; v < g.num_vertices(); ++v)
                if (!inf[v]) rest.push_back(v);
            if (!is_acyclic(g.induced(rest).graph)) note("fvs leftover cycle");
            if (xf.size() > 2 * oracle::brute_force(Problem::FeedbackVertexSet, g).objective)
                note("fvs ratio");
        }

        if (is_connected(g)) {
            auto xl = maxleaf_transversal(g);
            std::vector<char> inl(g.num_vertices(), 0);
            for (Vertex v : xl) inl[v] = 1;
            std::vector<Vertex> rest;
            for (Vertex v = 0; v < g.num_vertices(); ++v)
                if (!inl[v]) rest.push_back(v);
            auto sub = g.induced(rest).graph;
            for (Vertex v = 0; v < sub.num_vertices(); ++v)
                if (sub.degree(v) > 2) note("maxleaf degree");
            long long k = oracle::brute_force(Problem::MaxLeaf, g).objective;
            long long deg3 = 0;
            for (Vertex v = 0; v < g.num_vertices(); ++v)
                if (g.degree(v) >= 3) ++deg3;
            ++kw_checked;
            if (deg3 > 4 * k + 2) note("degree-3 count above 4k+2");
        }
    }
    report(6, bad == 0,
           "200 instances, 0 expected violations, got " + std::to_string(bad) + " (" +
               std::to_string(kw_checked) + " leaf-bound checks)" +
               (first.empty() ? "" : "; " + first));
}

// ---- 7: structural generators ----------------------------------------------------
void criterion7() {
    bool ok = true;
    std::string why;
    for (int r = 2; r <= 10 && ok; ++r) {
        Graph g = gen_grid(r);
        int d2 = 0, d3 = 0, d4 = 0;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            int d = g.degree(v);
            d2 += d == 2;
            d3 += d == 3;
            d4 += d == 4;
        }
        if (d2 != 4 || d3 != 4 * (r - 2) || d4 != (r - 2) * (r - 2))
            ok = false, why = "grid census r=" + std::to_string(r);
        if (g.num_vertices() >= 3 && g.num_edges() > 3LL * g.num_vertices() - 6)
            ok = false, why = "grid euler";
    }
    for (int r = 2; r <= 8 && ok; ++r) {
        Graph pre = gen_gamma(r, false);
        for (int i = 0; i < r && ok; ++i)
            for (int j = 0; j < r && ok; ++j) {
                Vertex v = i * r + j;
                bool ext = i == 0 || j == 0 || i == r - 1 || j == r - 1;
                bool corner = (i == 0 || i == r - 1) && (j == 0 || j == r - 1);
                if (!ext && pre.degree(v) != 6) ok = false, why = "gamma internal degree";
                if (ext && !corner && pre.degree(v) != 4) ok = false, why = "gamma external degree";
            }
        Graph full = gen_gamma(r);
        if (full.num_edges() > 3LL * full.num_vertices() - 6) ok = false, why = "gamma euler";
    }
    for (int r = 2; r <= 5 && ok; ++r) {
        auto res = exact_treewidth(gen_grid(r), 10);
        if (res.status != ExactTwResult::Status::Found || res.width != r)
            ok = false, why = "grid treewidth r=" + std::to_string(r);
    }
    for (uint64_t seed = 1; seed <= 20 && ok; ++seed) {
        Graph g = gen_stacked_planar(30 + 10 * static_cast<int>(seed), seed);
        if (g.num_edges() > 3LL * g.num_vertices() - 6) ok = false, why = "stacked euler";
    }
    report(7, ok, ok ? "grid census r<=10, gamma profile r<=8, tw(grid r)=r for r<=5, euler bounds"
                     : why);
}

// ---- 8: scaling smoke test ---------------------------------------------------------
void criterion8() {
    Graph g = gen_stacked_planar(2000, 7);
    EptasOptions opts;
    opts.gamma = 20;
    double t0 = now_ms();
    auto res = eptas_solve(Problem::FeedbackVertexSet, g, 0.5, opts);
    double secs = (now_ms() - t0) / 1000.0;
    bool pass = res.solution.feasible && check_plain(Problem::FeedbackVertexSet, g, res.solution) &&
                secs < 60.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "n=2000 fvs in %.2fs, objective %lld, feasible %s", secs,
                  res.solution.objective, res.solution.feasible ? "yes" : "no");
    report(8, pass, buf);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::printf("%s\n", failures == 0 ? "all criteria passed" : "FAILURES PRESENT");
    return failures;
}
