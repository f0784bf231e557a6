#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "corpus.hpp"
#include "embcon/generators.hpp"
#include "embcon/oracle.hpp"
#include "embcon/radial.hpp"
#include "embcon/ribbon.hpp"

using namespace embcon;

TEST_CASE("per-crossing probe matches the definitional oracle") {
    for (const auto& entry : corpus::build_small_corpus()) {
        if (entry.graph.q == 0 || entry.graph.q > 12) continue;
        INFO(entry.name);
        const EmbeddedGraph& g = entry.graph;
        RadialGraph radial = build_radial(planarize(g));
        int cap = radial.lam.vertex_count();
        for (int v = g.n; v < g.vertex_count(); ++v) {
            CrossingProbe probe(g, radial, v);
            RibbonProbe slow = oracle_crossing_mu(g, radial, v, cap);
            REQUIRE(slow.conclusive);
            CHECK(probe.mu() == slow.value);
        }
    }
}

TEST_CASE("radius test is monotone and tight") {
    for (const auto& entry : corpus::build_small_corpus()) {
        if (entry.graph.q == 0) continue;
        INFO(entry.name);
        const EmbeddedGraph& g = entry.graph;
        RadialGraph radial = build_radial(planarize(g));
        for (int v = g.n; v < g.vertex_count(); ++v) {
            CrossingProbe probe(g, radial, v);
            int mu = probe.mu();
            CHECK(mu >= 1);
            for (int r = 1; r <= mu + 2; ++r)
                CHECK(probe.mu_at_most(r) == (r >= mu));
        }
    }
}

TEST_CASE("graph ribbon radius is one plus the worst crossing") {
    for (const auto& entry : corpus::build_small_corpus()) {
        INFO(entry.name);
        const EmbeddedGraph& g = entry.graph;
        RadialGraph radial = build_radial(planarize(g));
        RibbonResult rr = ribbon_radius(g, radial);
        REQUIRE(static_cast<int>(rr.per_crossing.size()) == g.q);
        int expect = 1;
        for (int m : rr.per_crossing) expect = std::max(expect, 1 + m);
        CHECK(rr.mu == expect);
        if (g.q == 0) CHECK(rr.mu == 1);
        // The threaded path must agree with the serial one.
        CHECK(ribbon_radius(g, radial, 4).mu == rr.mu);
    }
}

TEST_CASE("ribbon witness walks stay inside the ball") {
    for (const auto& entry : corpus::build_small_corpus()) {
        if (entry.graph.q == 0) continue;
        INFO(entry.name);
        const EmbeddedGraph& g = entry.graph;
        RadialGraph radial = build_radial(planarize(g));
        for (int v = g.n; v < g.vertex_count(); ++v) {
            RibbonWitness w = ribbon_witness(g, radial, v);
            CrossingProbe probe(g, radial, v);
            CHECK(w.crossing == v);
            CHECK(w.radius == probe.mu());
            CHECK(probe.edge_reach(w.edge1) <= 2 * w.radius);
            CHECK(probe.edge_reach(w.edge2) <= 2 * w.radius);
            REQUIRE_FALSE(w.path_vertices.empty());
            REQUIRE(w.path_edges.size() + 1 == w.path_vertices.size());
            for (size_t i = 0; i < w.path_edges.size(); ++i) {
                int e = w.path_edges[i];
                CHECK(probe.edge_reach(e) <= 2 * w.radius);
                int a = w.path_vertices[i], b = w.path_vertices[i + 1];
                bool spans = (g.edges[e].u == a && g.edges[e].v == b) ||
                             (g.edges[e].u == b && g.edges[e].v == a);
                CHECK(spans);
            }
        }
    }
}
