#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "embcon/egf.hpp"
#include "embcon/embedded_graph.hpp"
#include "embcon/generators.hpp"

using namespace embcon;

namespace {

// Two vertices joined by two parallel edges; the smallest multigraph.
const char* kDigon =
    "egf 1\n"
    "vertices 2\n"
    "crossings 0\n"
    "edge 0 0 1\n"
    "edge 1 0 1\n"
    "rot 0 : 0.0 1.0\n"
    "rot 1 : 0.0 1.0\n";

}  // namespace

TEST_CASE("serialization round trips") {
    for (const EmbeddedGraph& g :
         {gen_grid(3, 3), gen_cycle(6), gen_k5_one_crossing(),
          gen_clique_in_face(7, 5)}) {
        std::string text = serialize_egf(g);
        EmbeddedGraph back = parse_egf(text);
        CHECK(back.n == g.n);
        CHECK(back.q == g.q);
        REQUIRE(back.edge_count() == g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) {
            CHECK(back.edges[e].u == g.edges[e].u);
            CHECK(back.edges[e].v == g.edges[e].v);
            CHECK(back.edges[e].interior == g.edges[e].interior);
        }
        // Canonical form is a fixed point.
        CHECK(serialize_egf(back) == text);
        CHECK(validate(back).ok);
    }
}

TEST_CASE("parser reports the offending line") {
    try {
        parse_egf("egf 1\nvertices two\n");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_egf("egf 2\nvertices 1\ncrossings 0\n"), parse_error);
    CHECK_THROWS_AS(parse_egf(""), parse_error);
    // Edge ids must be dense and ascending.
    CHECK_THROWS_AS(parse_egf("egf 1\nvertices 2\ncrossings 0\n"
                              "edge 1 0 1\nrot 0 : 1.0\nrot 1 : 1.1\n"),
                    parse_error);
}

TEST_CASE("rotation entries use edge.segment form") {
    EmbeddedGraph g = parse_egf(kDigon);
    CHECK(g.n == 2);
    CHECK(g.q == 0);
    CHECK(g.edge_count() == 2);
    CHECK(validate(g).ok);
    RealGraph rg = real_graph(g);
    CHECK(rg.adjacent(0, 1));
    CHECK(rg.multiplicity.at({0, 1}) == 2);
    CHECK(rg.degree[0] == 2);
}

TEST_CASE("validation rejects a crossing on a single edge") {
    EmbeddedGraph g = parse_egf(
        "egf 1\n"
        "vertices 2\n"
        "crossings 1\n"
        "edge 0 0 1 : 2\n"
        "rot 0 : 0.0\n"
        "rot 1 : 0.1\n"
        "rot 2 : 0.0 0.1 0.0 0.1\n");
    ValidationReport rep = validate(g);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.errors.empty());
}

TEST_CASE("validation rejects a torus rotation system") {
    // K4 with rotations twisted so the face count breaks Euler's formula.
    EmbeddedGraph g = gen_complete_planar(4);
    std::swap(g.rot[0][0], g.rot[0][1]);
    ValidationReport rep = validate(g);
    CHECK_FALSE(rep.ok);
}

TEST_CASE("validation rejects a disconnected graph") {
    EmbeddedGraph g = parse_egf(
        "egf 1\n"
        "vertices 4\n"
        "crossings 0\n"
        "edge 0 0 1\n"
        "edge 1 2 3\n"
        "rot 0 : 0.0\n"
        "rot 1 : 0.0\n"
        "rot 2 : 1.0\n"
        "rot 3 : 1.0\n");
    ValidationReport rep = validate(g);
    CHECK_FALSE(rep.ok);
}

TEST_CASE("planarization splits crossed edges into segments") {
    EmbeddedGraph g = gen_k5_one_crossing();
    Planarization p = planarize(g);
    CHECK(p.pg.vertex_count() == g.vertex_count());
    int segments = 0;
    for (const auto& pe : g.edges) segments += pe.seg_count();
    CHECK(p.pg.edge_count() == segments);
    // Each segment knows its parent edge and position.
    for (int e = 0; e < g.edge_count(); ++e)
        for (int s = 0; s < g.edges[e].seg_count(); ++s) {
            int sid = p.segment_id(e, s);
            CHECK(p.seg_edge[sid] == e);
            CHECK(p.seg_index[sid] == s);
            auto [a, b] = segment_endpoints(g, e, s);
            int u = p.pg.tail(2 * sid), v = p.pg.head(2 * sid);
            CHECK(((u == a && v == b) || (u == b && v == a)));
        }
    // Planarity; validate() asserts this too, via Euler's formula.
    CHECK(p.pg.faces().count ==
          p.pg.alive_edge_count() - p.pg.alive_vertex_count() + 2);
}

TEST_CASE("subdividing replaces every edge by a two-segment path") {
    EmbeddedGraph g = gen_k5_one_crossing();
    int E = g.edge_count();
    EmbeddedGraph s = subdivide(g);
    CHECK(s.n == g.n + E);
    CHECK(s.q == g.q);
    CHECK(s.edge_count() == 2 * E);
    CHECK(validate(s).ok);
    for (int e = 0; e < E; ++e) {
        // Halves e and E+e share the midpoint vertex n+e; the half holding
        // the lower endpoint keeps id e and carries no crossings.
        int t = g.n + e;
        const ParentEdge& pe = g.edges[e];
        if (pe.u <= pe.v) {
            CHECK(s.edges[e].u == pe.u);
            CHECK(s.edges[e].v == t);
            CHECK(s.edges[E + e].u == t);
            CHECK(s.edges[E + e].v == pe.v);
        } else {
            CHECK(s.edges[e].u == t);
            CHECK(s.edges[e].v == pe.v);
            CHECK(s.edges[E + e].u == pe.u);
            CHECK(s.edges[E + e].v == t);
        }
        CHECK(s.edges[e].interior.empty());
    }
    RealGraph rs = real_graph(s);
    for (int e = 0; e < E; ++e) CHECK(rs.degree[g.n + e] == 2);
}

TEST_CASE("real graph ignores crossings") {
    EmbeddedGraph g = gen_k5_one_crossing();
    RealGraph rg = real_graph(g);
    CHECK(rg.n == 5);
    for (int v = 0; v < 5; ++v) CHECK(rg.degree[v] == 4);
    CHECK(rg.complete_simple());
    CHECK_FALSE(real_graph(gen_grid(2, 3)).complete_simple());
}
