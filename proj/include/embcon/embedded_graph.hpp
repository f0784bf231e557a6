#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "embcon/plane_graph.hpp"
#include "embcon/util.hpp"

namespace embcon {

/// One edge of the abstract graph together with the ordered crossing vertices
/// its drawing passes through.  With k interior crossings the drawing splits
/// into k+1 segments, indexed 0..k from the u side.
struct ParentEdge {
    int u = -1;
    int v = -1;
    std::vector<int> interior;

    int seg_count() const { return static_cast<int>(interior.size()) + 1; }
};

/// A drawn graph: n real vertices (ids 0..n-1), q crossing vertices
/// (ids n..n+q-1), parent edges, and the clockwise rotation at every vertex of
/// the planarization.  Rotation entries name a segment by (edge id, segment
/// index); the segment must be incident to the vertex.
struct EmbeddedGraph {
    int n = 0;
    int q = 0;
    std::vector<ParentEdge> edges;
    std::vector<std::vector<std::pair<int, int>>> rot;  // size n + q

    int vertex_count() const { return n + q; }
    int edge_count() const { return static_cast<int>(edges.size()); }
    bool is_crossing(int v) const { return v >= n; }
};

/// Endpoints of segment s of edge e, ordered along the u -> v direction.
inline std::pair<int, int> segment_endpoints(const EmbeddedGraph& g, int e, int s) {
    const ParentEdge& pe = g.edges[e];
    int k = static_cast<int>(pe.interior.size());
    require(s >= 0 && s <= k, "segment index out of range");
    int a = (s == 0) ? pe.u : pe.interior[s - 1];
    int b = (s == k) ? pe.v : pe.interior[s];
    return {a, b};
}

/// seg_base[e] = id of segment (e, 0) in the planarization; seg_base[E] = total.
inline std::vector<int> segment_bases(const EmbeddedGraph& g) {
    std::vector<int> base(g.edge_count() + 1, 0);
    for (int e = 0; e < g.edge_count(); ++e)
        base[e + 1] = base[e] + g.edges[e].seg_count();
    return base;
}

/// The planarization: a plane multigraph whose vertices are the real and
/// crossing vertices and whose edges are the drawing segments.  Dart 2*sid of
/// segment sid points along the parent edge's u -> v direction.
struct Planarization {
    PlaneGraph pg;
    std::vector<int> seg_base;   // size E+1
    std::vector<int> seg_edge;   // per segment: owning parent edge
    std::vector<int> seg_index;  // per segment: index within the parent edge

    int segment_id(int e, int s) const { return seg_base[e] + s; }
};

inline Planarization planarize(const EmbeddedGraph& g) {
    Planarization p;
    p.seg_base = segment_bases(g);
    int total = p.seg_base.back();
    p.seg_edge.resize(total);
    p.seg_index.resize(total);
    p.pg = PlaneGraph(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        for (int s = 0; s < g.edges[e].seg_count(); ++s) {
            auto [a, b] = segment_endpoints(g, e, s);
            require(a != b, "degenerate segment with equal endpoints");
            int sid = p.pg.add_detached_edge(a, b);
            check(sid == p.seg_base[e] + s, "segment id mismatch");
            p.seg_edge[sid] = e;
            p.seg_index[sid] = s;
        }
    }
    require(static_cast<int>(g.rot.size()) == g.vertex_count(),
            "rotation table size mismatch");
    std::vector<char> used(2 * total, 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int prev = -1;
        for (auto [e, s] : g.rot[v]) {
            require(e >= 0 && e < g.edge_count(), "rotation names unknown edge");
            require(s >= 0 && s < g.edges[e].seg_count(),
                    "rotation names unknown segment");
            auto [a, b] = segment_endpoints(g, e, s);
            int sid = p.segment_id(e, s);
            int d;
            if (a == v)
                d = 2 * sid;
            else if (b == v)
                d = 2 * sid + 1;
            else
                require(false, "rotation entry not incident to its vertex");
            require(!used[d], "segment listed twice around a vertex");
            used[d] = 1;
            p.pg.attach_dart(d, prev);
            prev = d;
        }
    }
    for (int d = 0; d < 2 * total; ++d)
        require(used[d], "segment missing from rotation of an endpoint");
    return p;
}

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> errors;

    void fail(std::string msg) {
        ok = false;
        errors.push_back(std::move(msg));
    }
};

/// Semantic checks beyond syntax: crossing degrees, transversal alternation,
/// crossings lying on exactly two distinct edges, no self-crossing edge,
/// connectivity, and the Euler face count of the rotation system.
inline ValidationReport validate(const EmbeddedGraph& g) {
    ValidationReport r;
    std::vector<std::vector<int>> owner(g.q);  // parent edges through crossing
    for (int e = 0; e < g.edge_count(); ++e) {
        std::set<int> seen;
        for (int d : g.edges[e].interior) {
            if (d < g.n || d >= g.vertex_count()) {
                r.fail("edge " + std::to_string(e) +
                       " interior names a non-crossing vertex");
                continue;
            }
            if (!seen.insert(d).second)
                r.fail("edge " + std::to_string(e) + " crosses itself at vertex " +
                       std::to_string(d));
            owner[d - g.n].push_back(e);
        }
    }
    for (int j = 0; j < g.q; ++j) {
        auto& own = owner[j];
        if (own.size() != 2)
            r.fail("crossing " + std::to_string(g.n + j) + " lies on " +
                   std::to_string(own.size()) + " edges, expected 2");
        else if (own[0] == own[1])
            r.fail("crossing " + std::to_string(g.n + j) +
                   " has both passes from the same edge");
    }
    if (!r.ok) return r;

    Planarization p;
    try {
        p = planarize(g);
    } catch (const std::exception& ex) {
        r.fail(std::string("rotation system rejected: ") + ex.what());
        return r;
    }
    for (int j = 0; j < g.q; ++j) {
        int v = g.n + j;
        auto darts = p.pg.darts_at(v);
        if (darts.size() != 4) {
            r.fail("crossing " + std::to_string(v) + " has degree " +
                   std::to_string(darts.size()));
            continue;
        }
        int e0 = p.seg_edge[darts[0] >> 1];
        int e1 = p.seg_edge[darts[1] >> 1];
        bool alt = e0 != e1 && p.seg_edge[darts[2] >> 1] == e0 &&
                   p.seg_edge[darts[3] >> 1] == e1;
        if (!alt)
            r.fail("crossing " + std::to_string(v) +
                   " rotation does not alternate between its two edges");
    }
    if (!p.pg.connected()) {
        r.fail("planarization is not connected");
        return r;
    }
    int f = p.pg.faces().count;
    int expect = p.pg.alive_edge_count() - p.pg.alive_vertex_count() + 2;
    if (f != expect)
        r.fail("rotation system is not plane: " + std::to_string(f) +
               " faces, Euler expects " + std::to_string(expect));
    return r;
}

/// Subdivides every edge once.  Edge e gains a real vertex t_e = n + e placed
/// on the segment incident to e's lower-id endpoint, before any crossing.  The
/// half containing that endpoint keeps id e; the other half becomes id E + e.
/// Crossing ids shift up by E.  Preserves the rotation system exactly.
inline EmbeddedGraph subdivide(const EmbeddedGraph& g) {
    int E = g.edge_count();
    EmbeddedGraph h;
    h.n = g.n + E;
    h.q = g.q;
    h.edges.resize(2 * E);
    auto remap_vertex = [&](int v) { return v < g.n ? v : v + E; };
    for (int e = 0; e < E; ++e) {
        const ParentEdge& pe = g.edges[e];
        int t = g.n + e;
        std::vector<int> inner;
        inner.reserve(pe.interior.size());
        for (int d : pe.interior) inner.push_back(d + E);
        if (pe.u <= pe.v) {
            h.edges[e] = {pe.u, t, {}};
            h.edges[E + e] = {t, pe.v, std::move(inner)};
        } else {
            h.edges[e] = {t, pe.v, {}};
            h.edges[E + e] = {pe.u, t, std::move(inner)};
        }
    }
    h.rot.resize(h.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto& out = h.rot[remap_vertex(v)];
        for (auto [e, s] : g.rot[v]) {
            // The long half E+e keeps every segment, in order; only the kept
            // endpoint sees the short half, whose sole segment is index 0.
            std::pair<int, int> me{E + e, s};
            if (v == g.edges[e].u && s == 0 && g.edges[e].u <= g.edges[e].v)
                me = {e, 0};
            else if (v == g.edges[e].v &&
                     s == static_cast<int>(g.edges[e].interior.size()) &&
                     g.edges[e].u > g.edges[e].v)
                me = {e, 0};
            out.push_back(me);
        }
    }
    for (int e = 0; e < E; ++e) {
        int t = g.n + e;
        const ParentEdge& pe = g.edges[e];
        int k = static_cast<int>(pe.interior.size());
        if (pe.u <= pe.v)
            h.rot[t] = {{e, 0}, {E + e, 0}};
        else
            h.rot[t] = {{e, 0}, {E + e, k}};
    }
    return h;
}

/// Multigraph view of the real graph: real vertices and parent edges only.
struct RealGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;             // unique neighbours, sorted
    std::map<std::pair<int, int>, int> multiplicity;  // key has u < v
    std::vector<int> degree;                       // with multiplicity

    bool adjacent(int u, int v) const {
        auto key = std::minmax(u, v);
        return multiplicity.count({key.first, key.second}) > 0;
    }
    int min_degree() const {
        int m = -1;
        for (int v = 0; v < n; ++v)
            if (m < 0 || degree[v] < m) m = degree[v];
        return m;
    }
    bool complete_simple() const {
        for (auto& [k, c] : multiplicity)
            if (c > 1) return false;
        for (int v = 0; v < n; ++v)
            if (static_cast<int>(adj[v].size()) != n - 1) return false;
        return true;
    }
};

inline RealGraph real_graph(const EmbeddedGraph& g) {
    RealGraph r;
    r.n = g.n;
    r.adj.resize(g.n);
    r.degree.assign(g.n, 0);
    for (const auto& pe : g.edges) {
        auto key = std::minmax(pe.u, pe.v);
        r.multiplicity[{key.first, key.second}] += 1;
        r.degree[pe.u] += 1;
        r.degree[pe.v] += 1;
    }
    std::vector<std::set<int>> nb(g.n);
    for (auto& [k, c] : r.multiplicity) {
        nb[k.first].insert(k.second);
        nb[k.second].insert(k.first);
    }
    for (int v = 0; v < g.n; ++v) r.adj[v].assign(nb[v].begin(), nb[v].end());
    return r;
}

}  // namespace embcon
