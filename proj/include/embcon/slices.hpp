#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "embcon/embedded_graph.hpp"
#include "embcon/radial.hpp"
#include "embcon/util.hpp"

namespace embcon {

/// One window of the layered radial graph, with everything outside the core
/// layers contracted to apex vertices.  Vertex ids are inherited from the
/// radial graph; contracted vertices are dead in `graph`.  The augmentation
/// edges and the crossed-edge membership lists localize the per-edge side
/// condition for the labeling search.
struct Slice {
    PlaneGraph graph;
    int window_lo = 0, window_hi = 0;  // middle layers [i, i+w]
    int core_lo = 0, core_hi = 0;      // kept layers [i-1, i+w+1], clamped
    std::vector<char> in_core;         // per radial vertex
    std::vector<int> apex_of;          // per radial vertex: its apex, -1 if core
    std::vector<char> is_apex;         // per radial vertex
    std::vector<int> apexes;
    int lower_apex = -1;
    std::vector<int> layer_tag;        // per slice vertex (apexes get rim layers)
    int center = -1;
    int ecc = 0;

    struct Subpath {
        int edge;                  // parent edge (always crossed)
        std::vector<int> vertices; // maximal run of its drawing inside the core
    };
    std::vector<Subpath> subpaths;
    std::vector<std::pair<int, int>> extra_edges;    // augmentation, deduped
    // Per parent edge with crossings: core drawing vertices plus the apexes
    // covering its outside parts.  Empty for uncrossed edges.
    std::vector<std::vector<int>> edge_members;
};

inline Slice build_slice(const EmbeddedGraph& g, const RadialGraph& radial,
                         const Layering& lay, int i, int w) {
    int d = lay.layer_count;
    require(i >= 1 && i <= d, "window start out of range");
    Slice s;
    s.window_lo = i;
    s.window_hi = i + w;
    s.core_lo = std::max(1, i - 1);
    s.core_hi = std::min(d, i + w + 1);
    int nv = radial.lam.vertex_count();
    s.in_core.assign(nv, 0);
    for (int v = 0; v < nv; ++v)
        s.in_core[v] = lay.layer[v] >= s.core_lo && lay.layer[v] <= s.core_hi;
    s.graph = radial.lam;
    s.apex_of.assign(nv, -1);
    s.is_apex.assign(nv, 0);

    // Outer components, each contracted onto its minimum vertex.
    std::vector<int> comp(nv, -1);
    for (int v0 = 0; v0 < nv; ++v0) {
        if (s.in_core[v0] || comp[v0] != -1) continue;
        // Collect the component and a BFS spanning tree rooted at v0.
        std::vector<int> members{v0};
        std::vector<int> tree_edges;
        std::vector<int> parent_of(1, -1);
        comp[v0] = v0;
        std::deque<int> queue{v0};
        std::set<int> intra;  // all edges inside the component
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int dart : s.graph.darts_at(v)) {
                int u = s.graph.head(dart);
                if (s.in_core[u]) continue;
                intra.insert(dart >> 1);
                if (comp[u] == -1) {
                    comp[u] = v0;
                    members.push_back(u);
                    tree_edges.push_back(dart >> 1);
                    queue.push_back(u);
                }
            }
        }
        for (int e : intra)
            if (std::find(tree_edges.begin(), tree_edges.end(), e) ==
                tree_edges.end())
            s.graph.delete_edge(e);
        // Contract the tree edge by edge, always keeping the root side.  BFS
        // order guarantees the kept side is already merged into the root.
        for (int e : tree_edges) s.graph.contract_edge(e, v0);
        for (int v : members) s.apex_of[v] = v0;
        s.apex_of[v0] = v0;
        s.is_apex[v0] = 1;
        s.apexes.push_back(v0);
        bool lower = lay.layer[v0] <= i - 2;
        if (lower) {
            check(s.lower_apex == -1, "two lower components in a BFS layering");
            s.lower_apex = v0;
        }
        // Drop duplicate apex-core edges, keeping the first per neighbour.
        std::set<int> seen;
        std::vector<int> dup;
        for (int dart : s.graph.darts_at(v0))
            if (!seen.insert(s.graph.head(dart)).second) dup.push_back(dart >> 1);
        for (int e : dup) s.graph.delete_edge(e);
    }
    check(s.graph.connected(), "slice is disconnected");
    check(s.graph.euler_ok(), "slice contraction broke planarity");

    s.layer_tag.assign(nv, -1);
    for (int v = 0; v < nv; ++v) {
        if (!s.graph.vertex_alive(v)) continue;
        if (s.is_apex[v])
            s.layer_tag[v] = (v == s.lower_apex) ? i - 1 : i + w + 1;
        else
            s.layer_tag[v] = lay.layer[v];
    }
    s.center = s.lower_apex != -1 ? s.lower_apex : 0;
    check(s.graph.vertex_alive(s.center), "slice center fell outside the slice");
    {
        std::vector<int> dist(nv, -1);
        std::deque<int> queue{s.center};
        dist[s.center] = 0;
        int reached = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int dart : s.graph.darts_at(v)) {
                int u = s.graph.head(dart);
                if (dist[u] == -1) {
                    dist[u] = dist[v] + 1;
                    s.ecc = std::max(s.ecc, dist[u]);
                    ++reached;
                    queue.push_back(u);
                }
            }
        }
        check(reached == s.graph.alive_vertex_count(), "slice BFS missed vertices");
        check(s.ecc <= w + 4, "slice eccentricity exceeds its bound");
    }

    // Crossed-edge bookkeeping: core runs, membership (with gap apexes), and
    // the augmentation chords that localize long runs.
    s.edge_members.resize(g.edge_count());
    std::set<std::pair<int, int>> have;
    for (int e = 0; e < s.graph.edge_count(); ++e)
        if (s.graph.edge_alive(e)) {
            auto key = std::minmax(s.graph.tail(2 * e), s.graph.head(2 * e));
            have.insert({key.first, key.second});
        }
    auto add_extra = [&](int a, int b) {
        auto key = std::minmax(a, b);
        if (key.first != key.second &&
            have.insert({key.first, key.second}).second)
            s.extra_edges.push_back({key.first, key.second});
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.edges[e].interior.empty()) continue;
        std::vector<int> seq{g.edges[e].u};
        for (int x : g.edges[e].interior) seq.push_back(x);
        seq.push_back(g.edges[e].v);
        std::set<int> mem;
        std::vector<int> run;
        auto flush = [&] {
            if (run.empty()) return;
            if (run.size() >= 2) {
                add_extra(run.front(), run.back());
                for (size_t j = 1; j + 1 < run.size(); ++j) {
                    add_extra(run[j], run.front());
                    add_extra(run[j], run.back());
                }
                s.subpaths.push_back({e, run});
            }
            run.clear();
        };
        for (int x : seq) {
            if (s.in_core[x]) {
                mem.insert(x);
                run.push_back(x);
            } else {
                mem.insert(s.apex_of[x]);
                flush();
            }
        }
        flush();
        s.edge_members[e].assign(mem.begin(), mem.end());
    }
    return s;
}

/// Extends a labeling of the slice's planarization vertices and apexes to the
/// whole radial graph: core faces become X, contracted vertices take their
/// apex's label.  Labels use 0 = A, 1 = X, 2 = B.
inline std::vector<char> extend_labeling(const RadialGraph& radial,
                                         const Slice& s,
                                         const std::vector<char>& slice_label) {
    int nv = radial.lam.vertex_count();
    std::vector<char> full(nv, 1);
    for (int v = 0; v < nv; ++v) {
        if (s.in_core[v]) {
            if (radial.is_face_vertex(v))
                full[v] = 1;
            else
                full[v] = slice_label[v];
        } else {
            full[v] = slice_label[s.apex_of[v]];
        }
    }
    return full;
}

inline std::string slice_to_dot(const Slice& s) {
    std::ostringstream out;
    out << "graph slice {\n";
    for (int v = 0; v < s.graph.vertex_count(); ++v) {
        if (!s.graph.vertex_alive(v)) continue;
        out << "  v" << v << " [label=\"" << v << " L" << s.layer_tag[v] << "\"";
        if (s.is_apex[v]) out << ",shape=diamond";
        out << "];\n";
    }
    for (int e = 0; e < s.graph.edge_count(); ++e) {
        if (!s.graph.edge_alive(e)) continue;
        out << "  v" << s.graph.tail(2 * e) << " -- v" << s.graph.head(2 * e)
            << ";\n";
    }
    for (auto [a, b] : s.extra_edges)
        out << "  v" << a << " -- v" << b << " [style=dotted];\n";
    out << "}\n";
    return out.str();
}

}  // namespace embcon
