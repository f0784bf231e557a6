#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "embcon/plane_graph.hpp"
#include "embcon/slices.hpp"
#include "embcon/util.hpp"

namespace embcon {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;  // sorted, unique
    std::vector<int> parent;             // -1 at the root
    std::vector<std::vector<int>> children;

    int node_count() const { return static_cast<int>(bags.size()); }
    int width() const {
        size_t m = 0;
        for (auto& b : bags) m = std::max(m, b.size());
        return static_cast<int>(m) - 1;
    }
    int root() const {
        for (int t = 0; t < node_count(); ++t)
            if (parent[t] == -1) return t;
        check(false, "rootless decomposition");
        return -1;
    }
    void rebuild_children() {
        children.assign(bags.size(), {});
        for (int t = 0; t < node_count(); ++t)
            if (parent[t] >= 0) children[parent[t]].push_back(t);
    }
};

/// T1 vertices covered, T2 required pairs in some bag, T3 connected bag sets,
/// and the parent pointers form one tree.
inline bool validate_td(const TreeDecomposition& td,
                        const std::vector<int>& vertices,
                        const std::vector<std::pair<int, int>>& edges) {
    int n = td.node_count();
    if (n == 0) return vertices.empty();
    int roots = 0;
    for (int t = 0; t < n; ++t)
        if (td.parent[t] == -1) ++roots;
    if (roots != 1) return false;
    std::set<int> covered;
    std::map<int, std::vector<int>> nodes_of;
    for (int t = 0; t < n; ++t)
        for (int v : td.bags[t]) {
            covered.insert(v);
            nodes_of[v].push_back(t);
        }
    for (int v : vertices)
        if (!covered.count(v)) return false;
    for (auto [a, b] : edges) {
        auto it = nodes_of.find(a);
        if (it == nodes_of.end()) return false;
        bool found = false;
        for (int t : it->second)
            if (std::binary_search(td.bags[t].begin(), td.bags[t].end(), b)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    for (auto& [v, nodes] : nodes_of) {
        // The occupied nodes must form one connected subtree: each non-top
        // occupied node's parent must be occupied too (top = closest to root).
        std::set<int> occ(nodes.begin(), nodes.end());
        int tops = 0;
        for (int t : nodes)
            if (td.parent[t] == -1 || !occ.count(td.parent[t])) ++tops;
        if (tops != 1) return false;
    }
    return true;
}

namespace treedec_detail {

inline int distinct_on_walk(const PlaneGraph& pg, int dart) {
    std::set<int> seen;
    int d = dart;
    do {
        seen.insert(pg.head(d));
        d = pg.next_in_face(d);
    } while (d != dart);
    return static_cast<int>(seen.size());
}

inline int walk_length(const PlaneGraph& pg, int dart) {
    int len = 0, d = dart;
    do {
        ++len;
        d = pg.next_in_face(d);
    } while (d != dart);
    return len;
}

}  // namespace treedec_detail

/// Fan-triangulates every face of a plane graph in place.  Within a face the
/// fan is anchored at the corner of the smallest vertex (first occurrence),
/// advancing the anchor when the next chord would be a loop.  Faces that are
/// triangles or have at most two distinct vertices are left alone.
inline void triangulate(PlaneGraph& pg) {
    std::vector<int> reps;
    for (auto& w : pg.faces().walks) reps.push_back(w[0]);
    for (int rep : reps) {
        // Anchor at the first occurrence of the minimum corner vertex.
        int x = rep, best = rep;
        do {
            if (pg.head(x) < pg.head(best)) best = x;
            x = pg.next_in_face(x);
        } while (x != rep);
        x = best;
        while (treedec_detail::walk_length(pg, x) > 3 &&
               treedec_detail::distinct_on_walk(pg, x) > 2) {
            int y = pg.next_in_face(pg.next_in_face(x));
            if (pg.head(x) == pg.head(y)) {
                x = pg.next_in_face(x);
                continue;
            }
            pg.split_face(x, y);
        }
    }
    check(pg.euler_ok(), "triangulation broke planarity");
}

/// Tree decomposition of a plane graph from a BFS tree: triangulate, take the
/// BFS tree from `center`, give every remaining face the union of its
/// corners' root paths, and connect faces across non-tree edges (that dual
/// restriction is a tree).  Width is at most 3*(radius+1) - 1.
inline TreeDecomposition bounded_radius_td(const PlaneGraph& graph, int center) {
    PlaneGraph pg = graph;
    triangulate(pg);
    std::vector<int> par(pg.vertex_count(), -2);
    par[center] = -1;
    std::deque<int> queue{center};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int d : pg.darts_at(v)) {
            int u = pg.head(d);
            if (par[u] == -2) {
                par[u] = v;
                queue.push_back(u);
            }
        }
    }
    std::vector<char> in_tree(pg.edge_count(), 0);
    std::vector<char> have_parent_edge(pg.vertex_count(), 0);
    for (int e = 0; e < pg.edge_count(); ++e) {
        if (!pg.edge_alive(e)) continue;
        int a = pg.tail(2 * e), b = pg.head(2 * e);
        if (par[a] == b && !have_parent_edge[a]) {
            in_tree[e] = have_parent_edge[a] = 1;
        } else if (par[b] == a && !have_parent_edge[b]) {
            in_tree[e] = have_parent_edge[b] = 1;
        }
    }
    auto faces = pg.faces();
    TreeDecomposition td;
    td.bags.resize(faces.count);
    for (int f = 0; f < faces.count; ++f) {
        std::set<int> bag;
        for (int d : faces.walks[f])
            for (int v = pg.head(d); v != -1; v = par[v]) bag.insert(v);
        td.bags[f].assign(bag.begin(), bag.end());
    }
    std::vector<std::vector<int>> dual(faces.count);
    for (int e = 0; e < pg.edge_count(); ++e) {
        if (!pg.edge_alive(e) || in_tree[e]) continue;
        int f1 = faces.face_of[2 * e], f2 = faces.face_of[2 * e + 1];
        check(f1 != f2, "non-tree bridge while building the dual tree");
        dual[f1].push_back(f2);
        dual[f2].push_back(f1);
    }
    td.parent.assign(faces.count, -2);
    td.parent[0] = -1;
    std::deque<int> fq{0};
    int seen = 1;
    while (!fq.empty()) {
        int f = fq.front();
        fq.pop_front();
        for (int o : dual[f])
            if (td.parent[o] == -2) {
                td.parent[o] = f;
                ++seen;
                fq.push_back(o);
            }
    }
    check(seen == faces.count, "dual restriction is not spanning");
    td.rebuild_children();
    return td;
}

/// Min-fill elimination decomposition over an explicit vertex and edge list.
/// bag(v) = v plus its later-eliminated neighbours in the filled graph;
/// parents follow the earliest-eliminated bag member.
inline TreeDecomposition min_fill_td(const std::vector<int>& vertices,
                                     const std::vector<std::pair<int, int>>& edges) {
    check(!vertices.empty(), "decomposition of an empty graph");
    std::map<int, std::set<int>> adj;
    for (int v : vertices) adj[v];
    for (auto [a, b] : edges)
        if (a != b) {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    std::map<int, int> order;  // elimination index
    std::vector<int> by_order;
    std::map<int, std::vector<int>> bag_of;
    std::map<int, std::set<int>> live = adj;
    std::set<int> remaining(vertices.begin(), vertices.end());
    while (!remaining.empty()) {
        int best = -1;
        long best_fill = -1;
        for (int v : remaining) {
            long fill = 0;
            auto& nb = live[v];
            for (auto i = nb.begin(); i != nb.end(); ++i)
                for (auto j = std::next(i); j != nb.end(); ++j)
                    if (!live[*i].count(*j)) ++fill;
            if (best == -1 || fill < best_fill ||
                (fill == best_fill && v < best)) {
                best = v;
                best_fill = fill;
            }
        }
        auto nb = live[best];
        for (int a : nb)
            for (int b : nb)
                if (a != b) live[a].insert(b);
        for (int a : nb) live[a].erase(best);
        live.erase(best);
        order[best] = static_cast<int>(by_order.size());
        by_order.push_back(best);
        remaining.erase(best);
        std::vector<int> bag{best};
        bag.insert(bag.end(), nb.begin(), nb.end());
        std::sort(bag.begin(), bag.end());
        bag_of[best] = bag;
    }
    TreeDecomposition td;
    std::map<int, int> node_of;
    for (int v : by_order) {
        node_of[v] = td.node_count();
        td.bags.push_back(bag_of[v]);
    }
    td.parent.assign(td.node_count(), -1);
    for (int v : by_order) {
        int first = -1;
        for (int u : bag_of[v])
            if (u != v && (first == -1 || order[u] < order[first])) first = u;
        if (first != -1) td.parent[node_of[v]] = node_of[first];
    }
    // The last-eliminated vertex roots the tree; earlier isolated pieces
    // attach there so the decomposition stays one tree.
    int root = node_of[by_order.back()];
    for (int t = 0; t < td.node_count(); ++t)
        if (td.parent[t] == -1 && t != root) td.parent[t] = root;
    td.rebuild_children();
    return td;
}

/// Widens bags so every drawing subpath's two end vertices accompany all of
/// its vertices.  Bag subtrees stay connected because consecutive subpath
/// vertices already share bags; at most four partners join per bag member.
inline void augment_td(TreeDecomposition& td,
                       const std::vector<Slice::Subpath>& subpaths) {
    std::map<int, std::vector<int>> partners;
    for (auto& sp : subpaths)
        for (int v : sp.vertices) {
            partners[v].push_back(sp.vertices.front());
            partners[v].push_back(sp.vertices.back());
        }
    for (auto& bag : td.bags) {
        std::set<int> grown(bag.begin(), bag.end());
        for (int v : bag) {
            auto it = partners.find(v);
            if (it != partners.end())
                grown.insert(it->second.begin(), it->second.end());
        }
        bag.assign(grown.begin(), grown.end());
    }
}

/// Splits nodes with more than two children into chains of duplicate bags.
inline void binarize_td(TreeDecomposition& td) {
    td.rebuild_children();
    for (int t = 0; t < td.node_count(); ++t) {
        while (td.children[t].size() > 2) {
            int extra = td.node_count();
            td.bags.push_back(td.bags[t]);
            td.parent.push_back(t);
            td.children.push_back({});
            // Move all children but the first under the duplicate.
            auto kids = td.children[t];
            td.children[t] = {kids[0], extra};
            for (size_t i = 1; i < kids.size(); ++i) {
                td.parent[kids[i]] = extra;
                td.children[extra].push_back(kids[i]);
            }
        }
    }
}

inline std::string td_to_pace(const TreeDecomposition& td, int vertex_count) {
    std::ostringstream out;
    out << "s td " << td.node_count() << " " << td.width() + 1 << " "
        << vertex_count << "\n";
    for (int t = 0; t < td.node_count(); ++t) {
        out << "b " << t + 1;
        for (int v : td.bags[t]) out << " " << v + 1;
        out << "\n";
    }
    for (int t = 0; t < td.node_count(); ++t)
        if (td.parent[t] >= 0) out << td.parent[t] + 1 << " " << t + 1 << "\n";
    return out.str();
}

/// Decomposition used by the labeling search: the narrower of the
/// bounded-radius construction (augmented) and min-fill over the slice edges
/// plus augmentation chords, binarized and checked.
inline TreeDecomposition slice_td(const Slice& s) {
    std::vector<int> vertices;
    for (int v = 0; v < s.graph.vertex_count(); ++v)
        if (s.graph.vertex_alive(v)) vertices.push_back(v);
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < s.graph.edge_count(); ++e)
        if (s.graph.edge_alive(e))
            edges.push_back({s.graph.tail(2 * e), s.graph.head(2 * e)});
    std::vector<std::pair<int, int>> all_edges = edges;
    all_edges.insert(all_edges.end(), s.extra_edges.begin(), s.extra_edges.end());

    TreeDecomposition radial_td = bounded_radius_td(s.graph, s.center);
    augment_td(radial_td, s.subpaths);
    TreeDecomposition pick = std::move(radial_td);
    // Min-fill is cubic-ish, so only small slices try it; there it usually
    // beats the radius construction by a comfortable margin.  A slice with no
    // apexes is the whole graph (one window per budget, not one per layer),
    // so the cost is paid once and the narrower bags matter most there.
    if (vertices.size() <= 160 || s.apexes.empty()) {
        TreeDecomposition fill_td = min_fill_td(vertices, all_edges);
        if (fill_td.width() <= pick.width()) pick = std::move(fill_td);
    }
    binarize_td(pick);
    check(validate_td(pick, vertices, all_edges), "slice decomposition invalid");
    return pick;
}

}  // namespace embcon
