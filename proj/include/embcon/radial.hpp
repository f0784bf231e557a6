#pragma once

#include <deque>
#include <sstream>
#include <string>
#include <vector>

#include "embcon/embedded_graph.hpp"
#include "embcon/plane_graph.hpp"
#include "embcon/util.hpp"

namespace embcon {

/// The radial extension of a planarization: one new vertex per face, joined to
/// every corner of that face.  Segment edges keep their ids; spoke edges
/// follow.  The construction preserves planarity: the spoke for the corner
/// after dart x enters head(x)'s rotation right after reverse(x), and each
/// face vertex sees its corners in reverse walk order.
struct RadialGraph {
    PlaneGraph lam;               // segments + spokes, plane
    int base_vertices = 0;        // planarization vertices (reals + crossings)
    int segment_count = 0;        // edge ids below this are segments
    int face_count = 0;
    std::vector<int> face_of_dart;            // per segment dart, in the base graph
    std::vector<std::vector<int>> face_walks;  // per face, base-graph darts

    int face_vertex(int f) const { return base_vertices + f; }
    bool is_face_vertex(int v) const { return v >= base_vertices; }
    bool is_spoke(int lam_edge) const { return lam_edge >= segment_count; }
};

inline RadialGraph build_radial(const Planarization& p) {
    RadialGraph r;
    r.lam = p.pg;
    r.base_vertices = p.pg.vertex_count();
    r.segment_count = p.pg.edge_count();
    auto faces = p.pg.faces();
    r.face_count = faces.count;
    r.face_of_dart = std::move(faces.face_of);
    r.face_walks = std::move(faces.walks);
    for (int f = 0; f < r.face_count; ++f) r.lam.add_vertex();
    for (int f = 0; f < r.face_count; ++f) {
        std::vector<int> spoke_darts;
        for (int x : r.face_walks[f]) {
            int e = r.lam.add_detached_edge(r.lam.head(x), r.face_vertex(f));
            r.lam.attach_dart(2 * e, x ^ 1);
            spoke_darts.push_back(2 * e + 1);
        }
        int prev = -1;
        for (auto it = spoke_darts.rbegin(); it != spoke_darts.rend(); ++it) {
            r.lam.attach_dart(*it, prev);
            prev = *it;
        }
    }
    check(r.lam.euler_ok(), "radial graph is not plane");
    return r;
}

/// BFS distances in the radial-edge graph R (spokes only, unit length) from a
/// set of source vertices.  Unreached entries stay -1.  The face distance
/// between base vertices is half this distance.
inline std::vector<int> radial_distances(const RadialGraph& r,
                                         const std::vector<int>& sources) {
    std::vector<int> dist(r.lam.vertex_count(), -1);
    std::deque<int> queue;
    for (int s : sources) {
        if (dist[s] == 0) continue;
        dist[s] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int d : r.lam.darts_at(v)) {
            if (!r.is_spoke(d >> 1)) continue;
            int w = r.lam.head(d);
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

inline int face_distance(const RadialGraph& r, int u, int v) {
    auto dist = radial_distances(r, {u});
    check(dist[v] >= 0, "face distance in a disconnected radial graph");
    check(dist[v] % 2 == 0, "odd radial distance between base vertices");
    return dist[v] / 2;
}

/// Membership of the radius-rad ball around the sources: base vertices within
/// radial distance 2*rad, face vertices within 2*rad - 1.
struct Ball {
    std::vector<char> in;  // over all vertices of the radial graph
    bool contains(int v) const { return in[v] != 0; }
};

inline Ball ball(const RadialGraph& r, const std::vector<int>& sources, int rad) {
    auto dist = radial_distances(r, sources);
    Ball b;
    b.in.assign(r.lam.vertex_count(), 0);
    for (int v = 0; v < r.lam.vertex_count(); ++v) {
        if (dist[v] < 0) continue;
        int cap = r.is_face_vertex(v) ? 2 * rad - 1 : 2 * rad;
        if (dist[v] <= cap) b.in[v] = 1;
    }
    return b;
}

/// Largest distance between any two marked vertices, measured over all edges
/// of the radial super-graph (segments and spokes alike).  Quadratic in the
/// marked set; meant for certificates, not hot paths.
inline int lam_diameter(const RadialGraph& r, const std::vector<int>& members) {
    int best = 0;
    for (int v : members) {
        std::vector<int> dist(r.lam.vertex_count(), -1);
        std::deque<int> queue{v};
        dist[v] = 0;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int d : r.lam.darts_at(x)) {
                int w = r.lam.head(d);
                if (dist[w] == -1) {
                    dist[w] = dist[x] + 1;
                    queue.push_back(w);
                }
            }
        }
        for (int w : members) {
            check(dist[w] >= 0, "marked vertices are disconnected");
            best = std::max(best, dist[w]);
        }
    }
    return best;
}

/// Boundary of a ball: segments whose two sides lie in one face inside the
/// ball and one face outside.  Bridges (same face on both sides) never count.
inline std::vector<int> ball_boundary(const RadialGraph& r, const Ball& b) {
    std::vector<int> out;
    for (int e = 0; e < r.segment_count; ++e) {
        int f1 = r.face_of_dart[2 * e];
        int f2 = r.face_of_dart[2 * e + 1];
        if (f1 == f2) continue;
        bool in1 = b.contains(r.face_vertex(f1));
        bool in2 = b.contains(r.face_vertex(f2));
        if (in1 != in2) out.push_back(e);
    }
    return out;
}

/// Full BFS layering of the radial graph (all edges) from one source.
/// layer[v] is 1-based; layer_count = number of nonempty layers.
struct Layering {
    std::vector<int> layer;
    int layer_count = 0;
};

inline Layering bfs_layering(const RadialGraph& r, int source) {
    Layering out;
    out.layer.assign(r.lam.vertex_count(), -1);
    std::deque<int> queue{source};
    out.layer[source] = 1;
    out.layer_count = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int d : r.lam.darts_at(v)) {
            int w = r.lam.head(d);
            if (out.layer[w] == -1) {
                out.layer[w] = out.layer[v] + 1;
                out.layer_count = std::max(out.layer_count, out.layer[w]);
                queue.push_back(w);
            }
        }
    }
    for (int v = 0; v < r.lam.vertex_count(); ++v)
        check(out.layer[v] != -1, "radial graph is disconnected");
    return out;
}

/// Graphviz export of the radial graph (debugging aid).
inline std::string radial_to_dot(const RadialGraph& r) {
    std::ostringstream out;
    out << "graph radial {\n";
    for (int v = 0; v < r.lam.vertex_count(); ++v) {
        out << "  v" << v;
        if (r.is_face_vertex(v))
            out << " [shape=box,label=\"f" << v - r.base_vertices << "\"]";
        else
            out << " [label=\"" << v << "\"]";
        out << ";\n";
    }
    for (int e = 0; e < r.lam.edge_count(); ++e) {
        if (!r.lam.edge_alive(e)) continue;
        out << "  v" << r.lam.tail(2 * e) << " -- v" << r.lam.head(2 * e);
        if (r.is_spoke(e)) out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace embcon
