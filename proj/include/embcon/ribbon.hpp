#pragma once

#include <algorithm>
#include <deque>
#include <thread>
#include <vector>

#include "embcon/embedded_graph.hpp"
#include "embcon/radial.hpp"
#include "embcon/util.hpp"

namespace embcon {

/// Per-crossing ribbon data: distances from the crossing and, per edge, how
/// far out its drawing reaches.  Lets one BFS serve every radius query during
/// the galloping search.
class CrossingProbe {
public:
    CrossingProbe(const EmbeddedGraph& g, const RadialGraph& radial, int v)
        : g_(g), v_(v) {
        require(g.is_crossing(v), "ribbon radius is defined for crossings");
        for (int e = 0; e < g.edge_count(); ++e)
            for (size_t i = 0; i < g.edges[e].interior.size(); ++i)
                if (g.edges[e].interior[i] == v)
                    passes_.push_back({e, static_cast<int>(i)});
        check(passes_.size() == 2, "crossing does not lie on exactly two edges");
        dist_ = radial_distances(radial, {v});
        edge_reach_.resize(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) {
            int m = std::max(dist_[g.edges[e].u], dist_[g.edges[e].v]);
            for (int d : g.edges[e].interior) m = std::max(m, dist_[d]);
            edge_reach_[e] = m;
        }
        // Radius at which the whole graph is inside the ball; the test is
        // guaranteed true there, bounding the search.
        int far = 0;
        for (int x : edge_reach_) far = std::max(far, x);
        rmax_ = far / 2 + 1;
    }

    int endpoint_of(std::pair<int, int> rot_entry) const {
        auto [e, s] = rot_entry;
        for (auto [pe, pi] : passes_)
            if (pe == e) return s == pi ? g_.edges[e].u : g_.edges[e].v;
        check(false, "rotation entry of a foreign edge at a crossing");
        return -1;
    }

    /// Both incident edges drawn inside the ball, and a rotation-consecutive
    /// endpoint pair connected using only edges drawn inside the ball.
    bool mu_at_most(int r) const {
        if (edge_reach_[passes_[0].first] > 2 * r ||
            edge_reach_[passes_[1].first] > 2 * r)
            return false;
        Dsu dsu(g_.n);
        for (int e = 0; e < g_.edge_count(); ++e)
            if (edge_reach_[e] <= 2 * r) dsu.unite(g_.edges[e].u, g_.edges[e].v);
        const auto& rot = g_.rot[v_];
        bool first = dsu.same(endpoint_of(rot[0]), endpoint_of(rot[1]));
        for (int i = 1; i < 4; ++i)
            check(first == dsu.same(endpoint_of(rot[i]),
                                    endpoint_of(rot[(i + 1) % 4])),
                  "consecutive endpoint pairs disagree");
        return first;
    }

    int mu() const {
        int lo = 1;
        if (mu_at_most(lo)) return lo;
        int hi = 2;
        while (hi < rmax_ && !mu_at_most(hi)) {
            lo = hi;
            hi *= 2;
        }
        hi = std::min(hi, rmax_);
        // Invariant: lo fails, hi passes.
        while (hi - lo > 1) {
            int mid = lo + (hi - lo) / 2;
            (mu_at_most(mid) ? hi : lo) = mid;
        }
        return hi;
    }

    int edge1() const { return passes_[0].first; }
    int edge2() const { return passes_[1].first; }
    int edge_reach(int e) const { return edge_reach_[e]; }

private:
    const EmbeddedGraph& g_;
    int v_;
    std::vector<std::pair<int, int>> passes_;
    std::vector<int> dist_;
    std::vector<int> edge_reach_;
    int rmax_ = 1;
};

struct RibbonResult {
    int mu = 1;                    // 1 + max over crossings (1 when plane)
    std::vector<int> per_crossing;  // indexed by crossing (vertex id - n)
};

inline RibbonResult ribbon_radius(const EmbeddedGraph& g,
                                  const RadialGraph& radial, int threads = 1) {
    RibbonResult out;
    out.per_crossing.assign(g.q, 0);
    if (g.q == 0) return out;
    auto work = [&](int lo, int hi) {
        for (int j = lo; j < hi; ++j)
            out.per_crossing[j] = CrossingProbe(g, radial, g.n + j).mu();
    };
    threads = std::max(1, std::min(threads, g.q));
    if (threads == 1) {
        work(0, g.q);
    } else {
        std::vector<std::thread> pool;
        int chunk = (g.q + threads - 1) / threads;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(work, t * chunk, std::min(g.q, (t + 1) * chunk));
        for (auto& th : pool) th.join();
    }
    for (int m : out.per_crossing) out.mu = std::max(out.mu, 1 + m);
    return out;
}

/// A closed walk certifying the ribbon radius of a crossing: the two crossing
/// edges plus a connecting walk inside the ball of radius mu(v).  For a
/// parallel pair the walk is empty and the certificate is just [e1, e2].
struct RibbonWitness {
    int crossing = -1;
    int radius = 0;
    int edge1 = -1, edge2 = -1;
    std::vector<int> path_vertices;  // endpoint-to-endpoint, may be one vertex
    std::vector<int> path_edges;
};

inline RibbonWitness ribbon_witness(const EmbeddedGraph& g,
                                    const RadialGraph& radial, int v) {
    CrossingProbe probe(g, radial, v);
    RibbonWitness w;
    w.crossing = v;
    w.radius = probe.mu();
    w.edge1 = probe.edge1();
    w.edge2 = probe.edge2();
    int a = probe.endpoint_of(g.rot[v][0]);
    int b = probe.endpoint_of(g.rot[v][1]);
    w.path_vertices = {a};
    if (a == b) return w;
    // Shortest endpoint-to-endpoint walk over edges inside the ball.
    std::vector<int> via_edge(g.n, -1), parent(g.n, -1);
    std::deque<int> queue{a};
    parent[a] = a;
    while (!queue.empty() && parent[b] == -1) {
        int x = queue.front();
        queue.pop_front();
        for (int e = 0; e < g.edge_count(); ++e) {
            if (probe.edge_reach(e) > 2 * w.radius) continue;
            int y = -1;
            if (g.edges[e].u == x) y = g.edges[e].v;
            if (g.edges[e].v == x) y = g.edges[e].u;
            if (y >= 0 && parent[y] == -1) {
                parent[y] = x;
                via_edge[y] = e;
                queue.push_back(y);
            }
        }
    }
    check(parent[b] != -1, "witness path vanished after the radius search");
    std::vector<int> rev_v{b}, rev_e;
    for (int x = b; x != a; x = parent[x]) {
        rev_e.push_back(via_edge[x]);
        rev_v.push_back(parent[x]);
    }
    w.path_vertices.assign(rev_v.rbegin(), rev_v.rend());
    w.path_edges.assign(rev_e.rbegin(), rev_e.rend());
    return w;
}

}  // namespace embcon
