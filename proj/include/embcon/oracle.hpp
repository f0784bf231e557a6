#pragma once

#include <algorithm>
#include <deque>
#include <vector>

#include "embcon/embedded_graph.hpp"
#include "embcon/radial.hpp"
#include "embcon/util.hpp"

namespace embcon {

/// Dinic max-flow on a small integer-capacity network.
class FlowNetwork {
public:
    explicit FlowNetwork(int n) : adj_(n) {}

    void add_arc(int u, int v, int cap) {
        adj_[u].push_back({v, static_cast<int>(adj_[v].size()), cap});
        adj_[v].push_back({u, static_cast<int>(adj_[u].size()) - 1, 0});
    }

    void add_undirected(int u, int v, int cap) {
        adj_[u].push_back({v, static_cast<int>(adj_[v].size()), cap});
        adj_[v].push_back({u, static_cast<int>(adj_[u].size()) - 1, cap});
    }

    int max_flow(int s, int t) {
        int flow = 0;
        while (bfs(s, t)) {
            iter_.assign(adj_.size(), 0);
            while (int pushed = dfs(s, t, 1 << 29)) flow += pushed;
        }
        return flow;
    }

    /// Nodes reachable from s along positive residual arcs.  Meaningful right
    /// after max_flow: the boundary arcs form a minimum cut.
    std::vector<char> residual_reachable(int s) const {
        std::vector<char> seen(adj_.size(), 0);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& a : adj_[v])
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    stack.push_back(a.to);
                }
        }
        return seen;
    }

private:
    struct Arc {
        int to, rev, cap;
    };

    bool bfs(int s, int t) {
        level_.assign(adj_.size(), -1);
        std::deque<int> queue{s};
        level_[s] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (auto& a : adj_[v])
                if (a.cap > 0 && level_[a.to] < 0) {
                    level_[a.to] = level_[v] + 1;
                    queue.push_back(a.to);
                }
        }
        return level_[t] >= 0;
    }

    int dfs(int v, int t, int limit) {
        if (v == t) return limit;
        for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
            Arc& a = adj_[v][i];
            if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
            int got = dfs(a.to, t, std::min(limit, a.cap));
            if (got > 0) {
                a.cap -= got;
                adj_[a.to][a.rev].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<std::vector<Arc>> adj_;
    std::vector<int> level_, iter_;
};

namespace oracle_detail {

/// Min vertex cut between nonadjacent a, b via the split-vertex network.
inline int min_vertex_cut(const RealGraph& g, int a, int b) {
    int inf = g.n + 10;
    FlowNetwork net(2 * g.n);
    for (int v = 0; v < g.n; ++v)
        net.add_arc(2 * v, 2 * v + 1, (v == a || v == b) ? inf : 1);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) {
            if (u < v) continue;  // each unordered pair once
            net.add_arc(2 * u + 1, 2 * v, inf);
            net.add_arc(2 * v + 1, 2 * u, inf);
        }
    return net.max_flow(2 * a + 1, 2 * b);
}

/// The cut realizing min_vertex_cut(a, b): vertices whose in-node is
/// residual-reachable from the source while the out-node is not.  Only the
/// unit-capacity split arcs can cross the reachable boundary.
inline std::vector<int> min_vertex_cut_set(const RealGraph& g, int a, int b) {
    int inf = g.n + 10;
    FlowNetwork net(2 * g.n);
    for (int v = 0; v < g.n; ++v)
        net.add_arc(2 * v, 2 * v + 1, (v == a || v == b) ? inf : 1);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) {
            if (u < v) continue;
            net.add_arc(2 * u + 1, 2 * v, inf);
            net.add_arc(2 * v + 1, 2 * u, inf);
        }
    int f = net.max_flow(2 * a + 1, 2 * b);
    auto reach = net.residual_reachable(2 * a + 1);
    std::vector<int> cut;
    for (int v = 0; v < g.n; ++v)
        if (v != a && v != b && reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
    check(static_cast<int>(cut.size()) == f, "residual cut size disagrees with flow value");
    return cut;
}

}  // namespace oracle_detail

/// Vertex connectivity by max-flow.  Anchored at a minimum-degree vertex u:
/// any minimum cut either avoids u (then it separates u from some
/// non-neighbour) or contains u (then, by minimality, two of u's neighbours
/// lie in different flaps and are nonadjacent).
inline int oracle_vertex_connectivity(const RealGraph& g) {
    if (g.n <= 1) return 0;
    bool all_adjacent = true;
    for (int v = 0; v < g.n; ++v)
        if (static_cast<int>(g.adj[v].size()) != g.n - 1) all_adjacent = false;
    if (all_adjacent) return g.n - 1;
    int u = 0;
    for (int v = 1; v < g.n; ++v)
        if (g.adj[v].size() < g.adj[u].size()) u = v;
    int best = g.n - 1;
    for (int w = 0; w < g.n; ++w)
        if (w != u && !g.adjacent(u, w))
            best = std::min(best, oracle_detail::min_vertex_cut(g, u, w));
    for (size_t i = 0; i < g.adj[u].size(); ++i)
        for (size_t j = i + 1; j < g.adj[u].size(); ++j) {
            int x = g.adj[u][i], y = g.adj[u][j];
            if (!g.adjacent(x, y))
                best = std::min(best, oracle_detail::min_vertex_cut(g, x, y));
        }
    return best;
}

inline bool is_vertex_cut(const RealGraph& g, const std::vector<int>& cut);

/// A minimum vertex cut of a connected, non-complete graph.  Minimum cuts
/// are minimal by definition, so the result always passes
/// is_minimal_vertex_cut.  Same anchoring argument as
/// oracle_vertex_connectivity.
inline std::vector<int> oracle_min_vertex_cut(const RealGraph& g) {
    require(g.n >= 2, "min vertex cut needs >= 2 vertices");
    int u = 0;
    for (int v = 1; v < g.n; ++v)
        if (g.adj[v].size() < g.adj[u].size()) u = v;
    int best = g.n;
    int ba = -1, bb = -1;
    for (int w = 0; w < g.n; ++w)
        if (w != u && !g.adjacent(u, w)) {
            int f = oracle_detail::min_vertex_cut(g, u, w);
            if (f < best) best = f, ba = u, bb = w;
        }
    for (size_t i = 0; i < g.adj[u].size(); ++i)
        for (size_t j = i + 1; j < g.adj[u].size(); ++j) {
            int x = g.adj[u][i], y = g.adj[u][j];
            if (!g.adjacent(x, y)) {
                int f = oracle_detail::min_vertex_cut(g, x, y);
                if (f < best) best = f, ba = x, bb = y;
            }
        }
    require(ba >= 0, "graph has no vertex cut");
    auto cut = oracle_detail::min_vertex_cut_set(g, ba, bb);
    check(is_vertex_cut(g, cut), "extracted set fails to disconnect");
    return cut;
}

/// Edge connectivity by max-flow from a fixed source with multiplicities as
/// capacities.
inline int oracle_edge_connectivity(const RealGraph& g) {
    require(g.n >= 2, "edge connectivity needs >= 2 vertices");
    int best = -1;
    for (int t = 1; t < g.n; ++t) {
        FlowNetwork net(g.n);
        for (auto& [key, c] : g.multiplicity)
            net.add_undirected(key.first, key.second, c);
        int f = net.max_flow(0, t);
        if (best < 0 || f < best) best = f;
    }
    return best;
}

namespace oracle_detail {

inline int count_components(const RealGraph& g, const std::vector<char>& removed,
                            std::vector<int>* comp_out = nullptr) {
    std::vector<int> comp(g.n, -1);
    int count = 0;
    for (int s = 0; s < g.n; ++s) {
        if (removed[s] || comp[s] != -1) continue;
        comp[s] = count;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.adj[v])
                if (!removed[w] && comp[w] == -1) {
                    comp[w] = count;
                    stack.push_back(w);
                }
        }
        ++count;
    }
    if (comp_out) *comp_out = comp;
    return count;
}

}  // namespace oracle_detail

inline bool is_vertex_cut(const RealGraph& g, const std::vector<int>& cut) {
    std::vector<char> removed(g.n, 0);
    for (int v : cut) removed[v] = 1;
    return oracle_detail::count_components(g, removed) >= 2;
}

/// Minimality checked two ways that must agree: no single element can be
/// dropped, and every cut vertex has a neighbour in every flap.
inline bool is_minimal_vertex_cut(const RealGraph& g, const std::vector<int>& cut) {
    if (!is_vertex_cut(g, cut)) return false;
    std::vector<char> removed(g.n, 0);
    for (int v : cut) removed[v] = 1;
    bool by_subsets = true;
    for (int x : cut) {
        removed[x] = 0;
        if (oracle_detail::count_components(g, removed) >= 2) by_subsets = false;
        removed[x] = 1;
    }
    std::vector<int> comp;
    int nc = oracle_detail::count_components(g, removed, &comp);
    bool by_flaps = true;
    for (int x : cut) {
        std::vector<char> touches(nc, 0);
        for (int w : g.adj[x])
            if (!removed[w]) touches[comp[w]] = 1;
        for (int c = 0; c < nc; ++c)
            if (!touches[c]) by_flaps = false;
    }
    check(by_subsets == by_flaps, "cut minimality criteria disagree");
    return by_subsets;
}

inline bool is_edge_cut(const EmbeddedGraph& g, const std::vector<int>& cut) {
    std::vector<char> gone(g.edge_count(), 0);
    for (int e : cut) gone[e] = 1;
    if (g.n < 2) return false;
    std::vector<int> comp(g.n, -1);
    int count = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = count;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e = 0; e < g.edge_count(); ++e) {
                if (gone[e]) continue;
                int w = -1;
                if (g.edges[e].u == v) w = g.edges[e].v;
                if (g.edges[e].v == v) w = g.edges[e].u;
                if (w >= 0 && comp[w] == -1) {
                    comp[w] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    return count >= 2;
}

inline bool is_minimal_edge_cut(const EmbeddedGraph& g, const std::vector<int>& cut) {
    if (!is_edge_cut(g, cut)) return false;
    std::vector<int> sub(cut);
    for (size_t i = 0; i < cut.size(); ++i) {
        sub = cut;
        sub.erase(sub.begin() + i);
        if (is_edge_cut(g, sub)) return false;
    }
    return true;
}

/// Ribbon radius of one crossing straight from the definition: smallest r
/// such that both incident edges lie entirely in the radius-r ball around the
/// crossing and a rotation-consecutive endpoint pair is joined by a walk
/// using only edges whose drawing stays inside the ball.  All four
/// consecutive pairs are computed and must agree.  Returns cap + 1 with
/// conclusive = false if no r <= cap works.
struct RibbonProbe {
    int value = 0;
    bool conclusive = true;
};

inline RibbonProbe oracle_crossing_mu(const EmbeddedGraph& g,
                                      const RadialGraph& radial, int v, int cap) {
    require(g.is_crossing(v), "ribbon radius is defined for crossings");
    // The two parent edges and this crossing's index within each interior.
    std::vector<std::pair<int, int>> passes;  // (edge, interior index)
    for (int e = 0; e < g.edge_count(); ++e)
        for (size_t i = 0; i < g.edges[e].interior.size(); ++i)
            if (g.edges[e].interior[i] == v)
                passes.push_back({e, static_cast<int>(i)});
    check(passes.size() == 2, "crossing does not lie on exactly two edges");
    auto dist = radial_distances(radial, {v});
    auto edge_inside = [&](int e, int r) {
        const ParentEdge& pe = g.edges[e];
        if (dist[pe.u] > 2 * r || dist[pe.v] > 2 * r) return false;
        for (int d : pe.interior)
            if (dist[d] > 2 * r) return false;
        return true;
    };
    // Endpoint reached by leaving the crossing along rotation entry (e, s).
    auto endpoint_of = [&](std::pair<int, int> ref) {
        auto [e, s] = ref;
        int idx = -1;
        for (auto [pe, pi] : passes)
            if (pe == e) idx = pi;
        check(idx >= 0, "rotation entry of a foreign edge at a crossing");
        return s == idx ? g.edges[e].u : g.edges[e].v;
    };
    for (int r = 1; r <= cap; ++r) {
        if (!edge_inside(passes[0].first, r) || !edge_inside(passes[1].first, r))
            continue;
        // Adjacency over edges drawn entirely inside the ball.
        std::vector<std::vector<int>> adj(g.n);
        for (int e = 0; e < g.edge_count(); ++e)
            if (edge_inside(e, r)) {
                adj[g.edges[e].u].push_back(g.edges[e].v);
                adj[g.edges[e].v].push_back(g.edges[e].u);
            }
        auto reaches = [&](int a, int b) {
            std::vector<char> seen(g.n, 0);
            std::vector<int> stack{a};
            seen[a] = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                if (x == b) return true;
                for (int y : adj[x])
                    if (!seen[y]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
            }
            return false;
        };
        const auto& rot = g.rot[v];
        check(rot.size() == 4, "crossing degree != 4");
        int verdict = -1;
        for (int i = 0; i < 4; ++i) {
            int a = endpoint_of(rot[i]);
            int b = endpoint_of(rot[(i + 1) % 4]);
            int ok = (a == b || reaches(a, b)) ? 1 : 0;
            if (verdict == -1) verdict = ok;
            check(verdict == ok, "consecutive endpoint pairs disagree");
        }
        if (verdict == 1) return {r, true};
    }
    return {cap + 1, false};
}

inline RibbonProbe oracle_ribbon_radius(const EmbeddedGraph& g,
                                        const RadialGraph& radial, int cap) {
    RibbonProbe out{1, true};
    for (int v = g.n; v < g.vertex_count(); ++v) {
        auto probe = oracle_crossing_mu(g, radial, v, cap);
        out.value = std::max(out.value, 1 + probe.value);
        out.conclusive = out.conclusive && probe.conclusive;
    }
    return out;
}

}  // namespace embcon
