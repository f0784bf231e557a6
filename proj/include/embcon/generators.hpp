#pragma once

#include <cmath>
#include <set>
#include <vector>

#include "embcon/drawing.hpp"
#include "embcon/embedded_graph.hpp"
#include "embcon/util.hpp"

namespace embcon {

namespace gen_detail {
constexpr double kPi = 3.14159265358979323846;
// Deterministic angular jitter used to break symmetric coincidences
// (concurrent chords, collinear spokes) in the drawings.
inline double jitter(double scale, int a, int b = 0) {
    return scale * std::sin(3.7 * a + 1.9 * b + 0.53);
}
}  // namespace gen_detail

/// rows x cols grid, vertex (i, j) -> i*cols + j.  Plane, q = 0.
inline EmbeddedGraph gen_grid(int rows, int cols) {
    require(rows >= 1 && cols >= 1 && rows * cols >= 2, "grid needs >= 2 vertices");
    DrawnGraph d;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            d.add_vertex({static_cast<double>(j), static_cast<double>(-i)});
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (j + 1 < cols) d.add_edge(i * cols + j, i * cols + j + 1);
            if (i + 1 < rows) d.add_edge(i * cols + j, (i + 1) * cols + j);
        }
    return d.realize();
}

inline EmbeddedGraph gen_path(int n) { return gen_grid(1, n); }

/// Star with n leaves around a hub.
inline EmbeddedGraph gen_star(int n) {
    require(n >= 1, "star needs >= 1 leaf");
    using gen_detail::kPi;
    DrawnGraph d;
    d.add_vertex({0, 0});
    for (int i = 0; i < n; ++i) {
        double a = 2 * kPi * i / n;
        d.add_vertex({10 * std::cos(a), 10 * std::sin(a)});
        d.add_edge(0, i + 1);
    }
    return d.realize();
}

/// Cycle on n vertices; n == 2 yields the digon (two parallel edges).
inline EmbeddedGraph gen_cycle(int n) {
    require(n >= 2, "cycle needs >= 2 vertices");
    using gen_detail::kPi;
    DrawnGraph d;
    if (n == 2) {
        d.add_vertex({0, 0});
        d.add_vertex({10, 0});
        d.add_edge(0, 1);
        d.add_edge(0, 1, {{5, 4}});
        return d.realize();
    }
    for (int i = 0; i < n; ++i) {
        double a = 2 * kPi * i / n;
        d.add_vertex({10 * std::cos(a), 10 * std::sin(a)});
    }
    for (int i = 0; i < n; ++i) d.add_edge(i, (i + 1) % n);
    return d.realize();
}

/// Complete graph on n <= 4 vertices, drawn plane.
inline EmbeddedGraph gen_complete_planar(int n) {
    require(n >= 2 && n <= 4, "plane complete graph supports n in 2..4");
    DrawnGraph d;
    d.add_vertex({0, 0});
    d.add_vertex({10, 0});
    if (n >= 3) d.add_vertex({5, 8});
    if (n >= 4) d.add_vertex({5, 3});
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) d.add_edge(u, v);
    return d.realize();
}

/// K5 drawn with a single crossing: plane K4 plus an outside vertex whose
/// edge to the K4 center crosses one outer edge.
inline EmbeddedGraph gen_k5_one_crossing() {
    DrawnGraph d;
    d.add_vertex({0, 0});
    d.add_vertex({10, 0});
    d.add_vertex({5, 8});
    d.add_vertex({5, 3});
    d.add_vertex({5, -4});
    d.add_edge(0, 1);
    d.add_edge(0, 2);
    d.add_edge(0, 3);
    d.add_edge(0, 4);
    d.add_edge(1, 2);
    d.add_edge(1, 3);
    d.add_edge(1, 4);
    d.add_edge(2, 3);
    d.add_edge(2, 4, {{13, 4}, {11, -3}});
    d.add_edge(3, 4);  // crosses edge (0, 1)
    return d.realize();
}

/// Cycle of length m with the first t vertices completed to a clique by
/// straight chords through the inside; chords cross pairwise.
inline EmbeddedGraph gen_clique_in_face(int m, int t) {
    require(m >= 3 && t >= 3 && t <= m, "need m >= 3 and 3 <= t <= m");
    using gen_detail::kPi;
    DrawnGraph d;
    for (int i = 0; i < m; ++i) {
        double a = 2 * kPi * i / m + gen_detail::jitter(0.013, i);
        d.add_vertex({10 * std::cos(a), 10 * std::sin(a)});
    }
    for (int i = 0; i < m; ++i) d.add_edge(i, (i + 1) % m);
    for (int i = 0; i < t; ++i)
        for (int j = i + 2; j < t; ++j)
            if (!(i == 0 && j == m - 1)) d.add_edge(i, j);
    return d.realize();
}

/// Chain of k meeting points, each where d nations touch; consecutive points
/// share two nations.  Every point contributes the clique of its nations,
/// drawn with the nations on a circle around the point: the cycle along the
/// circle plus all chords (the chords cross inside the disk).  The result is
/// the adjacency graph of a map in which at most d nations meet anywhere.
inline EmbeddedGraph gen_map_flower_chain(int d, int k) {
    require(d >= 3 && k >= 1, "need d >= 3, k >= 1");
    require(k == 1 || d >= 4, "chained points need d >= 4");
    using gen_detail::kPi;
    DrawnGraph g;
    double alpha = std::atan2(std::sqrt(5.0), 2.0);
    // nations[i] = vertex ids around point i.
    std::vector<std::vector<int>> nations(k);
    int prev_top = -1, prev_bot = -1;
    for (int i = 0; i < k; ++i) {
        Vec2 c{4.0 * i, 0.0};
        if (i > 0) {
            nations[i].push_back(prev_top);
            nations[i].push_back(prev_bot);
        }
        int priv = d - (i > 0 ? 2 : 0) - (i + 1 < k ? 2 : 0);
        int top_n = (priv + 1) / 2, bot_n = priv / 2;
        for (int j = 0; j < top_n; ++j) {
            double a = alpha + (kPi - 2 * alpha) * (j + 1) / (top_n + 1) +
                       gen_detail::jitter(0.01, j, i);
            nations[i].push_back(
                g.add_vertex({c.x + 3 * std::cos(a), c.y + 3 * std::sin(a)}));
        }
        for (int j = 0; j < bot_n; ++j) {
            double a = -alpha - (kPi - 2 * alpha) * (j + 1) / (bot_n + 1) +
                       gen_detail::jitter(0.01, j, i + 31);
            nations[i].push_back(
                g.add_vertex({c.x + 3 * std::cos(a), c.y + 3 * std::sin(a)}));
        }
        if (i + 1 < k) {
            prev_top = g.add_vertex({c.x + 2, std::sqrt(5.0)});
            prev_bot = g.add_vertex({c.x + 2, -std::sqrt(5.0)});
            nations[i].push_back(prev_top);
            nations[i].push_back(prev_bot);
        }
    }
    std::set<std::pair<int, int>> seen;
    auto add_once = [&](int u, int v) {
        auto key = std::minmax(u, v);
        if (seen.insert({key.first, key.second}).second) g.add_edge(u, v);
    };
    for (int i = 0; i < k; ++i) {
        Vec2 c{4.0 * i, 0.0};
        auto& nat = nations[i];
        std::sort(nat.begin(), nat.end(), [&](int a, int b) {
            Vec2 pa = g.vertex_pos(a) - c, pb = g.vertex_pos(b) - c;
            return std::atan2(pa.y, pa.x) < std::atan2(pb.y, pb.x);
        });
        int j = static_cast<int>(nat.size());
        for (int a = 0; a < j; ++a)
            for (int b = a + 1; b < j; ++b) add_once(nat[a], nat[b]);
    }
    return g.realize();
}

struct PlantedCut {
    EmbeddedGraph graph;
    std::vector<int> planted_edges;
};

/// Deep layered family with a planted minimum edge cut.  C = k + 2 concentric
/// circles of m vertices; each circle carries its cycle and skip-2 chords in a
/// shallow inner band; consecutive circles are joined by full radial
/// matchings, except one gap that is bridged only by p long radial edges
/// starting s circles further in, so every planted edge crosses the rings and
/// chords of the circles it passes.  The planted edges are the only
/// inner/outer connection and all other degrees and local cuts exceed p (for
/// p <= 4), so they form the minimum edge cut.
inline PlantedCut gen_layered_counterexample(int k, int p, int r) {
    require(k >= 1 && k <= 8, "supported depth: 1 <= k <= 8");
    require(p >= 1 && p <= 4, "supported cut size: 1 <= p <= 4");
    require(r >= 1 && r * p <= 48, "supported spacing: r >= 1, r*p <= 48");
    using gen_detail::kPi;
    int b = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(k))));
    int m = std::max({6, 2 * b + 2, r * p});
    m += m % 2;  // parity-staggered chord depths need an even cycle
    int C = k + 2;
    int j0 = (C - 1) / 2;
    int s = std::min(b, j0);
    double unit = 2 * kPi / m;
    auto radius = [](int j) { return 10.0 + 7.0 * j; };
    DrawnGraph g;
    auto angle = [&](int j, int t) {
        return t * unit + 0.004 * std::sin(5.1 * t + 1.3 * j + 0.7);
    };
    for (int j = 0; j < C; ++j)
        for (int t = 0; t < m; ++t) {
            double a = angle(j, t);
            g.add_vertex({radius(j) * std::cos(a), radius(j) * std::sin(a)});
        }
    auto vid = [&](int j, int t) { return j * m + ((t % m) + m) % m; };
    // Ring cycles, drawn as shallow arcs on each circle.
    for (int j = 0; j < C; ++j)
        for (int t = 0; t < m; ++t) {
            double a0 = angle(j, t);
            double a1 = (t + 1) * unit + 0.004 * std::sin(5.1 * (t + 1) + 1.3 * j + 0.7);
            g.add_edge(vid(j, t), vid(j, t + 1),
                       arc_bends({0, 0}, radius(j), a0, a1, 3));
        }
    // Skip-2 chords in a band below each circle, depths staggered by parity.
    for (int j = 0; j < C; ++j)
        for (int t = 0; t < m; ++t) {
            double depth = (t % 2 == 0) ? 1.4 : 1.9;
            double a0 = angle(j, t);
            double a1 = (t + 2) * unit + 0.004 * std::sin(5.1 * (t + 2) + 1.3 * j + 0.7);
            g.add_edge(vid(j, t), vid(j, t + 2),
                       arc_bends({0, 0}, radius(j) - depth, a0, a1, 9));
        }
    // Radial matchings in every gap except the planted one.
    for (int j = 0; j + 1 < C; ++j) {
        if (j == j0) continue;
        for (int t = 0; t < m; ++t) g.add_edge(vid(j, t), vid(j + 1, t));
    }
    // Planted cut: p long radial edges in half-position lanes.
    PlantedCut out;
    for (int l = 0; l < p; ++l) {
        int t = l * r;
        double lane = (t + 0.5) * unit;
        double rin = radius(j0 - s), rout = radius(j0 + 1);
        std::vector<Vec2> bends = {
            {(rin + 2) * std::cos(lane), (rin + 2) * std::sin(lane)},
            {(rout - 3) * std::cos(lane), (rout - 3) * std::sin(lane)},
            {(rout - 3) * std::cos(angle(j0 + 1, t)),
             (rout - 3) * std::sin(angle(j0 + 1, t))}};
        out.planted_edges.push_back(
            g.add_edge(vid(j0 - s, t), vid(j0 + 1, t), bends));
    }
    out.graph = g.realize();
    return out;
}

}  // namespace embcon
