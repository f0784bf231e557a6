#pragma once

#include <algorithm>
#include <cmath>
#include <tuple>
#include <vector>

#include "embcon/embedded_graph.hpp"
#include "embcon/util.hpp"

namespace embcon {

struct Vec2 {
    double x = 0, y = 0;
};

inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }

/// Polyline bend points approximating a circular arc from angle a0 to a1
/// (radians, traversed linearly), endpoints excluded.
inline std::vector<Vec2> arc_bends(Vec2 center, double radius, double a0,
                                   double a1, int steps) {
    std::vector<Vec2> out;
    for (int i = 1; i < steps; ++i) {
        double a = a0 + (a1 - a0) * i / steps;
        out.push_back({center.x + radius * std::cos(a),
                       center.y + radius * std::sin(a)});
    }
    return out;
}

/// A straight-line/polyline drawing of a multigraph.  realize() intersects all
/// edge polylines pairwise and produces the embedded graph whose crossings are
/// the intersection points and whose rotations come from the geometry
/// (clockwise = descending angle).  The drawing must be in general position:
/// crossings pairwise distinct, transversal, away from vertices and bends.
/// Generators guarantee that with deterministic perturbations; violations
/// raise internal_error.
class DrawnGraph {
public:
    int add_vertex(Vec2 p) {
        pos_.push_back(p);
        return static_cast<int>(pos_.size()) - 1;
    }

    int add_edge(int u, int v, std::vector<Vec2> bends = {}) {
        require(u >= 0 && u < vertex_count() && v >= 0 && v < vertex_count(),
                "edge endpoint out of range");
        require(u != v, "loop edges are not supported");
        std::vector<Vec2> path;
        path.push_back(pos_[u]);
        for (auto& b : bends) path.push_back(b);
        path.push_back(pos_[v]);
        ends_.push_back({u, v});
        paths_.push_back(std::move(path));
        return static_cast<int>(ends_.size()) - 1;
    }

    int vertex_count() const { return static_cast<int>(pos_.size()); }
    int edge_count() const { return static_cast<int>(ends_.size()); }
    Vec2 vertex_pos(int v) const { return pos_[v]; }

    bool has_edge(int u, int v) const {
        for (auto [a, b] : ends_)
            if ((a == u && b == v) || (a == v && b == u)) return true;
        return false;
    }

    EmbeddedGraph realize() const {
        struct Hit {
            int e1, e2;          // e1 < e2
            double p1, p2;       // segment index + parameter along each edge
            Vec2 at;
        };
        std::vector<Hit> hits;
        for (int e1 = 0; e1 < edge_count(); ++e1)
            for (int e2 = e1; e2 < edge_count(); ++e2)
                collect_hits(e1, e2, hits);
        std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
            return std::tie(a.e1, a.p1, a.e2, a.p2) <
                   std::tie(b.e1, b.p1, b.e2, b.p2);
        });
        for (size_t i = 0; i < hits.size(); ++i)
            for (size_t j = i + 1; j < hits.size(); ++j)
                check(norm(hits[i].at - hits[j].at) > 1e-7,
                      "drawing has concurrent crossings");

        int n = vertex_count();
        int q = static_cast<int>(hits.size());
        EmbeddedGraph g;
        g.n = n;
        g.q = q;

        // Order each edge's crossings along the edge.
        std::vector<std::vector<std::pair<double, int>>> along(edge_count());
        for (int c = 0; c < q; ++c) {
            along[hits[c].e1].push_back({hits[c].p1, n + c});
            along[hits[c].e2].push_back({hits[c].p2, n + c});
        }
        g.edges.resize(edge_count());
        for (int e = 0; e < edge_count(); ++e) {
            auto& a = along[e];
            std::sort(a.begin(), a.end());
            for (size_t i = 1; i < a.size(); ++i)
                check(a[i].first - a[i - 1].first > 1e-6,
                      "two crossings nearly coincide on one edge");
            g.edges[e].u = ends_[e].first;
            g.edges[e].v = ends_[e].second;
            for (auto& [p, d] : a) g.edges[e].interior.push_back(d);
        }

        // Clockwise rotations: sort outgoing directions by descending angle.
        auto sort_cw = [](std::vector<std::pair<double, std::pair<int, int>>>& v) {
            std::sort(v.begin(), v.end(), [](auto& a, auto& b) {
                return a.first > b.first;
            });
            for (size_t i = 1; i < v.size(); ++i)
                check(v[i - 1].first - v[i].first > 1e-9,
                      "two edges leave a vertex at the same angle");
        };
        g.rot.assign(n + q, {});
        std::vector<std::vector<std::pair<double, std::pair<int, int>>>> out(n);
        for (int e = 0; e < edge_count(); ++e) {
            const auto& path = paths_[e];
            int last = g.edges[e].seg_count() - 1;
            Vec2 du = path[1] - path[0];
            Vec2 dv = path[path.size() - 2] - path.back();
            out[ends_[e].first].push_back({std::atan2(du.y, du.x), {e, 0}});
            out[ends_[e].second].push_back({std::atan2(dv.y, dv.x), {e, last}});
        }
        for (int v = 0; v < n; ++v) {
            sort_cw(out[v]);
            for (auto& [ang, ref] : out[v]) g.rot[v].push_back(ref);
        }
        for (int c = 0; c < q; ++c) {
            std::vector<std::pair<double, std::pair<int, int>>> spokes;
            for (auto [e, p] : {std::pair{hits[c].e1, hits[c].p1},
                                std::pair{hits[c].e2, hits[c].p2}}) {
                // Index of this crossing within the edge's interior.
                int idx = 0;
                for (auto& [pp, d] : along[e]) {
                    if (d == n + c) break;
                    ++idx;
                }
                int seg = static_cast<int>(std::floor(p));
                Vec2 dir = paths_[e][seg + 1] - paths_[e][seg];
                double fwd = std::atan2(dir.y, dir.x);
                double bwd = std::atan2(-dir.y, -dir.x);
                spokes.push_back({bwd, {e, idx}});      // toward the u side
                spokes.push_back({fwd, {e, idx + 1}});  // toward the v side
            }
            sort_cw(spokes);
            for (auto& [ang, ref] : spokes) g.rot[n + c].push_back(ref);
        }
        return g;
    }

private:
    template <typename HitVec>
    void collect_hits(int e1, int e2, HitVec& hits) const {
        const auto& pa = paths_[e1];
        const auto& pb = paths_[e2];
        for (int i = 0; i + 1 < static_cast<int>(pa.size()); ++i) {
            int jstart = (e1 == e2) ? i + 2 : 0;
            for (int j = jstart; j + 1 < static_cast<int>(pb.size()); ++j) {
                Vec2 P = pa[i], r = pa[i + 1] - pa[i];
                Vec2 Q = pb[j], u = pb[j + 1] - pb[j];
                double den = cross(r, u);
                double scale = norm(r) * norm(u);
                if (std::abs(den) < 1e-12 * scale) {
                    // Parallel: reject overlap, ignore disjoint.
                    if (std::abs(cross(Q - P, r)) < 1e-9 * norm(r) * norm(r)) {
                        double t0 = dot(Q - P, r) / dot(r, r);
                        double t1 = dot(Q + u - P, r) / dot(r, r);
                        if (std::max(std::min(t0, t1), 0.0) <
                            std::min(std::max(t0, t1), 1.0) - 1e-9)
                            check(false, "drawing has overlapping segments");
                    }
                    continue;
                }
                double t = cross(Q - P, u) / den;
                double s = cross(Q - P, r) / den;
                bool t_in = t > 1e-5 && t < 1 - 1e-5;
                bool s_in = s > 1e-5 && s < 1 - 1e-5;
                if (t_in && s_in) {
                    check(e1 != e2, "edge polyline crosses itself");
                    hits.push_back({e1, e2, i + t, j + s, P + t * r});
                } else if (t > 1e-9 && t < 1 - 1e-9 && s > 1e-9 && s < 1 - 1e-9) {
                    check(false, "crossing too close to a vertex or bend");
                }
            }
        }
    }

    std::vector<Vec2> pos_;
    std::vector<std::pair<int, int>> ends_;
    std::vector<std::vector<Vec2>> paths_;
};

}  // namespace embcon
