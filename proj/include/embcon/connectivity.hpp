#pragma once

#include <functional>
#include <string>
#include <vector>

#include "embcon/dp.hpp"
#include "embcon/embedded_graph.hpp"
#include "embcon/oracle.hpp"
#include "embcon/radial.hpp"
#include "embcon/ribbon.hpp"
#include "embcon/slices.hpp"
#include "embcon/treedec.hpp"
#include "embcon/util.hpp"

namespace embcon {

struct CosepReport {
    bool ok = true;
    std::string why;
    int cut_size = 0;  // real vertices labeled X

    static CosepReport fail(std::string msg) { return {false, std::move(msg), 0}; }
};

/// Checks a full radial labeling (0 = A, 1 = X, 2 = B) for the three
/// co-separation conditions: both sides hold a real vertex, no radial edge
/// joins A to B, and no parent edge's drawing touches both sides.  When
/// `x_eligible` is given, real X vertices must be eligible.
inline CosepReport check_cosep(const EmbeddedGraph& g, const RadialGraph& radial,
                               const std::vector<char>& label,
                               const std::vector<char>& x_eligible = {}) {
    int nv = radial.lam.vertex_count();
    if (static_cast<int>(label.size()) != nv)
        return CosepReport::fail("labeling has the wrong size");
    bool has_a = false, has_b = false;
    CosepReport rep;
    for (int v = 0; v < g.n; ++v) {
        if (label[v] == kLabelA) has_a = true;
        if (label[v] == kLabelB) has_b = true;
        if (label[v] == kLabelX) {
            ++rep.cut_size;
            if (!x_eligible.empty() && !x_eligible[v])
                return CosepReport::fail("ineligible vertex " +
                                         std::to_string(v) + " labeled X");
        }
    }
    if (!has_a || !has_b)
        return CosepReport::fail("a side holds no real vertex");
    for (int e = 0; e < radial.lam.edge_count(); ++e) {
        if (!radial.lam.edge_alive(e)) continue;
        char lu = label[radial.lam.tail(2 * e)];
        char lv = label[radial.lam.head(2 * e)];
        if ((lu == kLabelA && lv == kLabelB) ||
            (lu == kLabelB && lv == kLabelA))
            return CosepReport::fail("radial edge " + std::to_string(e) +
                                     " joins the two sides");
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        bool saw_a = false, saw_b = false;
        auto look = [&](int x) {
            if (label[x] == kLabelA) saw_a = true;
            if (label[x] == kLabelB) saw_b = true;
        };
        look(g.edges[e].u);
        for (int x : g.edges[e].interior) look(x);
        look(g.edges[e].v);
        if (saw_a && saw_b)
            return CosepReport::fail("edge " + std::to_string(e) +
                                     " touches both sides");
    }
    return rep;
}

/// Builds a full radial labeling witnessing a vertex cut.  Cut vertices
/// become X and one component of the remainder becomes A, the rest B.  A
/// crossing point takes the common label of the four endpoints of its two
/// edges if they agree, else X; a face vertex takes the common label of the
/// planarization vertices on its boundary if they agree, else X.  Keeping X
/// this tight puts every X vertex within face-distance mu of the cut.
inline std::vector<char> triple_from_cut(const EmbeddedGraph& g,
                                         const RadialGraph& radial,
                                         const std::vector<int>& cut) {
    RealGraph rg = real_graph(g);
    std::vector<char> removed(g.n, 0);
    for (int v : cut) removed[v] = 1;
    std::vector<int> comp(g.n, -1);
    int pieces = oracle_detail::count_components(rg, removed, &comp);
    require(pieces >= 2, "the given set is not a vertex cut");
    int comp_a = -1;
    for (int v = 0; v < g.n && comp_a == -1; ++v)
        if (!removed[v]) comp_a = comp[v];
    std::vector<char> label(radial.lam.vertex_count(), kLabelX);
    for (int v = 0; v < g.n; ++v)
        if (!removed[v]) label[v] = comp[v] == comp_a ? kLabelA : kLabelB;
    // Endpoint-label mask per crossing point, over both edges through it.
    std::vector<unsigned> seen(g.vertex_count(), 0);
    for (const auto& pe : g.edges) {
        char lu = label[pe.u], lv = label[pe.v];
        check(lu == kLabelX || lv == kLabelX || lu == lv,
              "cut fails to separate an edge's endpoints");
        for (int x : pe.interior) seen[x] |= (1u << lu) | (1u << lv);
    }
    auto common = [](unsigned mask) -> char {
        if (mask == (1u << kLabelA)) return kLabelA;
        if (mask == (1u << kLabelB)) return kLabelB;
        return kLabelX;
    };
    for (int x = g.n; x < g.vertex_count(); ++x) label[x] = common(seen[x]);
    // A face vertex's spoke neighbours are exactly the corners of its face.
    for (int fv = radial.base_vertices; fv < radial.lam.vertex_count(); ++fv) {
        unsigned mask = 0;
        for (int d : radial.lam.darts_at(fv))
            if (radial.is_spoke(d / 2)) mask |= 1u << label[radial.lam.head(d)];
        label[fv] = common(mask);
    }
    return label;
}

/// Exhaustive reference for one slice: try every allowed labeling of the
/// slice's planarization vertices and apexes, extend it, and keep the best
/// budget that passes the full co-separation check.  Exponential; for tests
/// on small slices only.
struct BruteResult {
    bool found = false;
    int sigma = 0;
};

inline BruteResult brute_force_triple(const LabelRules& rules) {
    const Slice& s = *rules.slice;
    int nv = s.graph.vertex_count();
    std::vector<int> verts;
    for (int v = 0; v < nv; ++v)
        if (rules.labelable(v)) verts.push_back(v);
    BruteResult best;
    std::vector<char> slice_label(nv, -1);
    for (int v = 0; v < nv; ++v)
        if (s.graph.vertex_alive(v) && !rules.labelable(v))
            slice_label[v] = kLabelX;
    std::function<void(size_t, int)> go = [&](size_t idx, int sigma) {
        if (sigma > rules.s_cap) return;
        if (best.found && sigma >= best.sigma) return;
        if (idx == verts.size()) {
            auto full = extend_labeling(*rules.radial, s, slice_label);
            auto rep = check_cosep(*rules.g, *rules.radial, full,
                                   rules.x_eligible);
            if (rep.ok && (!best.found || rep.cut_size < best.sigma))
                best = {true, rep.cut_size};
            return;
        }
        int v = verts[idx];
        int allow = rules.allowed(v);
        for (char lab : {kLabelA, kLabelX, kLabelB}) {
            if (!(allow & (1 << lab))) continue;
            slice_label[v] = lab;
            go(idx + 1, sigma + rules.cost(v, lab));
        }
        slice_label[v] = -1;
    };
    go(0, 0);
    return best;
}

/// Called once per examined window with the slice, the decomposition, the
/// budget, and the search outcome.  Used by tests and diagnostics.
using TraceHook = std::function<void(const Slice&, const TreeDecomposition&,
                                     int, const DpResult&)>;

struct ConnectivityResult {
    int value = 0;
    std::vector<int> cut;        // vertex ids, or parent edge ids
    bool trivial = false;        // answered without the window search
    int mu = 0;                  // ribbon radius used for the window width
    int windows_searched = 0;
    std::vector<char> labeling;  // radial labeling of the searched graph
};

struct SearchOptions {
    int mu_override = 0;  // 0 = compute the ribbon radius
    int threads = 1;
    TraceHook trace;
};

namespace connectivity_detail {

/// Shared window sweep: for each budget s and window start, build the slice,
/// decompose, search, and verify the first hit.  Returns true on a hit.
inline bool sweep(const EmbeddedGraph& g, const RadialGraph& radial,
                  const Layering& lay, int mu, int s_max,
                  const std::vector<char>& x_eligible,
                  const SearchOptions& opts, ConnectivityResult& out) {
    int d = lay.layer_count;
    for (int s = 1; s <= s_max; ++s) {
        int w = s * (4 * mu + 1);
        int last = std::max(1, d - w);
        for (int i = 1; i <= last; ++i) {
            Slice slice = build_slice(g, radial, lay, i, w);
            TreeDecomposition td = slice_td(slice);
            LabelRules rules(g, radial, slice, s, x_eligible);
            DpResult dp = find_triple(rules, td);
            ++out.windows_searched;
            if (opts.trace) opts.trace(slice, td, s, dp);
            if (!dp.found) continue;
            auto full = extend_labeling(radial, slice, dp.slice_label);
            auto rep = check_cosep(g, radial, full, x_eligible);
            check(rep.ok, "search produced an invalid labeling: " + rep.why);
            check(rep.cut_size == dp.sigma, "budget disagrees with labeling");
            out.value = dp.sigma;
            out.mu = mu;
            out.labeling = full;
            return true;
        }
    }
    return false;
}

}  // namespace connectivity_detail

/// Vertex connectivity of the real graph behind an embedded drawing.
/// Complete adjacency short-circuits to n-1; otherwise budgets rise from 1
/// and each budget sweeps every window of the layered radial graph.
inline ConnectivityResult vertex_connectivity(const EmbeddedGraph& g,
                                              const SearchOptions& opts = {}) {
    RealGraph rg = real_graph(g);
    ConnectivityResult out;
    bool all_adjacent = true;
    for (int u = 0; u < g.n && all_adjacent; ++u)
        for (int v = u + 1; v < g.n && all_adjacent; ++v)
            if (!rg.adjacent(u, v)) all_adjacent = false;
    if (all_adjacent) {
        out.value = g.n - 1;
        out.trivial = true;
        return out;
    }
    Planarization p = planarize(g);
    RadialGraph radial = build_radial(p);
    Layering lay = bfs_layering(radial, 0);
    int mu = opts.mu_override
                 ? opts.mu_override
                 : ribbon_radius(g, radial, opts.threads).mu;
    int delta = -1;
    for (int v = 0; v < g.n; ++v) {
        int deg = static_cast<int>(rg.adj[v].size());
        if (delta == -1 || deg < delta) delta = deg;
    }
    int s_max = std::min(delta, g.n - 2);
    if (connectivity_detail::sweep(g, radial, lay, mu, s_max, {}, opts, out)) {
        for (int v = 0; v < g.n; ++v)
            if (out.labeling[v] == kLabelX) out.cut.push_back(v);
        check(is_vertex_cut(rg, out.cut), "witness is not a vertex cut");
        return out;
    }
    check(false, "vertex connectivity search exhausted its budget range");
    return out;
}

/// Edge connectivity via subdivision: every parent edge gains a midpoint
/// vertex, only midpoints may be cut, and a midpoint cut of size s is an
/// edge cut of size s.  Two-vertex graphs are answered by multiplicity.
inline ConnectivityResult edge_connectivity(const EmbeddedGraph& g,
                                            const SearchOptions& opts = {}) {
    RealGraph rg = real_graph(g);
    ConnectivityResult out;
    if (g.n == 1) {
        out.trivial = true;
        return out;
    }
    if (g.n == 2) {
        out.value = g.edge_count();
        out.trivial = true;
        for (int e = 0; e < g.edge_count(); ++e) out.cut.push_back(e);
        return out;
    }
    EmbeddedGraph sub = subdivide(g);
    Planarization p = planarize(sub);
    RadialGraph radial = build_radial(p);
    Layering lay = bfs_layering(radial, 0);
    int mu = opts.mu_override
                 ? opts.mu_override
                 : ribbon_radius(sub, radial, opts.threads).mu;
    std::vector<char> eligible(sub.n, 0);
    for (int v = g.n; v < sub.n; ++v) eligible[v] = 1;
    int delta = -1;
    for (int v = 0; v < g.n; ++v)
        if (delta == -1 || rg.degree[v] < delta) delta = rg.degree[v];
    if (connectivity_detail::sweep(sub, radial, lay, mu, delta, eligible, opts,
                                   out)) {
        for (int v = g.n; v < sub.n; ++v)
            if (out.labeling[v] == kLabelX) out.cut.push_back(v - g.n);
        check(is_edge_cut(g, out.cut), "witness is not an edge cut");
        return out;
    }
    check(false, "edge connectivity search exhausted its budget range");
    return out;
}

}  // namespace embcon
