#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "embcon/embedded_graph.hpp"
#include "embcon/radial.hpp"
#include "embcon/slices.hpp"
#include "embcon/treedec.hpp"
#include "embcon/util.hpp"

namespace embcon {

// Labels: 0 = A, 1 = X, 2 = B.  Non-apex face vertices are always X and are
// never enumerated; apexes are never X (the curve stays inside the window).
constexpr char kLabelA = 0;
constexpr char kLabelX = 1;
constexpr char kLabelB = 2;

/// Shared label rules for one slice search.  `x_eligible` restricts which
/// real vertices may be cut (empty = all); dummies are free to take any label
/// and only real vertices count toward the budget.
struct LabelRules {
    const EmbeddedGraph* g = nullptr;
    const RadialGraph* radial = nullptr;
    const Slice* slice = nullptr;
    int s_cap = 0;
    std::vector<char> x_eligible;  // per real vertex, may be empty
    std::vector<char> apex_real;   // per slice vertex: component holds a real

    LabelRules(const EmbeddedGraph& graph, const RadialGraph& rad,
               const Slice& sl, int cap, std::vector<char> eligible = {})
        : g(&graph), radial(&rad), slice(&sl), s_cap(cap),
          x_eligible(std::move(eligible)) {
        apex_real.assign(rad.lam.vertex_count(), 0);
        for (int v = 0; v < rad.lam.vertex_count(); ++v)
            if (sl.apex_of[v] != -1 && v < g->n) apex_real[sl.apex_of[v]] = 1;
    }

    bool labelable(int v) const {
        return slice->graph.vertex_alive(v) &&
               (v < radial->base_vertices || slice->is_apex[v]);
    }
    bool is_real(int v) const { return v < g->n; }
    int cost(int v, char label) const {
        return label == kLabelX && is_real(v) ? 1 : 0;
    }
    bool real_evidence(int v) const {
        return is_real(v) || (slice->is_apex[v] && apex_real[v]);
    }
    // Bitmask over labels: 1 = A allowed, 2 = X allowed, 4 = B allowed.
    // Crossing points are pinned to X: the separating curve may always pass
    // through a crossing, and relabeling one to X never invalidates a triple
    // (it only removes side clashes) or changes the budget, so searching
    // their other labels would just multiply equivalent states.
    int allowed(int v) const {
        if (slice->is_apex[v]) return 1 | 4;
        if (!is_real(v)) return 2;  // crossing point
        bool x_ok = slice->layer_tag[v] >= slice->window_lo &&
                    slice->layer_tag[v] <= slice->window_hi &&
                    (x_eligible.empty() || x_eligible[v]);
        return 1 | 4 | (x_ok ? 2 : 0);
    }
};

struct DpResult {
    bool found = false;
    int sigma = 0;                  // real vertices labeled X
    std::vector<char> slice_label;  // per slice vertex, -1 where dead
};

namespace dp_detail {

// Tracked-edge masks come in two widths: a plain word for up to 64 crossed
// edges (the common case, and the cheapest keys) and a two-word fallback.
struct Bits128 {
    uint64_t w0 = 0, w1 = 0;

    friend Bits128 operator|(Bits128 a, Bits128 b) {
        return {a.w0 | b.w0, a.w1 | b.w1};
    }
    friend Bits128 operator&(Bits128 a, Bits128 b) {
        return {a.w0 & b.w0, a.w1 & b.w1};
    }
    Bits128& operator|=(Bits128 o) {
        w0 |= o.w0;
        w1 |= o.w1;
        return *this;
    }
    Bits128& operator&=(Bits128 o) {
        w0 &= o.w0;
        w1 &= o.w1;
        return *this;
    }
    bool operator==(const Bits128&) const = default;
    bool operator<(const Bits128& o) const {
        return w1 != o.w1 ? w1 < o.w1 : w0 < o.w0;
    }
};

template <class B>
struct BitOps;

template <>
struct BitOps<uint64_t> {
    static constexpr int capacity = 64;
    static uint64_t one(int i) { return 1ull << i; }
    static uint64_t low(int n) { return n >= 64 ? ~0ull : (1ull << n) - 1; }
    static bool any(uint64_t b) { return b != 0; }
    static uint64_t mix(uint64_t b) { return b; }
};

template <>
struct BitOps<Bits128> {
    static constexpr int capacity = 128;
    static Bits128 one(int i) {
        return i < 64 ? Bits128{1ull << i, 0} : Bits128{0, 1ull << (i - 64)};
    }
    static Bits128 low(int n) {
        return {BitOps<uint64_t>::low(n), BitOps<uint64_t>::low(n - 64)};
    }
    static bool any(Bits128 b) { return (b.w0 | b.w1) != 0; }
    static uint64_t mix(Bits128 b) {
        return b.w0 ^ (b.w1 * 0xff51afd7ed558ccdull);
    }
};

template <class B>
struct Key {
    uint64_t f = 0;  // 2 bits per labelable bag slot
    B bits_a{};      // tracked edge saw an A member
    B bits_b{};
    uint8_t chi = 0;  // 1 = real evidence for A, 2 = for B

    bool operator==(const Key&) const = default;
    bool operator<(const Key& o) const {
        if (f != o.f) return f < o.f;
        if (!(bits_a == o.bits_a)) return bits_a < o.bits_a;
        if (!(bits_b == o.bits_b)) return bits_b < o.bits_b;
        return chi < o.chi;
    }
};

template <class B>
struct KeyHash {
    size_t operator()(const Key<B>& k) const {
        uint64_t h = k.f * 0x9e3779b97f4a7c15ull;
        h ^= (BitOps<B>::mix(k.bits_a) + 0xbf58476d1ce4e5b9ull) + (h << 6) +
             (h >> 2);
        h ^= (BitOps<B>::mix(k.bits_b) + 0x94d049bb133111ebull) + (h << 6) +
             (h >> 2);
        h ^= k.chi + (h << 6) + (h >> 2);
        return static_cast<size_t>(h);
    }
};

template <class B>
struct Val {
    int sigma = 0;
    Key<B> pred0, pred1;  // child entries for backtracking
    char label = -1;      // chosen label at an introduce node
    bool has_pred1 = false;
};

// Deterministic improvement order: smaller budget first, then the smaller
// provenance tuple, so the result never depends on hash iteration order.
template <class B>
bool better(const Val<B>& a, const Val<B>& b) {
    if (a.sigma != b.sigma) return a.sigma < b.sigma;
    if (!(a.pred0 == b.pred0)) return a.pred0 < b.pred0;
    if (a.label != b.label) return a.label < b.label;
    if (!(a.pred1 == b.pred1)) return a.pred1 < b.pred1;
    return false;
}

template <class B>
using Table = std::unordered_map<Key<B>, Val<B>, KeyHash<B>>;

template <class B>
void improve(Table<B>& t, const Key<B>& k, const Val<B>& v) {
    auto [it, fresh] = t.try_emplace(k, v);
    if (!fresh && better(v, it->second)) it->second = v;
}

enum class Kind { kLeaf, kIntroduce, kForget, kJoin };

struct NiceNode {
    Kind kind = Kind::kLeaf;
    int v = -1;
    int child0 = -1, child1 = -1;
    std::vector<int> lbag;  // labelable bag members, ascending
};

inline uint64_t insert_slot(uint64_t f, int slot, uint64_t label) {
    uint64_t low = f & ((1ull << (2 * slot)) - 1);
    uint64_t high = f >> (2 * slot);
    uint64_t out = low | (label << (2 * slot));
    if (2 * slot + 2 < 64) out |= high << (2 * slot + 2);
    return out;
}

inline uint64_t remove_slot(uint64_t f, int slot) {
    uint64_t low = f & ((1ull << (2 * slot)) - 1);
    uint64_t high = 2 * slot + 2 < 64 ? f >> (2 * slot + 2) : 0;
    return low | (high << (2 * slot));
}

inline int slot_of(const std::vector<int>& lbag, int v) {
    auto it = std::lower_bound(lbag.begin(), lbag.end(), v);
    check(it != lbag.end() && *it == v, "vertex missing from its bag");
    return static_cast<int>(it - lbag.begin());
}

struct NiceTree {
    std::vector<NiceNode> nodes;  // children precede parents

    int add(NiceNode n) {
        nodes.push_back(std::move(n));
        return static_cast<int>(nodes.size()) - 1;
    }
    // Forget-then-introduce chain morphing `cur`'s bag into `target`.
    int morph(int cur, const std::vector<int>& target) {
        std::vector<int> bag = nodes[cur].lbag;
        for (int v : std::vector<int>(bag)) {
            if (std::binary_search(target.begin(), target.end(), v)) continue;
            bag.erase(std::find(bag.begin(), bag.end(), v));
            cur = add({Kind::kForget, v, cur, -1, bag});
        }
        for (int v : target) {
            if (std::binary_search(bag.begin(), bag.end(), v)) continue;
            bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
            cur = add({Kind::kIntroduce, v, cur, -1, bag});
        }
        return cur;
    }
    int build(const TreeDecomposition& td, const LabelRules& rules, int t) {
        std::vector<int> target;
        for (int v : td.bags[t])
            if (rules.labelable(v)) target.push_back(v);
        auto& kids = td.children[t];
        check(kids.size() <= 2, "decomposition was not binarized");
        if (kids.empty()) {
            int cur = add({Kind::kLeaf, -1, -1, -1, {}});
            return morph(cur, target);
        }
        if (kids.size() == 1) return morph(build(td, rules, kids[0]), target);
        int left = morph(build(td, rules, kids[0]), target);
        int right = morph(build(td, rules, kids[1]), target);
        return add({Kind::kJoin, -1, left, right, target});
    }
};

template <class B>
DpResult find_triple_impl(const LabelRules& rules, const TreeDecomposition& td,
                          bool prune_resolved) {
    using Ops = BitOps<B>;
    const Slice& s = *rules.slice;
    int nv = s.graph.vertex_count();

    // Tracked edges: crossed parent edges, one bit pair each.
    std::vector<int> tracked;  // parent edge ids
    for (int e = 0; e < static_cast<int>(s.edge_members.size()); ++e)
        if (!s.edge_members[e].empty()) tracked.push_back(e);
    check(static_cast<int>(tracked.size()) <= Ops::capacity,
          "too many crossed edges to track");
    std::vector<int> member_count(tracked.size(), 0);
    // Per vertex: (tracked edge, member index bit) pairs it belongs to.
    std::vector<std::vector<std::pair<int, uint64_t>>> member_of(nv);
    for (size_t i = 0; i < tracked.size(); ++i) {
        auto& mem = s.edge_members[tracked[i]];
        check(mem.size() <= 64, "crossed edge has too many members");
        for (size_t j = 0; j < mem.size(); ++j)
            member_of[mem[j]].push_back({static_cast<int>(i), 1ull << j});
        member_count[i] = static_cast<int>(mem.size());
    }

    // Adjacency among labelable vertices (slice edges plus augmentation).
    std::vector<std::vector<int>> nbrs(nv);
    auto add_nbr = [&](int a, int b) {
        if (rules.labelable(a) && rules.labelable(b)) {
            nbrs[a].push_back(b);
            nbrs[b].push_back(a);
        }
    };
    for (int e = 0; e < s.graph.edge_count(); ++e)
        if (s.graph.edge_alive(e))
            add_nbr(s.graph.tail(2 * e), s.graph.head(2 * e));
    for (auto [a, b] : s.extra_edges) add_nbr(a, b);
    for (auto& v : nbrs) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    NiceTree nice;
    {
        TreeDecomposition bin = td;
        bin.rebuild_children();
        int top = nice.build(bin, rules, bin.root());
        nice.morph(top, {});
    }
    int last = static_cast<int>(nice.nodes.size()) - 1;
    for (auto& node : nice.nodes)
        check(node.lbag.size() <= 32, "bag too wide for the labeling search");

    // Per node, which tracked edges are fully decided inside its subtree;
    // their bits can be dropped from the key once checked.
    std::vector<std::vector<uint64_t>> seen_members(
        nice.nodes.size(), std::vector<uint64_t>(tracked.size(), 0));
    std::vector<B> keep_mask(nice.nodes.size(), B{});
    for (size_t t = 0; t < nice.nodes.size(); ++t) {
        auto& node = nice.nodes[t];
        auto& seen = seen_members[t];
        if (node.child0 != -1) seen = seen_members[node.child0];
        if (node.child1 != -1)
            for (size_t i = 0; i < tracked.size(); ++i)
                seen[i] |= seen_members[node.child1][i];
        if (node.kind == Kind::kIntroduce)
            for (auto [i, bit] : member_of[node.v]) seen[i] |= bit;
        B keep{};
        for (size_t i = 0; i < tracked.size(); ++i) {
            uint64_t full = member_count[i] == 64
                                ? ~0ull
                                : (1ull << member_count[i]) - 1;
            if (seen[i] != full) keep |= Ops::one(static_cast<int>(i));
        }
        keep_mask[t] = keep;
    }
    if (!prune_resolved) {
        // Reference mode: keep every tracked bit in every key.  States then
        // differ only by merges the pruned run would have performed, so both
        // runs must agree on feasibility and minimum budget.
        B all = Ops::low(static_cast<int>(tracked.size()));
        std::fill(keep_mask.begin(), keep_mask.end(), all);
    }

    std::vector<Table<B>> tables(nice.nodes.size());
    for (size_t t = 0; t < nice.nodes.size(); ++t) {
        auto& node = nice.nodes[t];
        Table<B>& out = tables[t];
        B keep = keep_mask[t];
        switch (node.kind) {
            case Kind::kLeaf:
                out[Key<B>{}] = Val<B>{};
                break;
            case Kind::kIntroduce: {
                const Table<B>& in = tables[node.child0];
                int slot = slot_of(node.lbag, node.v);
                int allow = rules.allowed(node.v);
                const auto& child_bag = nice.nodes[node.child0].lbag;
                // Bag neighbours of v, as child-bag slots.
                std::vector<int> check_slots;
                for (int u : nbrs[node.v])
                    if (std::binary_search(child_bag.begin(), child_bag.end(),
                                           u))
                        check_slots.push_back(slot_of(child_bag, u));
                for (auto& [ck, cv] : in) {
                    for (char lab : {kLabelA, kLabelX, kLabelB}) {
                        if (!(allow & (1 << lab))) continue;
                        int sigma = cv.sigma + rules.cost(node.v, lab);
                        if (sigma > rules.s_cap) continue;
                        if (lab != kLabelX) {
                            char other = lab == kLabelA ? kLabelB : kLabelA;
                            bool clash = false;
                            for (int us : check_slots)
                                if (static_cast<char>((ck.f >> (2 * us)) & 3) ==
                                    other) {
                                    clash = true;
                                    break;
                                }
                            if (clash) continue;
                        }
                        Key<B> k = ck;
                        k.f = insert_slot(ck.f, slot, lab);
                        if (lab != kLabelX) {
                            B& side = lab == kLabelA ? k.bits_a : k.bits_b;
                            bool dead = false;
                            for (auto [i, bit] : member_of[node.v]) {
                                (void)bit;
                                side |= Ops::one(i);
                                if (Ops::any(k.bits_a & k.bits_b & Ops::one(i)))
                                    dead = true;
                            }
                            if (dead) continue;
                            if (rules.real_evidence(node.v))
                                k.chi |= lab == kLabelA ? 1 : 2;
                        }
                        k.bits_a &= keep;
                        k.bits_b &= keep;
                        Val<B> nv2;
                        nv2.sigma = sigma;
                        nv2.pred0 = ck;
                        nv2.label = lab;
                        improve(out, k, nv2);
                    }
                }
                break;
            }
            case Kind::kForget: {
                const Table<B>& in = tables[node.child0];
                int slot = slot_of(nice.nodes[node.child0].lbag, node.v);
                for (auto& [ck, cv] : in) {
                    Key<B> k = ck;
                    k.f = remove_slot(ck.f, slot);
                    k.bits_a &= keep;
                    k.bits_b &= keep;
                    Val<B> nv2;
                    nv2.sigma = cv.sigma;
                    nv2.pred0 = ck;
                    improve(out, k, nv2);
                }
                break;
            }
            case Kind::kJoin: {
                const Table<B>& left = tables[node.child0];
                const Table<B>& right = tables[node.child1];
                std::unordered_map<uint64_t, std::vector<const Key<B>*>> by_f;
                for (auto& [rk, rv] : right) by_f[rk.f].push_back(&rk);
                for (auto& [lk, lv] : left) {
                    auto it = by_f.find(lk.f);
                    if (it == by_f.end()) continue;
                    // Real X vertices in the shared bag are counted twice.
                    int shared = 0;
                    for (size_t slot = 0; slot < node.lbag.size(); ++slot)
                        if (((lk.f >> (2 * slot)) & 3) == kLabelX &&
                            rules.is_real(node.lbag[slot]))
                            ++shared;
                    for (const Key<B>* rk : it->second) {
                        const Val<B>& rv = right.at(*rk);
                        int sigma = lv.sigma + rv.sigma - shared;
                        if (sigma > rules.s_cap) continue;
                        Key<B> k;
                        k.f = lk.f;
                        k.bits_a = lk.bits_a | rk->bits_a;
                        k.bits_b = lk.bits_b | rk->bits_b;
                        k.chi = lk.chi | rk->chi;
                        if (Ops::any(k.bits_a & k.bits_b)) continue;
                        k.bits_a &= keep;
                        k.bits_b &= keep;
                        Val<B> nv2;
                        nv2.sigma = sigma;
                        nv2.pred0 = lk;
                        nv2.pred1 = *rk;
                        nv2.has_pred1 = true;
                        improve(out, k, nv2);
                    }
                }
                break;
            }
        }
    }

    DpResult res;
    const Table<B>& final_table = tables[last];
    const Key<B>* best = nullptr;
    for (auto& [k, v] : final_table) {
        if (k.chi != 3) continue;
        if (!best || better(v, final_table.at(*best))) best = &k;
    }
    if (!best) return res;

    res.found = true;
    res.sigma = final_table.at(*best).sigma;
    res.slice_label.assign(nv, -1);
    for (int v = 0; v < nv; ++v)
        if (s.graph.vertex_alive(v) && !rules.labelable(v))
            res.slice_label[v] = kLabelX;

    // Walk the provenance chain top-down, recording introduce choices.
    struct Frame {
        int node;
        Key<B> key;
    };
    std::vector<Frame> stack{{last, *best}};
    while (!stack.empty()) {
        auto [t, key] = stack.back();
        stack.pop_back();
        auto& node = nice.nodes[t];
        const Val<B>& val = tables[t].at(key);
        switch (node.kind) {
            case Kind::kLeaf:
                break;
            case Kind::kIntroduce: {
                char prev = res.slice_label[node.v];
                check(prev == -1 || prev == val.label,
                      "inconsistent labels during backtracking");
                res.slice_label[node.v] = val.label;
                stack.push_back({node.child0, val.pred0});
                break;
            }
            case Kind::kForget:
                stack.push_back({node.child0, val.pred0});
                break;
            case Kind::kJoin:
                stack.push_back({node.child0, val.pred0});
                stack.push_back({node.child1, val.pred1});
                break;
        }
    }
    for (int v = 0; v < nv; ++v)
        check((res.slice_label[v] != -1) == s.graph.vertex_alive(v),
              "labeling missed a live vertex");
    return res;
}

}  // namespace dp_detail

/// Searches one slice for a minimum-budget co-separating labeling using the
/// given tree decomposition.  States are labelings of the bag's planarization
/// vertices and apexes plus, per crossed parent edge, whether any of its
/// member vertices took label A or B (an edge seeing both sides kills the
/// state).  Returns the lowest real-X count with both sides witnessed by a
/// real vertex, and a full deterministic slice labeling.
inline DpResult find_triple(const LabelRules& rules,
                            const TreeDecomposition& td,
                            bool prune_resolved = true) {
    int crossed = 0;
    for (const auto& mem : rules.slice->edge_members)
        if (!mem.empty()) ++crossed;
    if (crossed <= 64)
        return dp_detail::find_triple_impl<uint64_t>(rules, td, prune_resolved);
    return dp_detail::find_triple_impl<dp_detail::Bits128>(rules, td,
                                                           prune_resolved);
}

}  // namespace embcon
