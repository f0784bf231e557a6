#pragma once
// Shared instance corpus for the test suite.  One flat list mixing parametric
// families with hand fixtures; tests filter by family or size as needed.

#include <string>
#include <utility>
#include <vector>

#include "embcon/embedded_graph.hpp"
#include "embcon/generators.hpp"

namespace corpus {

enum class Family { kGrid, kCycle, kClique, kMap, kPlanted, kHand };

struct Entry {
    std::string name;
    Family family = Family::kHand;
    embcon::EmbeddedGraph graph;
    int map_degree = 0;        // set for map instances
    std::vector<int> planted;  // planted cut edge ids, set for kPlanted
    int planted_p = 0;         // planted cut size
};

inline std::vector<Entry> build_corpus() {
    using namespace embcon;
    std::vector<Entry> out;
    auto add = [&](std::string name, Family fam, EmbeddedGraph g) -> Entry& {
        out.push_back(Entry{std::move(name), fam, std::move(g), 0, {}, 0});
        return out.back();
    };
    auto num = [](int x) { return std::to_string(x); };

    for (int r = 2; r <= 6; ++r)
        for (int c = 2; c <= 6; ++c)
            add("grid" + num(r) + "x" + num(c), Family::kGrid, gen_grid(r, c));
    for (int n = 3; n <= 78; ++n)
        add("cycle" + num(n), Family::kCycle, gen_cycle(n));
    for (int t = 3; t <= 6; ++t)
        for (int m = t; m < t + 15; ++m)
            add("clique" + num(m) + "_" + num(t), Family::kClique,
                gen_clique_in_face(m, t));
    for (int d = 4; d <= 6; ++d)
        for (int k = 1; k <= 4; ++k) {
            auto& e = add("map" + num(d) + "_" + num(k), Family::kMap,
                          gen_map_flower_chain(d, k));
            e.map_degree = d;
        }
    for (int k : {1, 4})
        for (int p = 1; p <= 3; ++p)
            for (int r = 1; r <= 2; ++r) {
                PlantedCut pc = gen_layered_counterexample(k, p, r);
                auto& e = add("planted" + num(k) + "_" + num(p) + "_" + num(r),
                              Family::kPlanted, std::move(pc.graph));
                e.planted = std::move(pc.planted_edges);
                e.planted_p = p;
            }
    for (int n = 2; n <= 10; ++n)
        add("path" + num(n), Family::kHand, gen_path(n));
    for (int n = 3; n <= 10; ++n)
        add("star" + num(n), Family::kHand, gen_star(n));
    for (int n = 2; n <= 4; ++n)
        add("complete" + num(n), Family::kHand, gen_complete_planar(n));
    add("k5_onecross", Family::kHand, gen_k5_one_crossing());
    return out;
}

/// Smaller sample for expensive per-instance work in the unit tests; the
/// acceptance binary runs the full list.
inline std::vector<Entry> build_small_corpus() {
    using namespace embcon;
    std::vector<Entry> out;
    auto add = [&](std::string name, Family fam, EmbeddedGraph g) {
        out.push_back(Entry{std::move(name), fam, std::move(g), 0, {}, 0});
    };
    add("grid2x3", Family::kGrid, gen_grid(2, 3));
    add("grid3x3", Family::kGrid, gen_grid(3, 3));
    add("cycle5", Family::kCycle, gen_cycle(5));
    add("cycle8", Family::kCycle, gen_cycle(8));
    add("clique6_4", Family::kClique, gen_clique_in_face(6, 4));
    add("clique8_5", Family::kClique, gen_clique_in_face(8, 5));
    add("map4_1", Family::kMap, gen_map_flower_chain(4, 1));
    add("path5", Family::kHand, gen_path(5));
    add("star6", Family::kHand, gen_star(6));
    add("complete4", Family::kHand, gen_complete_planar(4));
    add("k5_onecross", Family::kHand, gen_k5_one_crossing());
    return out;
}

}  // namespace corpus
