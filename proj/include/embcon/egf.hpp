#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "embcon/embedded_graph.hpp"
#include "embcon/util.hpp"

namespace embcon {

// Text format for embedded graphs, one directive per line:
//
//   egf 1
//   vertices <n>
//   crossings <q>
//   edge <id> <u> <v> [: <crossing>...]     (ids dense, ascending)
//   rot <v> : <edge>.<segment> ...          (one line per vertex, clockwise)
//
// '#' starts a comment.  Sections must appear in the order above.

namespace egf_detail {

inline int to_int(const std::string& tok, int line) {
    size_t pos = 0;
    int val = 0;
    try {
        val = std::stoi(tok, &pos);
    } catch (...) {
        throw parse_error(line, "expected integer, got '" + tok + "'");
    }
    if (pos != tok.size())
        throw parse_error(line, "expected integer, got '" + tok + "'");
    return val;
}

inline std::pair<int, int> to_seg_ref(const std::string& tok, int line) {
    auto dot = tok.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == tok.size())
        throw parse_error(line, "expected <edge>.<segment>, got '" + tok + "'");
    return {to_int(tok.substr(0, dot), line), to_int(tok.substr(dot + 1), line)};
}

}  // namespace egf_detail

inline EmbeddedGraph parse_egf(std::istream& in) {
    using egf_detail::to_int;
    using egf_detail::to_seg_ref;
    EmbeddedGraph g;
    enum Section { kHeader, kVertices, kCrossings, kEdges, kRots } at = kHeader;
    std::vector<char> rot_seen;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        if (kw == "egf") {
            if (at != kHeader) throw parse_error(line, "duplicate 'egf' header");
            if (tok.size() != 2 || tok[1] != "1")
                throw parse_error(line, "unsupported format version");
            at = kVertices;
        } else if (kw == "vertices") {
            if (at != kVertices)
                throw parse_error(line, "'vertices' out of order");
            if (tok.size() != 2) throw parse_error(line, "usage: vertices <n>");
            g.n = to_int(tok[1], line);
            if (g.n < 1) throw parse_error(line, "vertex count must be positive");
            at = kCrossings;
        } else if (kw == "crossings") {
            if (at != kCrossings)
                throw parse_error(line, "'crossings' out of order");
            if (tok.size() != 2) throw parse_error(line, "usage: crossings <q>");
            g.q = to_int(tok[1], line);
            if (g.q < 0) throw parse_error(line, "crossing count must be >= 0");
            at = kEdges;
        } else if (kw == "edge") {
            if (at != kEdges)
                throw parse_error(line, at < kEdges ? "'edge' before counts"
                                                    : "'edge' after 'rot' lines");
            if (tok.size() < 4) throw parse_error(line, "usage: edge <id> <u> <v> [: ...]");
            int id = to_int(tok[1], line);
            if (id != g.edge_count())
                throw parse_error(line, "edge ids must be dense and ascending, expected " +
                                            std::to_string(g.edge_count()));
            ParentEdge pe;
            pe.u = to_int(tok[2], line);
            pe.v = to_int(tok[3], line);
            for (int endpoint : {pe.u, pe.v})
                if (endpoint < 0 || endpoint >= g.n)
                    throw parse_error(line, "edge endpoint out of range");
            if (tok.size() > 4) {
                if (tok[4] != ":")
                    throw parse_error(line, "expected ':' before crossing list");
                for (size_t i = 5; i < tok.size(); ++i) {
                    int d = to_int(tok[i], line);
                    if (d < g.n || d >= g.vertex_count())
                        throw parse_error(line, "interior vertex " + std::to_string(d) +
                                                    " is not a crossing id");
                    pe.interior.push_back(d);
                }
            }
            g.edges.push_back(std::move(pe));
        } else if (kw == "rot") {
            if (at == kEdges) {
                at = kRots;
                g.rot.resize(g.vertex_count());
                rot_seen.assign(g.vertex_count(), 0);
            }
            if (at != kRots) throw parse_error(line, "'rot' before counts");
            if (tok.size() < 3 || tok[2] != ":")
                throw parse_error(line, "usage: rot <v> : <edge>.<segment> ...");
            int v = to_int(tok[1], line);
            if (v < 0 || v >= g.vertex_count())
                throw parse_error(line, "rotation vertex out of range");
            if (rot_seen[v])
                throw parse_error(line, "duplicate rotation for vertex " + std::to_string(v));
            rot_seen[v] = 1;
            for (size_t i = 3; i < tok.size(); ++i) {
                auto [e, s] = to_seg_ref(tok[i], line);
                if (e < 0 || e >= g.edge_count())
                    throw parse_error(line, "rotation names unknown edge " + std::to_string(e));
                if (s < 0 || s >= g.edges[e].seg_count())
                    throw parse_error(line, "segment index out of range for edge " +
                                                std::to_string(e));
                g.rot[v].push_back({e, s});
            }
            if (g.is_crossing(v) && g.rot[v].size() != 4)
                throw parse_error(line, "crossing vertex " + std::to_string(v) +
                                            ": dummy degree != 4");
        } else {
            throw parse_error(line, "unknown directive '" + kw + "'");
        }
    }
    if (at < kEdges) throw parse_error(line + 1, "missing header sections");
    if (at == kEdges) {
        g.rot.resize(g.vertex_count());
        rot_seen.assign(g.vertex_count(), 0);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!rot_seen[v])
            throw parse_error(line + 1, "missing rotation for vertex " + std::to_string(v));
    return g;
}

inline EmbeddedGraph parse_egf(const std::string& text) {
    std::istringstream in(text);
    return parse_egf(in);
}

inline EmbeddedGraph load_egf_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open file: " + path);
    return parse_egf(in);
}

/// Canonical text form: sections in fixed order, each rotation rotated to
/// start at its lexicographically smallest entry.
inline std::string serialize_egf(const EmbeddedGraph& g) {
    std::ostringstream out;
    out << "egf 1\n";
    out << "vertices " << g.n << "\n";
    out << "crossings " << g.q << "\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        const ParentEdge& pe = g.edges[e];
        out << "edge " << e << " " << pe.u << " " << pe.v;
        if (!pe.interior.empty()) {
            out << " :";
            for (int d : pe.interior) out << " " << d;
        }
        out << "\n";
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "rot " << v << " :";
        const auto& r = g.rot[v];
        size_t start = 0;
        for (size_t i = 1; i < r.size(); ++i)
            if (r[i] < r[start]) start = i;
        for (size_t i = 0; i < r.size(); ++i) {
            auto [e, s] = r[(start + i) % r.size()];
            out << " " << e << "." << s;
        }
        out << "\n";
    }
    return out.str();
}

inline void save_egf_file(const EmbeddedGraph& g, const std::string& path) {
    std::ofstream out(path);
    require(out.good(), "cannot open file for writing: " + path);
    out << serialize_egf(g);
}

}  // namespace embcon
