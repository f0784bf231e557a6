#pragma once

#include <algorithm>
#include <vector>

#include "embcon/util.hpp"

namespace embcon {

/// Combinatorial plane multigraph in dart form.
///
/// Edge e owns darts 2e (tail -> head) and 2e+1 (head -> tail).  The rotation
/// at each vertex is the clockwise cyclic order of outgoing darts, stored as a
/// circular doubly linked list.  Faces are the orbits of
///     next(d) = rot_next[reverse(d)]
/// i.e. the successor of d inside its face is the rotation-successor of
/// reverse(d) at the head of d.  For a plane rotation system the orbit count
/// satisfies Euler's formula; callers use that as a planarity check.
class PlaneGraph {
public:
    explicit PlaneGraph(int nv = 0)
        : vertex_dart_(nv, -1), vertex_alive_(nv, 1), nv_alive_(nv) {}

    int vertex_count() const { return static_cast<int>(vertex_dart_.size()); }
    int alive_vertex_count() const { return nv_alive_; }
    int edge_count() const { return static_cast<int>(tail_.size()) / 2; }
    int alive_edge_count() const { return ne_alive_; }
    bool vertex_alive(int v) const { return vertex_alive_[v] != 0; }
    bool edge_alive(int e) const { return edge_alive_[e] != 0; }

    static int reverse(int d) { return d ^ 1; }
    int tail(int d) const { return tail_[d]; }
    int head(int d) const { return tail_[d ^ 1]; }
    int edge_of(int d) const { return d >> 1; }
    int rot_next(int d) const { return rot_next_[d]; }
    int rot_prev(int d) const { return rot_prev_[d]; }
    int vertex_dart(int v) const { return vertex_dart_[v]; }
    int next_in_face(int d) const { return rot_next_[d ^ 1]; }

    int add_vertex() {
        vertex_dart_.push_back(-1);
        vertex_alive_.push_back(1);
        ++nv_alive_;
        return vertex_count() - 1;
    }

    /// New edge whose darts are not yet linked into any rotation.
    int add_detached_edge(int u, int v) {
        check(u != v, "plane graph: loop edge");
        tail_.push_back(u);
        tail_.push_back(v);
        rot_next_.push_back(-1);
        rot_next_.push_back(-1);
        rot_prev_.push_back(-1);
        rot_prev_.push_back(-1);
        edge_alive_.push_back(1);
        ++ne_alive_;
        return edge_count() - 1;
    }

    /// Links dart d as the only dart of its tail, or directly after `after`.
    void attach_dart(int d, int after) {
        int v = tail_[d];
        if (after < 0) {
            check(vertex_dart_[v] == -1, "attach_dart: vertex already has darts");
            vertex_dart_[v] = d;
            rot_next_[d] = d;
            rot_prev_[d] = d;
            return;
        }
        check(tail_[after] == v, "attach_dart: anchor at different vertex");
        int nxt = rot_next_[after];
        rot_next_[after] = d;
        rot_prev_[d] = after;
        rot_next_[d] = nxt;
        rot_prev_[nxt] = d;
    }

    /// Appends to the end of v's current rotation (before vertex_dart(v)).
    void attach_dart_last(int d) {
        int v = tail_[d];
        attach_dart(d, vertex_dart_[v] == -1 ? -1 : rot_prev_[vertex_dart_[v]]);
    }

    /// Adds edge (u, v) appending both darts at the end of the rotations.
    int add_edge(int u, int v) {
        int e = add_detached_edge(u, v);
        attach_dart_last(2 * e);
        attach_dart_last(2 * e + 1);
        return e;
    }

    void detach_dart(int d) {
        int v = tail_[d];
        if (rot_next_[d] == d) {
            vertex_dart_[v] = -1;
        } else {
            rot_next_[rot_prev_[d]] = rot_next_[d];
            rot_prev_[rot_next_[d]] = rot_prev_[d];
            if (vertex_dart_[v] == d) vertex_dart_[v] = rot_next_[d];
        }
        rot_next_[d] = rot_prev_[d] = -1;
    }

    void delete_edge(int e) {
        check(edge_alive_[e] != 0, "delete_edge: already deleted");
        detach_dart(2 * e);
        detach_dart(2 * e + 1);
        edge_alive_[e] = 0;
        --ne_alive_;
    }

    /// Contracts edge e, merging the endpoint opposite `keep` into `keep`
    /// (default: head into tail).  The merged rotation replaces the kept
    /// dart's slot by the dying vertex's rotation starting after the opposite
    /// dart, which keeps the combined rotation system plane.  Other edges
    /// between the two endpoints must have been deleted first (they would
    /// become loops).  Returns the kept vertex.
    int contract_edge(int e, int keep = -1) {
        check(edge_alive_[e] != 0, "contract_edge: dead edge");
        int du = 2 * e, dv = 2 * e + 1;
        if (keep >= 0 && tail_[dv] == keep) std::swap(du, dv);
        int u = tail_[du], v = tail_[dv];
        check(keep < 0 || u == keep, "contract_edge: keep is not an endpoint");
        check(u != v, "contract_edge: loop");
        int b_first = rot_next_[dv] == dv ? -1 : rot_next_[dv];
        int b_last = rot_prev_[dv];
        detach_dart(dv);
        if (b_first == -1) {
            detach_dart(du);
        } else {
            for (int d = b_first;; d = rot_next_[d]) {
                check(tail_[d] != u, "contract_edge: parallel edge present");
                tail_[d] = u;
                if (d == b_last) break;
            }
            int a_prev = rot_prev_[du], a_next = rot_next_[du];
            if (a_prev == du) {  // u had only the contracted dart
                vertex_dart_[u] = b_first;
            } else {
                rot_next_[a_prev] = b_first;
                rot_prev_[b_first] = a_prev;
                rot_next_[b_last] = a_next;
                rot_prev_[a_next] = b_last;
                if (vertex_dart_[u] == du) vertex_dart_[u] = a_next;
            }
            rot_next_[du] = rot_prev_[du] = -1;
        }
        vertex_dart_[v] = -1;
        vertex_alive_[v] = 0;
        --nv_alive_;
        edge_alive_[e] = 0;
        --ne_alive_;
        return u;
    }

    /// Splits the face containing darts x and y by a new edge from head(x) to
    /// head(y).  The new darts are placed so the resulting rotation stays
    /// plane: face successor of x becomes the new edge, likewise for y.
    int split_face(int x, int y) {
        int a = head(x), b = head(y);
        check(a != b, "split_face: would create a loop");
        int e = add_detached_edge(a, b);
        attach_dart(2 * e, x ^ 1);
        attach_dart(2 * e + 1, y ^ 1);
        return e;
    }

    std::vector<int> darts_at(int v) const {
        std::vector<int> out;
        int d0 = vertex_dart_[v];
        if (d0 == -1) return out;
        for (int d = d0;; d = rot_next_[d]) {
            out.push_back(d);
            if (rot_next_[d] == d0) break;
        }
        return out;
    }

    int degree(int v) const { return static_cast<int>(darts_at(v).size()); }

    struct Faces {
        int count = 0;
        std::vector<int> face_of;             // per dart, -1 for dead darts
        std::vector<std::vector<int>> walks;  // dart sequences per face
    };

    Faces faces() const {
        Faces f;
        f.face_of.assign(tail_.size(), -1);
        for (int d0 = 0; d0 < static_cast<int>(tail_.size()); ++d0) {
            if (!edge_alive_[d0 >> 1] || f.face_of[d0] != -1) continue;
            std::vector<int> walk;
            int d = d0;
            do {
                f.face_of[d] = f.count;
                walk.push_back(d);
                d = next_in_face(d);
                check(d >= 0 && edge_alive_[d >> 1], "faces: broken rotation");
            } while (d != d0);
            f.walks.push_back(std::move(walk));
            ++f.count;
        }
        return f;
    }

    /// Euler check for a connected plane multigraph.
    bool euler_ok() const {
        return faces().count == alive_edge_count() - alive_vertex_count() + 2;
    }

    bool connected() const {
        if (nv_alive_ == 0) return true;
        int start = -1;
        for (int v = 0; v < vertex_count(); ++v)
            if (vertex_alive_[v]) { start = v; break; }
        std::vector<char> seen(vertex_count(), 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : darts_at(v)) {
                int w = head(d);
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        return reached == nv_alive_;
    }

private:
    std::vector<int> tail_;
    std::vector<int> rot_next_;
    std::vector<int> rot_prev_;
    std::vector<int> vertex_dart_;
    std::vector<char> vertex_alive_;
    std::vector<char> edge_alive_;
    int nv_alive_ = 0;
    int ne_alive_ = 0;
};

}  // namespace embcon
