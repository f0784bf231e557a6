#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace embcon {

/// Parse-level failure; carries the 1-based line of the offending input.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// A caller violated a documented precondition.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void check(bool cond, const char* msg) {
    if (!cond) throw internal_error(msg);
}

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw precondition_error(msg);
}

/// Disjoint-set union with path halving and union by size.
class Dsu {
public:
    explicit Dsu(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

    bool same(int a, int b) { return find(a) == find(b); }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

}  // namespace embcon
