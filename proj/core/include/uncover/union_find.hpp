#pragma once

#include <numeric>
#include <vector>

namespace uncover {

// Disjoint-set forest over 1-based labels with union by size and path
// compression.  Component sizes stay queryable after merges.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n + 1), size_(n + 1, 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns false when u and v were already connected.
    bool unite(int u, int v) {
        int a = find(u), b = find(v);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
        return true;
    }

    bool connected(int u, int v) { return find(u) == find(v); }
    int size_of(int x) { return size_[find(x)]; }
    int components() const { return components_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int components_;
};

}  // namespace uncover
