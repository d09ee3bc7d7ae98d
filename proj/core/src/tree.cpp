#include "uncover/tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "uncover/union_find.hpp"

namespace uncover {

void validate_tree(const LabeledTree& t) {
    if (t.n < 1) throw std::invalid_argument("tree: vertex count must be >= 1");
    if (static_cast<int>(t.edges.size()) != t.n - 1)
        throw std::invalid_argument("tree: expected n-1 edges");
    UnionFind dsu(t.n);
    for (const auto& [u, v] : t.edges) {
        if (u < 1 || u > t.n || v < 1 || v > t.n)
            throw std::invalid_argument("tree: edge label out of range");
        if (u == v) throw std::invalid_argument("tree: self-loop");
        if (!dsu.unite(u, v)) throw std::invalid_argument("tree: cycle detected");
    }
    // n-1 successful merges on n vertices leave one component; nothing else
    // to check.
}

bool is_valid_tree(const LabeledTree& t) {
    try {
        validate_tree(t);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

void canonicalize(LabeledTree& t) {
    for (auto& [u, v] : t.edges)
        if (u > v) std::swap(u, v);
    std::sort(t.edges.begin(), t.edges.end());
}

LabeledTree prufer_decode(const PrueferSeq& p) {
    if (p.n < 2) throw std::invalid_argument("prufer: n must be >= 2");
    if (static_cast<int>(p.seq.size()) != p.n - 2)
        throw std::invalid_argument("prufer: sequence length must be n-2");
    const int n = p.n;
    std::vector<int> degree(n + 1, 1);
    for (int s : p.seq) {
        if (s < 1 || s > n) throw std::invalid_argument("prufer: label out of range");
        ++degree[s];
    }
    LabeledTree t;
    t.n = n;
    t.edges.reserve(n - 1);
    // "ptr" scans for the smallest unused leaf; when removing a leaf turns its
    // sequence entry into a smaller leaf, that entry is consumed immediately.
    // This is the O(n) form of smallest-leaf-first removal.
    int ptr = 1;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int s : p.seq) {
        t.edges.emplace_back(leaf, s);
        if (--degree[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    t.edges.emplace_back(leaf, n);
    return t;
}

PrueferSeq prufer_encode(const LabeledTree& t) {
    validate_tree(t);
    if (t.n < 2) throw std::invalid_argument("prufer: n must be >= 2");
    const int n = t.n;
    // XOR of neighbor labels: after all but one neighbor of a leaf are gone,
    // the accumulator holds the remaining neighbor.
    std::vector<int> degree(n + 1, 0);
    std::vector<long long> nbr_xor(n + 1, 0);
    for (const auto& [u, v] : t.edges) {
        ++degree[u];
        ++degree[v];
        nbr_xor[u] ^= v;
        nbr_xor[v] ^= u;
    }
    PrueferSeq p;
    p.n = n;
    p.seq.reserve(n - 2);
    int ptr = 1;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int step = 0; step < n - 2; ++step) {
        const int next = static_cast<int>(nbr_xor[leaf]);
        p.seq.push_back(next);
        nbr_xor[next] ^= leaf;
        if (--degree[next] == 1 && next < ptr) {
            leaf = next;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    return p;
}

LabeledTree sample_uniform_tree(int n, RngStream& rng) {
    if (n < 1) throw std::invalid_argument("sample_uniform_tree: n must be >= 1");
    if (n == 1) return LabeledTree{1, {}};
    if (n == 2) return LabeledTree{2, {{1, 2}}};
    PrueferSeq p;
    p.n = n;
    p.seq.resize(n - 2);
    for (auto& s : p.seq) s = rng.uniform_int(1, n);
    return prufer_decode(p);
}

RootedTree sample_uniform_rooted_tree(int n, RngStream& rng) {
    RootedTree r;
    r.tree = sample_uniform_tree(n, rng);
    r.root = rng.uniform_int(1, n);
    return r;
}

}  // namespace uncover
