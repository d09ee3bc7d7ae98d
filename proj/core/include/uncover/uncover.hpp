#pragma once

#include <optional>
#include <vector>

#include "uncover/tree.hpp"
#include "uncover/union_find.hpp"

namespace uncover {

// Edge counts of the uncover process: k[j] = number of edges with both
// endpoints in {1..j}.  Stored with k[0] = 0 so indices match labels;
// k[1] = 0 and k[n] = n-1 always.
struct UncoverPath {
    int n = 0;
    std::vector<int> k;  // size n+1
};

// Component structure of the forest induced by the first k labels.
struct ClusterReport {
    int n = 0;
    int k = 0;
    std::vector<int> sizes;  // ascending component sizes; sums to k
    int root_cluster = 0;    // 0 when no root given or root label > k
    int largest = 0;         // 0 when k = 0
};

// A path together with the rescaled process evaluated on a t-grid.
struct ProcessSample {
    UncoverPath path;
    std::vector<std::pair<double, double>> z;  // (t, Z(t))
};

// One pass over the adjacency lists: k[j] = k[j-1] + #neighbors of j with a
// smaller label.
UncoverPath uncover_path(const LabeledTree& t);

// Incremental view of the same process for callers that need component
// structure at one or many steps without recomputing from scratch.  Vertices
// are revealed in label order; each reveal merges the new vertex with its
// already-revealed neighbors.
class IncrementalUncover {
public:
    explicit IncrementalUncover(const LabeledTree& t);

    // Reveals vertices up to label k_target (no-op if already past it).
    void advance(int k_target);

    int n() const { return n_; }
    int k() const { return k_; }
    int edges() const { return edges_; }
    int components() const { return k_ - edges_; }  // forest identity
    int largest() const { return largest_; }

    // Size of the component containing v, or 0 if v is still covered.
    int cluster_of(int v);

    // True when u and v are revealed and lie in the same component.
    bool connected(int u, int v);

    // count_by_size()[r] = number of components of size exactly r.
    const std::vector<int>& count_by_size() const { return count_by_size_; }

    std::vector<int> component_sizes();

private:
    int n_ = 0;
    int k_ = 0;
    int edges_ = 0;
    int largest_ = 0;
    std::vector<int> head_;  // adjacency in CSR form
    std::vector<int> adj_;
    UnionFind dsu_;
    std::vector<int> count_by_size_;
};

ClusterReport cluster_report(const LabeledTree& t, int k, std::optional<int> root = std::nullopt);

// Rescaled interpolated process
//   Z(t) = ((1 + floor(tn) - tn) K_floor(tn) + (tn - floor(tn)) K_ceil(tn) - t^2 n) / sqrt(n),
// with K_0 = 0.  Z(0) = 0 and Z(1) = -1/sqrt(n).
double interpolated_Z(const UncoverPath& p, double t);

// sup over t in [0,1] of |Z(t)|.  On each segment [j/n,(j+1)/n] the numerator
// is linear-minus-quadratic, hence concave, so the supremum is attained at a
// segment endpoint or the single interior stationary point.
double sup_abs_Z(const UncoverPath& p);

// Y_j = (K_j - j(j-1)/n) / (n - j) for 1 <= j <= n-1.
double martingale_Y(const UncoverPath& p, int j);

// Samples a path from the increment recursion
//   K_{j+1} = K_j + Ber((j+1)/n) + Bin(j-1-K_j, 1/(n-j)),  K_1 = 0,
// with independent draws per step.  No tree is built; the joint law matches
// uncover_path of a uniform tree (enforced by the enumeration tests).
UncoverPath recursive_model_sampler(int n, RngStream& rng);

// Convenience: path plus Z evaluated on a grid.
ProcessSample process_sample(const LabeledTree& t, const std::vector<double>& grid);

}  // namespace uncover
