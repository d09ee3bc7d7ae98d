#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "uncover/exact.hpp"
#include "uncover/tree.hpp"

namespace uncover {

// Exhaustive-enumeration counts for one question.  Keys are the outcome
// vector of the question (uncover counts at the requested steps, a cluster
// size, ...).
struct EnumerationReport {
    int n = 0;
    std::string context;  // normalization note, e.g. "unrooted, total n^{n-2}"
    std::map<std::vector<int>, BigInt> counts;
    BigInt total = 0;
};

// Visits every labeled tree on n vertices exactly once, in lexicographic
// order of the generating sequences.  Return false from the callback to stop
// early.  n <= 9 unless allow_large permits 10 (explicitly, never more).
void enumerate_trees(int n, const std::function<bool(const LabeledTree&)>& visit,
                     bool allow_large = false);

// Counts trees by the vector (k_{j_1}, ..., k_{j_r}) of uncover counts at the
// requested interior steps 1 < j_1 < ... < j_r < n.  Ground truth for
// count_trees_partial_sequence.  n <= 8.
EnumerationReport oracle_uncover_distribution(int n, const std::vector<int>& js);

// Counts trees by the full vector (k_2, ..., k_{n-1}); k_1 = 0 and
// k_n = n-1 carry no information.  Ground truth for
// count_trees_full_sequence.  n <= 8.
EnumerationReport oracle_full_sequences(int n);

// Counts rooted trees (tree x root, n^{n-1} total) by root-cluster size after
// uncovering labels 1..k.  count(m) / n^{n-1} must equal
// root_cluster_pmf(n, k, m).  n <= 7.
EnumerationReport oracle_root_cluster(int n, int k);

// Exact average number of size-r components of the [k]-induced forest over
// all n^{n-2} trees.  Ground truth for expected_components.  n <= 8.
BigRat oracle_expected_components(int n, int k, int r);

// Number of trees in which the consecutive label blocks {1..r_1},
// {r_1+1..r_1+r_2}, ... are each exactly a component of the [k]-induced
// forest.  Ground truth for count_trees_with_clusters (which depends only on
// the sizes).  n <= 8.
BigInt oracle_fixed_cluster_count(int n, int k, const std::vector<long>& rs);

}  // namespace uncover
