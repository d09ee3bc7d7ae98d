#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "uncover/errors.hpp"

namespace uncover {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Binary exponentiation; e >= 0.
BigInt int_pow(BigInt base, unsigned long e);

// Integer powers of rationals with negative exponents allowed (base must be
// nonzero when e < 0).  Several counting formulas pass through negative
// powers like (n-m)^{k-m-1} at m = k before the factors cancel.
BigRat rat_pow(const BigRat& base, long e);

// Generalized binomial coefficient on integer arguments:
//   C(x, 0) = 1 for every x (including negative),
//   C(x, y) = 0 when y < 0, or when y > 0 and (x < 0 or y > x),
//   ordinary value otherwise.
BigInt binomial(long x, long y);

BigInt falling_factorial(long x, long count);

// Renders "p/q", or just "p" when the denominator is 1.
std::string to_fraction_string(const BigRat& v);
double to_double(const BigRat& v);

// Requirement that the uncover counts k_{j_i} equal a_i: strictly increasing
// interior steps 1 < j_1 < ... < j_r < n and a nondecreasing target vector
// with a_i <= j_i - 1.
struct SequenceConstraint {
    int n = 0;
    std::vector<int> js;
    std::vector<int> as;

    void validate() const;  // throws std::invalid_argument
};

// E K_j = j(j-1)/n.
BigRat expected_edges(long n, long j);

// V K_k = k(k-1)(n-k)/n^2.
BigRat variance_edges(long n, long k);

// Number of labeled trees whose uncover counts hit the constraint at every
// requested step.  Summing over all admissible target vectors gives n^{n-2}.
BigInt count_trees_partial_sequence(const SequenceConstraint& c);

// Number of labeled trees with the fully specified uncover sequence
// a = (a_1, ..., a_n), requiring a_1 = 0, a_n = n-1, a nondecreasing,
// a_i <= i-1.
BigInt count_trees_full_sequence(const std::vector<int>& a);

// Number of labeled trees in which one fixed choice of disjoint label sets
// R_1..R_l inside [k], of sizes rs, appears exactly as components of the
// forest induced by [k].  Depends only on the sizes.
BigInt count_trees_with_clusters(long n, long k, const std::vector<long>& rs);

// P(root cluster has size m) after k of n vertices are uncovered, over
// uniformly random rooted trees.
BigRat root_cluster_pmf(long n, long k, long m);

// Count of rooted trees with root-cluster size m at step k; divided by
// n^{n-1} C(n,k) this is root_cluster_pmf.
BigInt count_rooted_trees_root_cluster(long n, long k, long m);

// E R = sum_{j=1..k} j * k^{falling j} / n^j.
BigRat root_cluster_expectation(long n, long k);

// Quadrature of int_0^inf (x-1) e^{-x} (1+x/n)^k dx; agrees with the exact
// sum to 1e-8 relative.
double root_cluster_expectation_integral(long n, long k);

// Cluster-size law of a uniformly chosen *uncovered* vertex:
// (n/k) * root_cluster_pmf, m >= 1.
BigRat uncovered_vertex_cluster_pmf(long n, long k, long m);

// E X_{r} = expected number of size-r components of the induced forest
// = C(k,r)(r/n)^{r-1}(1-k/n)(1-r/n)^{k-r-1}; for k = n the value is 1 at
// r = n and 0 otherwise (single component; the formula degenerates to 0/0).
BigRat expected_components(long n, long k, long r);

// Exact check of sum_{r=1..k} C(k,r) r^r n^{n-k-1} (n-r)^{k-r-1} (n-k)
// == k n^{n-2} for 1 <= k < n.
bool abel_identity_check(long n, long k);

}  // namespace uncover
