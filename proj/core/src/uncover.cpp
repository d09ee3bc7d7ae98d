#include "uncover/uncover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uncover {

namespace {

// CSR adjacency for 1-based labels.
void build_adjacency(const LabeledTree& t, std::vector<int>& head, std::vector<int>& adj) {
    head.assign(t.n + 2, 0);
    for (const auto& [u, v] : t.edges) {
        ++head[u + 1];
        ++head[v + 1];
    }
    for (int i = 1; i <= t.n + 1; ++i) head[i] += head[i - 1];
    adj.resize(2 * t.edges.size());
    std::vector<int> cursor(head.begin(), head.end() - 1);
    for (const auto& [u, v] : t.edges) {
        adj[cursor[u]++] = v;
        adj[cursor[v]++] = u;
    }
}

}  // namespace

UncoverPath uncover_path(const LabeledTree& t) {
    validate_tree(t);
    UncoverPath p;
    p.n = t.n;
    p.k.assign(t.n + 1, 0);
    std::vector<int> head, adj;
    build_adjacency(t, head, adj);
    for (int j = 1; j <= t.n; ++j) {
        int gained = 0;
        for (int idx = head[j]; idx < head[j + 1]; ++idx)
            if (adj[idx] < j) ++gained;
        p.k[j] = p.k[j - 1] + gained;
    }
    return p;
}

IncrementalUncover::IncrementalUncover(const LabeledTree& t)
    : n_(t.n), dsu_(t.n), count_by_size_(t.n + 1, 0) {
    validate_tree(t);
    build_adjacency(t, head_, adj_);
}

void IncrementalUncover::advance(int k_target) {
    if (k_target > n_) throw std::invalid_argument("advance: k exceeds vertex count");
    while (k_ < k_target) {
        const int v = ++k_;
        ++count_by_size_[1];
        if (largest_ == 0) largest_ = 1;
        for (int idx = head_[v]; idx < head_[v + 1]; ++idx) {
            const int w = adj_[idx];
            if (w >= v) continue;  // still covered
            ++edges_;
            const int a = dsu_.size_of(v);
            const int b = dsu_.size_of(w);
            dsu_.unite(v, w);
            --count_by_size_[a];
            --count_by_size_[b];
            ++count_by_size_[a + b];
            largest_ = std::max(largest_, a + b);
        }
    }
}

int IncrementalUncover::cluster_of(int v) {
    if (v < 1 || v > n_) throw std::invalid_argument("cluster_of: label out of range");
    if (v > k_) return 0;
    return dsu_.size_of(v);
}

bool IncrementalUncover::connected(int u, int v) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
        throw std::invalid_argument("connected: label out of range");
    if (u > k_ || v > k_) return false;
    return dsu_.connected(u, v);
}

std::vector<int> IncrementalUncover::component_sizes() {
    std::vector<int> sizes;
    sizes.reserve(components());
    for (int r = 1; r <= n_; ++r)
        for (int c = 0; c < count_by_size_[r]; ++c) sizes.push_back(r);
    return sizes;
}

ClusterReport cluster_report(const LabeledTree& t, int k, std::optional<int> root) {
    if (k < 0 || k > t.n) throw std::invalid_argument("cluster_report: k out of range");
    if (root && (*root < 1 || *root > t.n))
        throw std::invalid_argument("cluster_report: root out of range");
    IncrementalUncover run(t);
    run.advance(k);
    ClusterReport r;
    r.n = t.n;
    r.k = k;
    r.sizes = run.component_sizes();
    r.largest = run.largest();
    r.root_cluster = root ? run.cluster_of(*root) : 0;
    return r;
}

double interpolated_Z(const UncoverPath& p, double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("interpolated_Z: t outside [0,1]");
    const double n = p.n;
    const double tn = t * n;
    const int lo = static_cast<int>(std::floor(tn));
    const int hi = std::min(lo + 1, p.n);
    const double frac = tn - lo;
    const double k_lo = p.k[lo];
    const double k_hi = p.k[hi];
    const double interpolated = (1.0 - frac) * k_lo + frac * k_hi;
    return (interpolated - t * t * n) / std::sqrt(n);
}

double sup_abs_Z(const UncoverPath& p) {
    const double n = p.n;
    const double inv_sqrt_n = 1.0 / std::sqrt(n);
    double best = 0.0;
    // On [j/n,(j+1)/n] write tn = j + u:  numerator = K_j + u*dk - (j+u)^2/n.
    // Endpoints |Z(j/n)| plus, if the stationary point of the concave
    // numerator falls inside the segment, its value too.
    for (int j = 0; j <= p.n; ++j) {
        const double at_node = (p.k[j] - static_cast<double>(j) * j / n) * inv_sqrt_n;
        best = std::max(best, std::abs(at_node));
        if (j == p.n) break;
        const double dk = p.k[j + 1] - p.k[j];
        const double u_star = (n * dk / 2.0) - j;  // d/du = 0 at tn = n*dk/2
        if (u_star > 0.0 && u_star < 1.0) {
            const double tn = j + u_star;
            const double z = (p.k[j] + u_star * dk - tn * tn / n) * inv_sqrt_n;
            best = std::max(best, std::abs(z));
        }
    }
    return best;
}

double martingale_Y(const UncoverPath& p, int j) {
    if (j < 1 || j > p.n - 1)
        throw std::invalid_argument("martingale_Y: j must be in [1, n-1]");
    const double n = p.n;
    return (p.k[j] - static_cast<double>(j) * (j - 1) / n) / (n - j);
}

UncoverPath recursive_model_sampler(int n, RngStream& rng) {
    if (n < 2) throw std::invalid_argument("recursive_model_sampler: n must be >= 2");
    UncoverPath p;
    p.n = n;
    p.k.assign(n + 1, 0);
    for (int j = 1; j <= n - 1; ++j) {
        const long newly_closed = rng.binomial(j - 1 - p.k[j], 1.0 / (n - j));
        const int to_new_vertex = rng.bernoulli(static_cast<double>(j + 1) / n) ? 1 : 0;
        p.k[j + 1] = p.k[j] + to_new_vertex + static_cast<int>(newly_closed);
    }
    return p;
}

ProcessSample process_sample(const LabeledTree& t, const std::vector<double>& grid) {
    ProcessSample s;
    s.path = uncover_path(t);
    s.z.reserve(grid.size());
    for (double g : grid) s.z.emplace_back(g, interpolated_Z(s.path, g));
    return s;
}

}  // namespace uncover
