#include "uncover/oracle.hpp"

#include <stdexcept>

#include "uncover/uncover.hpp"
#include "uncover/union_find.hpp"

namespace uncover {

namespace {

void check_enumeration_size(int n, bool allow_large) {
    if (n < 1) throw std::invalid_argument("enumerate_trees: n must be >= 1");
    int limit = allow_large ? 10 : 9;
    if (n > limit) {
        throw std::invalid_argument(allow_large
                                        ? "enumerate_trees: n > 10 is not supported"
                                        : "enumerate_trees: n > 9 needs the explicit large flag");
    }
}

}  // namespace

void enumerate_trees(int n, const std::function<bool(const LabeledTree&)>& visit,
                     bool allow_large) {
    check_enumeration_size(n, allow_large);
    if (n == 1) {
        visit(LabeledTree{1, {}});
        return;
    }
    // Odometer over all n^{n-2} sequences in lexicographic order; each decodes
    // to a distinct tree, and every tree appears once.
    PrueferSeq p;
    p.n = n;
    p.seq.assign(n - 2, 1);
    for (;;) {
        if (!visit(prufer_decode(p))) return;
        int pos = n - 3;
        while (pos >= 0 && p.seq[pos] == n) {
            p.seq[pos] = 1;
            --pos;
        }
        if (pos < 0) return;
        ++p.seq[pos];
    }
}

EnumerationReport oracle_uncover_distribution(int n, const std::vector<int>& js) {
    if (n > 8) throw std::invalid_argument("oracle_uncover_distribution: n must be <= 8");
    if (js.empty()) throw std::invalid_argument("oracle_uncover_distribution: js must be nonempty");
    for (std::size_t i = 0; i < js.size(); ++i) {
        if (js[i] <= 1 || js[i] >= n) {
            throw std::invalid_argument("oracle_uncover_distribution: steps must satisfy 1 < j < n");
        }
        if (i > 0 && js[i] <= js[i - 1]) {
            throw std::invalid_argument("oracle_uncover_distribution: steps must be strictly increasing");
        }
    }
    EnumerationReport report;
    report.n = n;
    report.context = "unrooted, total n^{n-2}";
    enumerate_trees(n, [&](const LabeledTree& t) {
        UncoverPath path = uncover_path(t);
        std::vector<int> key(js.size());
        for (std::size_t i = 0; i < js.size(); ++i) key[i] = path.k[js[i]];
        report.counts[key] += 1;
        report.total += 1;
        return true;
    });
    return report;
}

EnumerationReport oracle_full_sequences(int n) {
    if (n > 8) throw std::invalid_argument("oracle_full_sequences: n must be <= 8");
    if (n < 1) throw std::invalid_argument("oracle_full_sequences: n must be >= 1");
    EnumerationReport report;
    report.n = n;
    report.context = "unrooted, total n^{n-2}, key = (k_2..k_{n-1})";
    enumerate_trees(n, [&](const LabeledTree& t) {
        UncoverPath path = uncover_path(t);
        std::vector<int> key;
        key.reserve(n >= 2 ? n - 2 : 0);
        for (int j = 2; j <= n - 1; ++j) key.push_back(path.k[j]);
        report.counts[key] += 1;
        report.total += 1;
        return true;
    });
    return report;
}

EnumerationReport oracle_root_cluster(int n, int k) {
    if (n > 7) throw std::invalid_argument("oracle_root_cluster: n must be <= 7");
    if (k < 1 || k > n) throw std::invalid_argument("oracle_root_cluster: k must satisfy 1 <= k <= n");
    EnumerationReport report;
    report.n = n;
    report.context = "rooted, total n^{n-1}";
    enumerate_trees(n, [&](const LabeledTree& t) {
        IncrementalUncover inc(t);
        inc.advance(k);
        // Roots with label > k sit in no cluster (size 0); each uncovered root
        // contributes its component size.
        report.counts[{0}] += n - k;
        for (int v = 1; v <= k; ++v) report.counts[{inc.cluster_of(v)}] += 1;
        report.total += n;
        return true;
    });
    if (k == n) report.counts.erase(std::vector<int>{0});  // no covered roots remain
    return report;
}

BigRat oracle_expected_components(int n, int k, int r) {
    if (n > 8) throw std::invalid_argument("oracle_expected_components: n must be <= 8");
    if (k < 0 || k > n) {
        throw std::invalid_argument("oracle_expected_components: k must satisfy 0 <= k <= n");
    }
    if (r < 1 || r > k) {
        throw std::invalid_argument("oracle_expected_components: r must satisfy 1 <= r <= k");
    }
    BigInt sum = 0;
    BigInt trees = 0;
    enumerate_trees(n, [&](const LabeledTree& t) {
        IncrementalUncover inc(t);
        inc.advance(k);
        sum += inc.count_by_size()[r];
        trees += 1;
        return true;
    });
    return BigRat(sum, trees);
}

BigInt oracle_fixed_cluster_count(int n, int k, const std::vector<long>& rs) {
    if (n > 8) throw std::invalid_argument("oracle_fixed_cluster_count: n must be <= 8");
    if (k < 0 || k > n) {
        throw std::invalid_argument("oracle_fixed_cluster_count: k must satisfy 0 <= k <= n");
    }
    long sum = 0;
    for (long r : rs) {
        if (r < 1) throw std::invalid_argument("oracle_fixed_cluster_count: sizes must be >= 1");
        sum += r;
    }
    if (sum > k) throw std::invalid_argument("oracle_fixed_cluster_count: sizes must sum to at most k");

    BigInt count = 0;
    enumerate_trees(n, [&](const LabeledTree& t) {
        IncrementalUncover inc(t);
        inc.advance(k);
        // Block i covers labels (start, start + rs[i]]; it is exactly a
        // component when its first label sits in a component of size rs[i]
        // and every other member is connected to it.
        long start = 0;
        bool match = true;
        for (long r : rs) {
            int rep = static_cast<int>(start) + 1;
            if (inc.cluster_of(rep) != static_cast<int>(r)) {
                match = false;
                break;
            }
            for (long v = start + 2; v <= start + r; ++v) {
                if (!inc.connected(rep, static_cast<int>(v))) {
                    match = false;
                    break;
                }
            }
            if (!match) break;
            start += r;
        }
        if (match) count += 1;
        return true;
    });
    return count;
}

}  // namespace uncover
