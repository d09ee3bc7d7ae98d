#include "uncover/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "uncover/asymptotics.hpp"
#include "uncover/special.hpp"
#include "uncover/tree.hpp"
#include "uncover/uncover.hpp"

namespace uncover {

namespace {

void check_common(const ExperimentConfig& cfg, long min_n) {
    if (cfg.n < min_n) throw std::invalid_argument("experiment: n too small");
    if (cfg.samples < 1) throw std::invalid_argument("experiment: samples must be >= 1");
    for (double t : cfg.grid) {
        if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("experiment: grid values must lie in [0,1]");
    }
}

// Mean and batch-scatter standard error of per-batch statistics.
double batch_se(const std::vector<double>& batch_values) {
    const std::size_t nb = batch_values.size();
    if (nb < 2) return 0.0;
    double mean = 0.0;
    for (double v : batch_values) mean += v;
    mean /= static_cast<double>(nb);
    double ss = 0.0;
    for (double v : batch_values) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / static_cast<double>(nb - 1) / static_cast<double>(nb));
}

struct EdgeAccum {
    long count = 0;
    std::vector<double> sum_k, sum_k2;
    std::vector<double> sum_z, sum_z2, sum_z3, sum_z4;
    std::vector<double> sum_zz;  // upper triangle (a <= b), row-major
    std::vector<long> exceed;

    void ensure(std::size_t njs, std::size_t ngrid, std::size_t nthr) {
        if (count > 0) return;
        sum_k.assign(njs, 0.0);
        sum_k2.assign(njs, 0.0);
        sum_z.assign(ngrid, 0.0);
        sum_z2.assign(ngrid, 0.0);
        sum_z3.assign(ngrid, 0.0);
        sum_z4.assign(ngrid, 0.0);
        sum_zz.assign(ngrid * (ngrid + 1) / 2, 0.0);
        exceed.assign(nthr, 0);
    }
};

std::size_t tri_index(std::size_t a, std::size_t b, std::size_t m) {
    // a <= b, row-major upper triangle of an m x m matrix
    return a * m - a * (a + 1) / 2 + b;
}

struct ClusterAccum {
    long count = 0;
    std::vector<long> root_hist, largest_hist;
    std::vector<double> size_sums;
    double sum_ratio = 0.0, sum_ratio2 = 0.0;

    void ensure(std::size_t k, bool components) {
        if (count > 0) return;
        root_hist.assign(k + 1, 0);
        largest_hist.assign(k + 1, 0);
        if (components) size_sums.assign(k + 1, 0.0);
    }
};

struct LargestAccum {
    long count = 0;
    long exceed = 0;
    double sum_ratio = 0.0, sum_ratio2 = 0.0;
};

struct GpAccum {
    long count = 0;
    std::vector<double> sum_z, sum_z2, sum_zz;

    void ensure(std::size_t ngrid) {
        if (count > 0) return;
        sum_z.assign(ngrid, 0.0);
        sum_z2.assign(ngrid, 0.0);
        sum_zz.assign(ngrid * (ngrid + 1) / 2, 0.0);
    }
};

}  // namespace

int resolve_threads(int requested) {
    if (requested < 0) throw std::invalid_argument("resolve_threads: thread count must be >= 0");
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

GofResult chi_square_test(const std::vector<long long>& observed,
                          const std::vector<double>& expected, long long total) {
    if (observed.size() != expected.size()) {
        throw std::invalid_argument("chi_square_test: observed/expected size mismatch");
    }
    if (total <= 0) throw std::invalid_argument("chi_square_test: total must be positive");
    double prob_sum = 0.0;
    long long obs_sum = 0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (expected[i] < 0.0) throw std::invalid_argument("chi_square_test: negative probability");
        if (observed[i] < 0) throw std::invalid_argument("chi_square_test: negative count");
        prob_sum += expected[i];
        obs_sum += observed[i];
    }
    if (prob_sum > 1.0 + 1e-9) throw std::invalid_argument("chi_square_test: probabilities sum past 1");
    if (obs_sum > total) throw std::invalid_argument("chi_square_test: counts exceed total");

    std::vector<std::pair<double, double>> cells;  // (observed, expected count)
    cells.reserve(expected.size() + 1);
    for (std::size_t i = 0; i < expected.size(); ++i) {
        cells.emplace_back(static_cast<double>(observed[i]),
                           expected[i] * static_cast<double>(total));
    }
    const double tail_obs = static_cast<double>(total - obs_sum);
    const double tail_exp = (1.0 - prob_sum) * static_cast<double>(total);
    if (tail_obs > 0.0 || tail_exp > 1e-9) cells.emplace_back(tail_obs, tail_exp);

    GofResult res;
    double acc_obs = 0.0, acc_exp = 0.0;
    for (const auto& [o, e] : cells) {
        acc_obs += o;
        acc_exp += e;
        if (acc_exp >= 5.0) {
            res.bins.emplace_back(acc_obs, acc_exp);
            acc_obs = acc_exp = 0.0;
        }
    }
    if (acc_exp > 0.0 || acc_obs > 0.0) {
        if (!res.bins.empty()) {
            res.bins.back().first += acc_obs;
            res.bins.back().second += acc_exp;
        } else {
            res.bins.emplace_back(acc_obs, acc_exp);
        }
    }
    if (res.bins.size() < 2) {
        res.degenerate = true;
        return res;
    }
    double stat = 0.0;
    for (const auto& [o, e] : res.bins) stat += (o - e) * (o - e) / e;
    res.statistic = stat;
    res.dof = static_cast<int>(res.bins.size()) - 1;
    res.p_value = chi_square_survival(stat, res.dof);
    return res;
}

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
    const std::size_t m = std::max(p.size(), q.size());
    double tv = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double pi = i < p.size() ? p[i] : 0.0;
        const double qi = i < q.size() ? q[i] : 0.0;
        if (pi < 1e-8 && qi < 1e-8) continue;
        tv += std::abs(pi - qi);
    }
    return 0.5 * tv;
}

EdgeMomentReport run_edge_moment_experiment(const ExperimentConfig& cfg) {
    check_common(cfg, 2);
    for (int j : cfg.js) {
        if (j < 1 || j > cfg.n) throw std::invalid_argument("experiment: j out of range");
    }
    const std::size_t njs = cfg.js.size();
    const std::size_t ngrid = cfg.grid.size();
    const std::size_t nthr = cfg.thresholds.size();
    const int n = static_cast<int>(cfg.n);

    auto partials = run_batched<EdgeAccum>(
        cfg.seed, cfg.samples, cfg.threads, [&](EdgeAccum& acc, long, RngStream& rng) {
            acc.ensure(njs, ngrid, nthr);
            LabeledTree t = sample_uniform_tree(n, rng);
            UncoverPath path = uncover_path(t);
            for (std::size_t a = 0; a < njs; ++a) {
                const double kv = path.k[static_cast<std::size_t>(cfg.js[a])];
                acc.sum_k[a] += kv;
                acc.sum_k2[a] += kv * kv;
            }
            std::vector<double> z(ngrid);
            for (std::size_t a = 0; a < ngrid; ++a) {
                z[a] = interpolated_Z(path, cfg.grid[a]);
                acc.sum_z[a] += z[a];
                const double z2 = z[a] * z[a];
                acc.sum_z2[a] += z2;
                acc.sum_z3[a] += z2 * z[a];
                acc.sum_z4[a] += z2 * z2;
            }
            for (std::size_t a = 0; a < ngrid; ++a) {
                for (std::size_t b = a; b < ngrid; ++b) acc.sum_zz[tri_index(a, b, ngrid)] += z[a] * z[b];
            }
            if (nthr > 0) {
                const double sup = sup_abs_Z(path);
                for (std::size_t a = 0; a < nthr; ++a) {
                    if (sup >= cfg.thresholds[a]) ++acc.exceed[a];
                }
            }
            ++acc.count;
        });

    EdgeMomentReport rep;
    rep.cfg = cfg;
    EdgeAccum total;
    total.ensure(njs, ngrid, nthr);
    total.count = 0;
    for (const auto& p : partials) {
        if (p.count == 0) continue;
        total.count += p.count;
        for (std::size_t a = 0; a < njs; ++a) {
            total.sum_k[a] += p.sum_k[a];
            total.sum_k2[a] += p.sum_k2[a];
        }
        for (std::size_t a = 0; a < ngrid; ++a) {
            total.sum_z[a] += p.sum_z[a];
            total.sum_z2[a] += p.sum_z2[a];
            total.sum_z3[a] += p.sum_z3[a];
            total.sum_z4[a] += p.sum_z4[a];
        }
        for (std::size_t a = 0; a < total.sum_zz.size(); ++a) total.sum_zz[a] += p.sum_zz[a];
        for (std::size_t a = 0; a < nthr; ++a) total.exceed[a] += p.exceed[a];
    }
    const double M = static_cast<double>(total.count);
    rep.samples = total.count;

    rep.k_moments.resize(njs);
    for (std::size_t a = 0; a < njs; ++a) {
        const double mean = total.sum_k[a] / M;
        const double var = (total.sum_k2[a] - M * mean * mean) / (M - 1.0);
        rep.k_moments[a] = {mean, var, std::sqrt(var / M)};
    }

    rep.mean_z.resize(ngrid);
    rep.var_z.resize(ngrid);
    rep.skew_z.resize(ngrid);
    rep.exkurt_z.resize(ngrid);
    for (std::size_t a = 0; a < ngrid; ++a) {
        const double mu = total.sum_z[a] / M;
        const double m2 = total.sum_z2[a] / M - mu * mu;
        const double m3 = total.sum_z3[a] / M - 3.0 * mu * total.sum_z2[a] / M + 2.0 * mu * mu * mu;
        const double m4 = total.sum_z4[a] / M - 4.0 * mu * total.sum_z3[a] / M +
                          6.0 * mu * mu * total.sum_z2[a] / M - 3.0 * mu * mu * mu * mu;
        rep.mean_z[a] = mu;
        rep.var_z[a] = m2 * M / (M - 1.0);
        rep.skew_z[a] = m3 / std::pow(m2, 1.5);
        rep.exkurt_z[a] = m4 / (m2 * m2) - 3.0;
    }

    rep.cov_z.assign(ngrid, std::vector<double>(ngrid, 0.0));
    rep.cov_z_se.assign(ngrid, std::vector<double>(ngrid, 0.0));
    for (std::size_t a = 0; a < ngrid; ++a) {
        for (std::size_t b = a; b < ngrid; ++b) {
            const double mu_a = total.sum_z[a] / M;
            const double mu_b = total.sum_z[b] / M;
            const double cov =
                (total.sum_zz[tri_index(a, b, ngrid)] / M - mu_a * mu_b) * M / (M - 1.0);
            rep.cov_z[a][b] = cov;
            rep.cov_z[b][a] = cov;
            std::vector<double> per_batch;
            per_batch.reserve(partials.size());
            for (const auto& p : partials) {
                if (p.count < 2) continue;
                const double c = static_cast<double>(p.count);
                const double ma = p.sum_z[a] / c;
                const double mb = p.sum_z[b] / c;
                per_batch.push_back((p.sum_zz[tri_index(a, b, ngrid)] / c - ma * mb) * c / (c - 1.0));
            }
            const double se = batch_se(per_batch);
            rep.cov_z_se[a][b] = se;
            rep.cov_z_se[b][a] = se;
        }
    }
    rep.sup_exceed = total.exceed;
    return rep;
}

ClusterExperimentReport run_cluster_experiment(const ExperimentConfig& cfg) {
    check_common(cfg, 1);
    if (cfg.k < 1 || cfg.k > cfg.n) throw std::invalid_argument("experiment: k must satisfy 1 <= k <= n");
    const int n = static_cast<int>(cfg.n);
    const int k = static_cast<int>(cfg.k);
    const std::size_t ksz = static_cast<std::size_t>(k);

    auto partials = run_batched<ClusterAccum>(
        cfg.seed, cfg.samples, cfg.threads, [&](ClusterAccum& acc, long, RngStream& rng) {
            acc.ensure(ksz, cfg.collect_components);
            RootedTree rt = sample_uniform_rooted_tree(n, rng);
            IncrementalUncover inc(rt.tree);
            inc.advance(k);
            const int m = inc.cluster_of(rt.root);
            ++acc.root_hist[static_cast<std::size_t>(m)];
            ++acc.largest_hist[static_cast<std::size_t>(inc.largest())];
            const double ratio = static_cast<double>(m) / static_cast<double>(n);
            acc.sum_ratio += ratio;
            acc.sum_ratio2 += ratio * ratio;
            if (cfg.collect_components) {
                const auto& by_size = inc.count_by_size();
                for (int r = 1; r <= k; ++r) acc.size_sums[static_cast<std::size_t>(r)] += by_size[static_cast<std::size_t>(r)];
            }
            ++acc.count;
        });

    ClusterExperimentReport rep;
    rep.cfg = cfg;
    rep.root_cluster_hist.assign(ksz + 1, 0);
    rep.largest_hist.assign(ksz + 1, 0);
    if (cfg.collect_components) rep.mean_count_by_size.assign(ksz + 1, 0.0);
    double sum_ratio = 0.0, sum_ratio2 = 0.0;
    for (const auto& p : partials) {
        if (p.count == 0) continue;
        rep.samples += p.count;
        for (std::size_t i = 0; i <= ksz; ++i) {
            rep.root_cluster_hist[i] += p.root_hist[i];
            rep.largest_hist[i] += p.largest_hist[i];
            if (cfg.collect_components) rep.mean_count_by_size[i] += p.size_sums[i];
        }
        sum_ratio += p.sum_ratio;
        sum_ratio2 += p.sum_ratio2;
    }
    const double M = static_cast<double>(rep.samples);
    if (cfg.collect_components) {
        for (auto& v : rep.mean_count_by_size) v /= M;
    }
    rep.mean_root_ratio = sum_ratio / M;
    const double var = (sum_ratio2 - M * rep.mean_root_ratio * rep.mean_root_ratio) / (M - 1.0);
    rep.se_root_ratio = std::sqrt(std::max(var, 0.0) / M);
    return rep;
}

LargestComponentReport run_largest_component_experiment(const ExperimentConfig& cfg) {
    check_common(cfg, 1);
    if (cfg.k < 1 || cfg.k > cfg.n) throw std::invalid_argument("experiment: k must satisfy 1 <= k <= n");
    if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0)) {
        throw std::invalid_argument("experiment: alpha must lie in (0,1]");
    }
    const int n = static_cast<int>(cfg.n);
    const int k = static_cast<int>(cfg.k);
    const double cutoff = cfg.alpha * static_cast<double>(cfg.n) - 1e-9;

    auto partials = run_batched<LargestAccum>(
        cfg.seed, cfg.samples, cfg.threads, [&](LargestAccum& acc, long, RngStream& rng) {
            LabeledTree t = sample_uniform_tree(n, rng);
            IncrementalUncover inc(t);
            inc.advance(k);
            const double largest = static_cast<double>(inc.largest());
            acc.sum_ratio += largest / static_cast<double>(n);
            acc.sum_ratio2 += largest * largest / (static_cast<double>(n) * static_cast<double>(n));
            if (largest >= cutoff) ++acc.exceed;
            ++acc.count;
        });

    LargestComponentReport rep;
    rep.cfg = cfg;
    long exceed = 0;
    double sum_ratio = 0.0, sum_ratio2 = 0.0;
    for (const auto& p : partials) {
        rep.samples += p.count;
        exceed += p.exceed;
        sum_ratio += p.sum_ratio;
        sum_ratio2 += p.sum_ratio2;
    }
    const double M = static_cast<double>(rep.samples);
    rep.mean_ratio = sum_ratio / M;
    const double var = (sum_ratio2 - M * rep.mean_ratio * rep.mean_ratio) / (M - 1.0);
    rep.se_ratio = std::sqrt(std::max(var, 0.0) / M);
    rep.tail_fraction = static_cast<double>(exceed) / M;
    rep.se_tail = std::sqrt(std::max(rep.tail_fraction * (1.0 - rep.tail_fraction), 0.0) / M);
    return rep;
}

LimitProcessMomentReport run_limit_process_experiment(const ExperimentConfig& cfg) {
    if (cfg.samples < 2) throw std::invalid_argument("experiment: samples must be >= 2");
    if (cfg.grid.empty()) throw std::invalid_argument("experiment: grid must be nonempty");
    const std::size_t ngrid = cfg.grid.size();

    auto partials = run_batched<GpAccum>(
        cfg.seed, cfg.samples, cfg.threads, [&](GpAccum& acc, long, RngStream& rng) {
            acc.ensure(ngrid);
            LimitProcessPath path = sample_limit_process(cfg.grid, rng);
            for (std::size_t a = 0; a < ngrid; ++a) {
                acc.sum_z[a] += path.values[a];
                acc.sum_z2[a] += path.values[a] * path.values[a];
            }
            for (std::size_t a = 0; a < ngrid; ++a) {
                for (std::size_t b = a; b < ngrid; ++b) {
                    acc.sum_zz[tri_index(a, b, ngrid)] += path.values[a] * path.values[b];
                }
            }
            ++acc.count;
        });

    LimitProcessMomentReport rep;
    rep.grid = cfg.grid;
    GpAccum total;
    total.ensure(ngrid);
    for (const auto& p : partials) {
        if (p.count == 0) continue;
        total.count += p.count;
        for (std::size_t a = 0; a < ngrid; ++a) {
            total.sum_z[a] += p.sum_z[a];
            total.sum_z2[a] += p.sum_z2[a];
        }
        for (std::size_t a = 0; a < total.sum_zz.size(); ++a) total.sum_zz[a] += p.sum_zz[a];
    }
    rep.samples = total.count;
    const double M = static_cast<double>(total.count);
    rep.mean.resize(ngrid);
    rep.var.resize(ngrid);
    rep.cov.assign(ngrid, std::vector<double>(ngrid, 0.0));
    rep.cov_se.assign(ngrid, std::vector<double>(ngrid, 0.0));
    for (std::size_t a = 0; a < ngrid; ++a) {
        rep.mean[a] = total.sum_z[a] / M;
        rep.var[a] = (total.sum_z2[a] - M * rep.mean[a] * rep.mean[a]) / (M - 1.0);
    }
    for (std::size_t a = 0; a < ngrid; ++a) {
        for (std::size_t b = a; b < ngrid; ++b) {
            const double cov =
                (total.sum_zz[tri_index(a, b, ngrid)] / M - rep.mean[a] * rep.mean[b]) * M / (M - 1.0);
            rep.cov[a][b] = cov;
            rep.cov[b][a] = cov;
            std::vector<double> per_batch;
            per_batch.reserve(partials.size());
            for (const auto& p : partials) {
                if (p.count < 2) continue;
                const double c = static_cast<double>(p.count);
                const double ma = p.sum_z[a] / c;
                const double mb = p.sum_z[b] / c;
                per_batch.push_back((p.sum_zz[tri_index(a, b, ngrid)] / c - ma * mb) * c / (c - 1.0));
            }
            const double se = batch_se(per_batch);
            rep.cov_se[a][b] = se;
            rep.cov_se[b][a] = se;
        }
    }
    return rep;
}

}  // namespace uncover
