#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "uncover/asymptotics.hpp"
#include "uncover/errors.hpp"
#include "uncover/exact.hpp"
#include "uncover/oracle.hpp"
#include "uncover/rng.hpp"
#include "uncover/serialize.hpp"
#include "uncover/stats.hpp"
#include "uncover/tree.hpp"
#include "uncover/uncover.hpp"

namespace {

using nlohmann::json;

// Writes a finished document to the requested destination. Output goes to
// stdout unless --output-path was given.
void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot open output file: " + path);
    }
    out << content;
    if (!out) {
        throw std::invalid_argument("failed writing output file: " + path);
    }
}

// The TREE_UNCOVER_THREADS environment variable overrides --threads so batch
// jobs can pin parallelism without editing every invocation.
int effective_threads(int cli_threads) {
    const char* env = std::getenv("TREE_UNCOVER_THREADS");
    if (env != nullptr && *env != '\0') {
        char* end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end == nullptr || *end != '\0' || value < 0) {
            throw std::invalid_argument(
                "TREE_UNCOVER_THREADS must be a non-negative integer");
        }
        return static_cast<int>(value);
    }
    return cli_threads;
}

std::string rational_string(const uncover::BigRat& value) {
    return uncover::to_fraction_string(value);
}

// ---------------------------------------------------------------------------
// sample-tree
// ---------------------------------------------------------------------------

struct SampleTreeOptions {
    int n = 0;
    bool rooted = false;
    std::uint64_t seed = 42;
    std::string format = "csv";
    std::string output_path;
};

void run_sample_tree(const SampleTreeOptions& opt) {
    uncover::RngStream rng(opt.seed, 0);
    uncover::LabeledTree tree = uncover::sample_uniform_tree(opt.n, rng);
    std::optional<int> root;
    if (opt.rooted) {
        root = static_cast<int>(rng.uniform_below(
                   static_cast<std::uint64_t>(opt.n))) +
               1;
    }
    if (opt.format == "json") {
        emit(opt.output_path, uncover::tree_to_json(tree, root) + "\n");
        return;
    }
    std::string out = "u,v\n";
    uncover::LabeledTree canon = tree;
    uncover::canonicalize(canon);
    for (const auto& e : canon.edges) {
        out += std::to_string(e.first) + "," + std::to_string(e.second) + "\n";
    }
    emit(opt.output_path, out);
}

// ---------------------------------------------------------------------------
// uncover
// ---------------------------------------------------------------------------

struct UncoverOptions {
    int n = 0;
    int k = -1;
    int root = 0;
    std::uint64_t seed = 42;
    std::string input_path;
    std::string format = "csv";
    std::string output_path;
};

void run_uncover(const UncoverOptions& opt) {
    uncover::LabeledTree tree;
    std::optional<int> root;
    if (!opt.input_path.empty()) {
        std::ifstream in(opt.input_path, std::ios::binary);
        if (!in) {
            throw std::invalid_argument("cannot open input file: " +
                                        opt.input_path);
        }
        std::stringstream buf;
        buf << in.rdbuf();
        uncover::ParsedTree parsed = uncover::tree_from_json(buf.str());
        tree = std::move(parsed.tree);
        root = parsed.root;
    } else {
        if (opt.n < 1) {
            throw std::invalid_argument("either --input or --n is required");
        }
        uncover::RngStream rng(opt.seed, 0);
        tree = uncover::sample_uniform_tree(opt.n, rng);
    }
    if (opt.root > 0) {
        root = opt.root;
    }

    if (opt.k >= 0) {
        uncover::ClusterReport report =
            uncover::cluster_report(tree, opt.k, root);
        if (opt.format == "json") {
            emit(opt.output_path,
                 uncover::cluster_report_to_json(report) + "\n");
            return;
        }
        std::string sizes;
        for (std::size_t i = 0; i < report.sizes.size(); ++i) {
            if (i > 0) sizes += ';';
            sizes += std::to_string(report.sizes[i]);
        }
        std::string out = "field,value\n";
        out += uncover::csv_row({"k", std::to_string(report.k)});
        out += uncover::csv_row({"largest", std::to_string(report.largest)});
        out += uncover::csv_row(
            {"root_cluster", std::to_string(report.root_cluster)});
        out += uncover::csv_row({"sizes", sizes});
        emit(opt.output_path, out);
        return;
    }

    uncover::UncoverPath path = uncover::uncover_path(tree);
    if (opt.format == "json") {
        emit(opt.output_path, uncover::path_to_json(path) + "\n");
    } else {
        emit(opt.output_path, uncover::path_to_csv(path));
    }
}

// ---------------------------------------------------------------------------
// exact
// ---------------------------------------------------------------------------

struct ExactOptions {
    std::string formula;
    int n = 0;
    int k = -1;
    int m = -1;
    int r = -1;
    int j = -1;
    std::vector<int> js;
    std::vector<int> as;
    std::vector<int> full;
    std::vector<long> sizes;
    std::string output_path;
};

void require_set(bool ok, const std::string& flag, const std::string& formula) {
    if (!ok) {
        throw std::invalid_argument(flag + " is required for " + formula);
    }
}

void run_exact(const ExactOptions& opt) {
    std::string out;
    const std::string& f = opt.formula;
    if (f == "expected-edges") {
        require_set(opt.n > 0, "--n", f);
        require_set(opt.j >= 0, "--j", f);
        out = rational_string(uncover::expected_edges(opt.n, opt.j));
    } else if (f == "variance-edges") {
        require_set(opt.n > 0, "--n", f);
        require_set(opt.k >= 0, "--k", f);
        out = rational_string(uncover::variance_edges(opt.n, opt.k));
    } else if (f == "partial-sequence-count") {
        require_set(opt.n > 0, "--n", f);
        require_set(!opt.js.empty(), "--js", f);
        require_set(!opt.as.empty(), "--as", f);
        uncover::SequenceConstraint c{opt.n, opt.js, opt.as};
        out = uncover::count_trees_partial_sequence(c).str();
    } else if (f == "full-sequence-count") {
        require_set(!opt.full.empty(), "--a", f);
        out = uncover::count_trees_full_sequence(opt.full).str();
    } else if (f == "cluster-count") {
        require_set(opt.n > 0, "--n", f);
        require_set(opt.k >= 0, "--k", f);
        require_set(!opt.sizes.empty(), "--sizes", f);
        out = uncover::count_trees_with_clusters(opt.n, opt.k, opt.sizes).str();
    } else if (f == "root-cluster-pmf") {
        require_set(opt.n > 0, "--n", f);
        require_set(opt.k >= 0, "--k", f);
        require_set(opt.m >= 0, "--m", f);
        out = rational_string(uncover::root_cluster_pmf(opt.n, opt.k, opt.m));
    } else if (f == "root-cluster-count") {
        require_set(opt.n > 0, "--n", f);
        require_set(opt.k >= 0, "--k", f);
        require_set(opt.m >= 0, "--m", f);
        out = uncover::count_rooted_trees_root_cluster(opt.n, opt.k, opt.m)
                  .str();
    } else if (f == "root-cluster-mean") {
        require_set(opt.n > 0, "--n", f);
        require_set(opt.k >= 0, "--k", f);
        out = rational_string(uncover::root_cluster_expectation(opt.n, opt.k));
    } else if (f == "root-cluster-mean-integral") {
        require_set(opt.n > 0, "--n", f);
        require_set(opt.k >= 0, "--k", f);
        out = uncover::format_double(
            uncover::root_cluster_expectation_integral(opt.n, opt.k));
    } else if (f == "uncovered-cluster-pmf") {
        require_set(opt.n > 0, "--n", f);
        require_set(opt.k >= 0, "--k", f);
        require_set(opt.m >= 0, "--m", f);
        out = rational_string(
            uncover::uncovered_vertex_cluster_pmf(opt.n, opt.k, opt.m));
    } else if (f == "expected-components") {
        require_set(opt.n > 0, "--n", f);
        require_set(opt.k >= 0, "--k", f);
        require_set(opt.r > 0, "--r", f);
        out = rational_string(
            uncover::expected_components(opt.n, opt.k, opt.r));
    } else if (f == "abel-check") {
        require_set(opt.n > 0, "--n", f);
        require_set(opt.k >= 0, "--k", f);
        out = uncover::abel_identity_check(opt.n, opt.k) ? "equal" : "unequal";
    } else {
        throw std::invalid_argument("unknown formula: " + f);
    }
    emit(opt.output_path, out + "\n");
}

// ---------------------------------------------------------------------------
// limits
// ---------------------------------------------------------------------------

struct LimitsOptions {
    std::string regime;
    double alpha = -1.0;
    double c = -1.0;
    long long d = -1;
    long long m_max = 50;
    std::vector<double> grid;
    std::string format = "csv";
    std::string output_path;
};

void emit_table(const LimitsOptions& opt, const std::string& key_name,
                const std::string& value_name,
                const std::vector<double>& keys,
                const std::vector<double>& values) {
    if (opt.format == "json") {
        json doc;
        doc["regime"] = opt.regime;
        doc[key_name] = keys;
        doc[value_name] = values;
        emit(opt.output_path, doc.dump() + "\n");
        return;
    }
    std::string out = key_name + "," + value_name + "\n";
    for (std::size_t i = 0; i < keys.size(); ++i) {
        out += uncover::csv_row({uncover::format_double(keys[i]),
                                 uncover::format_double(values[i])});
    }
    emit(opt.output_path, out);
}

void run_limits(const LimitsOptions& opt) {
    const std::string& r = opt.regime;
    if (r == "central") {
        require_set(opt.alpha >= 0, "--alpha", r);
        std::vector<double> keys;
        std::vector<double> values;
        for (long long m = 0; m <= opt.m_max; ++m) {
            keys.push_back(static_cast<double>(m));
            values.push_back(uncover::central_limit_pmf(opt.alpha, m));
        }
        emit_table(opt, "m", "pmf", keys, values);
    } else if (r == "supercritical-fixed") {
        require_set(opt.d >= 1, "--d", r);
        std::vector<double> keys;
        std::vector<double> values;
        for (long long j = 0; j <= opt.m_max; ++j) {
            keys.push_back(static_cast<double>(j));
            values.push_back(
                uncover::borel_type_pmf(static_cast<int>(opt.d), j));
        }
        emit_table(opt, "j", "pmf", keys, values);
    } else if (r == "subcritical-gamma" || r == "critical" ||
               r == "supercritical-cont") {
        require_set(!opt.grid.empty(), "--grid", r);
        uncover::LimitLaw law = uncover::LimitLaw::subcritical_gamma();
        if (r == "critical") {
            require_set(opt.c > 0, "--c", r);
            law = uncover::LimitLaw::critical(opt.c);
        } else if (r == "supercritical-cont") {
            law = uncover::LimitLaw::supercritical_cont();
        }
        std::vector<double> values;
        for (double x : opt.grid) {
            values.push_back(uncover::limit_density(law, x));
        }
        emit_table(opt, "x", "density", opt.grid, values);
    } else if (r == "kappa") {
        require_set(!opt.grid.empty(), "--grid", r);
        std::vector<double> values;
        for (double c : opt.grid) {
            values.push_back(uncover::kappa(c));
        }
        emit_table(opt, "c", "kappa", opt.grid, values);
    } else if (r == "tail") {
        require_set(opt.c > 0, "--c", r);
        require_set(!opt.grid.empty(), "--grid", r);
        std::vector<double> values;
        for (double alpha : opt.grid) {
            values.push_back(
                uncover::largest_component_tail_limit(opt.c, alpha));
        }
        emit_table(opt, "alpha", "limit", opt.grid, values);
    } else {
        throw std::invalid_argument("unknown regime: " + r);
    }
}

// ---------------------------------------------------------------------------
// oracle-verify
// ---------------------------------------------------------------------------

struct OracleVerifyOptions {
    int n = 0;
    std::string suite = "all";
    std::string output_path;
};

struct SuiteResult {
    std::string name;
    bool pass = true;
    long long cells = 0;
    std::string counterexample;

    void record(bool ok, const std::string& where) {
        ++cells;
        if (!ok && pass) {
            pass = false;
            counterexample = where;
        }
    }
};

json suite_to_json(const SuiteResult& s) {
    json doc;
    doc["name"] = s.name;
    doc["pass"] = s.pass;
    doc["cells"] = s.cells;
    if (s.counterexample.empty()) {
        doc["counterexample"] = nullptr;
    } else {
        doc["counterexample"] = s.counterexample;
    }
    return doc;
}

// Enumerates every admissible full edge-count sequence (a_1, ..., a_n) by
// extending prefixes under a_i <= a_{i+1} <= i.
void admissible_full_sequences(int n, std::vector<int>& prefix,
                               const std::function<void(const std::vector<int>&)>& visit) {
    int i = static_cast<int>(prefix.size());
    if (i == n) {
        if (prefix.back() == n - 1) visit(prefix);
        return;
    }
    int low = prefix.empty() ? 0 : prefix.back();
    for (int a = low; a <= i; ++a) {
        prefix.push_back(a);
        admissible_full_sequences(n, prefix, visit);
        prefix.pop_back();
    }
}

SuiteResult verify_partial_sequences(int n) {
    SuiteResult result;
    result.name = "partial-sequence-count";
    if (n < 3) return result;
    for (int j1 = 2; j1 < n; ++j1) {
        uncover::EnumerationReport report =
            uncover::oracle_uncover_distribution(n, {j1});
        for (int a1 = 0; a1 < j1; ++a1) {
            uncover::BigInt expected = uncover::count_trees_partial_sequence(
                {n, {j1}, {a1}});
            auto it = report.counts.find({a1});
            uncover::BigInt observed =
                it == report.counts.end() ? uncover::BigInt(0) : it->second;
            result.record(expected == observed,
                          "n=" + std::to_string(n) + " j=" +
                              std::to_string(j1) + " a=" + std::to_string(a1) +
                              " formula=" + expected.str() + " oracle=" +
                              observed.str());
        }
        for (int j2 = j1 + 1; j2 < n; ++j2) {
            uncover::EnumerationReport pair =
                uncover::oracle_uncover_distribution(n, {j1, j2});
            for (int a1 = 0; a1 < j1; ++a1) {
                for (int a2 = a1; a2 < j2; ++a2) {
                    uncover::BigInt expected =
                        uncover::count_trees_partial_sequence(
                            {n, {j1, j2}, {a1, a2}});
                    auto it = pair.counts.find({a1, a2});
                    uncover::BigInt observed = it == pair.counts.end()
                                                   ? uncover::BigInt(0)
                                                   : it->second;
                    result.record(
                        expected == observed,
                        "n=" + std::to_string(n) + " js=(" +
                            std::to_string(j1) + "," + std::to_string(j2) +
                            ") as=(" + std::to_string(a1) + "," +
                            std::to_string(a2) + ") formula=" +
                            expected.str() + " oracle=" + observed.str());
                }
            }
        }
    }
    return result;
}

SuiteResult verify_full_sequences(int n) {
    SuiteResult result;
    result.name = "full-sequence-count";
    if (n < 2) return result;
    uncover::EnumerationReport report = uncover::oracle_full_sequences(n);
    std::vector<int> prefix;
    admissible_full_sequences(n, prefix, [&](const std::vector<int>& a) {
        uncover::BigInt expected = uncover::count_trees_full_sequence(a);
        std::vector<int> interior(a.begin() + 1, a.end() - 1);
        auto it = report.counts.find(interior);
        uncover::BigInt observed =
            it == report.counts.end() ? uncover::BigInt(0) : it->second;
        std::string key = "a=(";
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i > 0) key += ",";
            key += std::to_string(a[i]);
        }
        key += ")";
        result.record(expected == observed,
                      key + " formula=" + expected.str() + " oracle=" +
                          observed.str());
    });
    return result;
}

SuiteResult verify_root_clusters(int n) {
    SuiteResult result;
    result.name = "root-cluster-law";
    uncover::BigInt rooted =
        uncover::int_pow(uncover::BigInt(n), static_cast<unsigned long>(n - 1));
    for (int k = 1; k <= n; ++k) {
        uncover::EnumerationReport report = uncover::oracle_root_cluster(n, k);
        for (int m = 0; m <= k; ++m) {
            auto it = report.counts.find({m});
            uncover::BigInt observed =
                it == report.counts.end() ? uncover::BigInt(0) : it->second;
            uncover::BigRat pmf = uncover::root_cluster_pmf(n, k, m);
            uncover::BigRat oracle_pmf(observed, rooted);
            result.record(pmf == oracle_pmf,
                          "pmf n=" + std::to_string(n) + " k=" +
                              std::to_string(k) + " m=" + std::to_string(m) +
                              " formula=" + rational_string(pmf) + " oracle=" +
                              rational_string(oracle_pmf));
            uncover::BigInt triples =
                uncover::count_rooted_trees_root_cluster(n, k, m);
            uncover::BigInt oracle_triples = observed * uncover::binomial(n, k);
            result.record(triples == oracle_triples,
                          "count n=" + std::to_string(n) + " k=" +
                              std::to_string(k) + " m=" + std::to_string(m) +
                              " formula=" + triples.str() + " oracle=" +
                              oracle_triples.str());
        }
        uncover::BigRat mean(0);
        for (int m = 1; m <= k; ++m) {
            auto it = report.counts.find({m});
            if (it != report.counts.end()) {
                mean += uncover::BigRat(it->second * m, rooted);
            }
        }
        result.record(mean == uncover::root_cluster_expectation(n, k),
                      "mean n=" + std::to_string(n) + " k=" +
                          std::to_string(k));
    }
    return result;
}

SuiteResult verify_component_counts(int n) {
    SuiteResult result;
    result.name = "component-counts";
    for (int k = 1; k <= n; ++k) {
        for (int r = 1; r <= k; ++r) {
            uncover::BigRat expected = uncover::expected_components(n, k, r);
            uncover::BigRat observed =
                uncover::oracle_expected_components(n, k, r);
            result.record(expected == observed,
                          "mean-count n=" + std::to_string(n) + " k=" +
                              std::to_string(k) + " r=" + std::to_string(r));
            uncover::BigInt count1 =
                uncover::count_trees_with_clusters(n, k, {r});
            uncover::BigInt oracle1 =
                uncover::oracle_fixed_cluster_count(n, k, {r});
            result.record(count1 == oracle1,
                          "one-block n=" + std::to_string(n) + " k=" +
                              std::to_string(k) + " r=" + std::to_string(r) +
                              " formula=" + count1.str() + " oracle=" +
                              oracle1.str());
            for (int r2 = 1; r + r2 <= k; ++r2) {
                uncover::BigInt count2 =
                    uncover::count_trees_with_clusters(n, k, {r, r2});
                uncover::BigInt oracle2 =
                    uncover::oracle_fixed_cluster_count(n, k, {r, r2});
                result.record(count2 == oracle2,
                              "two-block n=" + std::to_string(n) + " k=" +
                                  std::to_string(k) + " r=(" +
                                  std::to_string(r) + "," +
                                  std::to_string(r2) + ") formula=" +
                                  count2.str() + " oracle=" + oracle2.str());
            }
        }
    }
    return result;
}

void run_oracle_verify(const OracleVerifyOptions& opt) {
    if (opt.n < 2) {
        throw std::invalid_argument("--n must be at least 2");
    }
    bool counts = opt.suite == "all" || opt.suite == "counts";
    bool clusters = opt.suite == "all" || opt.suite == "clusters";
    std::vector<SuiteResult> suites;
    if (counts) {
        if (opt.n > 8) {
            throw std::invalid_argument(
                "counts suite enumerates all trees and requires n <= 8");
        }
        suites.push_back(verify_partial_sequences(opt.n));
        suites.push_back(verify_full_sequences(opt.n));
    }
    if (clusters) {
        if (opt.n > 7) {
            throw std::invalid_argument(
                "clusters suite enumerates rooted trees and requires n <= 7");
        }
        suites.push_back(verify_root_clusters(opt.n));
        suites.push_back(verify_component_counts(opt.n));
    }
    json doc;
    doc["n"] = opt.n;
    doc["suite"] = opt.suite;
    bool all_pass = true;
    doc["results"] = json::array();
    for (const auto& s : suites) {
        doc["results"].push_back(suite_to_json(s));
        all_pass = all_pass && s.pass;
    }
    doc["pass"] = all_pass;
    emit(opt.output_path, doc.dump(2) + "\n");
    if (!all_pass) {
        std::exit(1);
    }
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimulateOptions {
    std::string mode;
    int n = 0;
    int k = -1;
    long long samples = 10000;
    std::uint64_t seed = 42;
    int threads = 0;
    double alpha = 0.5;
    std::vector<double> grid;
    std::string format = "csv";
    std::string output_path;
};

void run_simulate(const SimulateOptions& opt) {
    uncover::ExperimentConfig cfg;
    cfg.n = opt.n;
    cfg.samples = opt.samples;
    cfg.seed = opt.seed;
    cfg.threads = effective_threads(opt.threads);

    if (opt.mode == "edges") {
        cfg.grid = opt.grid.empty()
                       ? std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5,
                                             0.6, 0.7, 0.8, 0.9}
                       : opt.grid;
        uncover::EdgeMomentReport report =
            uncover::run_edge_moment_experiment(cfg);
        if (opt.format == "json") {
            json doc;
            doc["n"] = cfg.n;
            doc["samples"] = report.samples;
            doc["t"] = cfg.grid;
            doc["mean_Z"] = report.mean_z;
            doc["var_Z"] = report.var_z;
            emit(opt.output_path, doc.dump() + "\n");
            return;
        }
        std::string out = "t,mean_Z,var_Z\n";
        for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
            out += uncover::csv_row({uncover::format_double(cfg.grid[i]),
                                     uncover::format_double(report.mean_z[i]),
                                     uncover::format_double(report.var_z[i])});
        }
        emit(opt.output_path, out);
    } else if (opt.mode == "clusters") {
        if (opt.k < 1) {
            throw std::invalid_argument("--k is required for clusters");
        }
        cfg.k = opt.k;
        uncover::ClusterExperimentReport report =
            uncover::run_cluster_experiment(cfg);
        if (opt.format == "json") {
            json doc;
            doc["n"] = cfg.n;
            doc["k"] = cfg.k;
            doc["samples"] = report.samples;
            doc["root_cluster_hist"] = report.root_cluster_hist;
            doc["mean_root_ratio"] = report.mean_root_ratio;
            doc["se_root_ratio"] = report.se_root_ratio;
            emit(opt.output_path, doc.dump() + "\n");
            return;
        }
        std::string out = "m,count,frequency\n";
        double total = static_cast<double>(report.samples);
        for (std::size_t m = 0; m < report.root_cluster_hist.size(); ++m) {
            long long count = report.root_cluster_hist[m];
            if (count == 0) continue;
            out += uncover::csv_row(
                {std::to_string(m), std::to_string(count),
                 uncover::format_double(static_cast<double>(count) / total)});
        }
        emit(opt.output_path, out);
    } else if (opt.mode == "largest") {
        if (opt.k < 1) {
            throw std::invalid_argument("--k is required for largest");
        }
        cfg.k = opt.k;
        cfg.alpha = opt.alpha;
        uncover::LargestComponentReport report =
            uncover::run_largest_component_experiment(cfg);
        if (opt.format == "json") {
            json doc;
            doc["n"] = cfg.n;
            doc["k"] = cfg.k;
            doc["alpha"] = cfg.alpha;
            doc["samples"] = report.samples;
            doc["mean_ratio"] = report.mean_ratio;
            doc["se_ratio"] = report.se_ratio;
            doc["tail_fraction"] = report.tail_fraction;
            doc["se_tail"] = report.se_tail;
            emit(opt.output_path, doc.dump() + "\n");
            return;
        }
        std::string out = "metric,value\n";
        out += uncover::csv_row(
            {"samples", std::to_string(report.samples)});
        out += uncover::csv_row(
            {"mean_ratio", uncover::format_double(report.mean_ratio)});
        out += uncover::csv_row(
            {"se_ratio", uncover::format_double(report.se_ratio)});
        out += uncover::csv_row(
            {"tail_fraction", uncover::format_double(report.tail_fraction)});
        out += uncover::csv_row(
            {"se_tail", uncover::format_double(report.se_tail)});
        emit(opt.output_path, out);
    } else {
        throw std::invalid_argument("unknown simulate mode: " + opt.mode);
    }
}

// ---------------------------------------------------------------------------
// plotdata
// ---------------------------------------------------------------------------

struct PlotdataOptions {
    std::string figure;
    int n = 0;
    int k = -1;
    std::uint64_t seed = 42;
    std::string output_path;
};

void run_plotdata(const PlotdataOptions& opt) {
    uncover::RngStream rng(opt.seed, 0);
    if (opt.figure == "figure1") {
        // Snapshot of one tree: each edge is annotated with the step at which
        // it appears, which is the larger of its endpoint labels.
        uncover::LabeledTree tree = uncover::sample_uniform_tree(opt.n, rng);
        uncover::canonicalize(tree);
        std::string out = "u,v,step\n";
        for (const auto& e : tree.edges) {
            int step = std::max(e.first, e.second);
            out += uncover::csv_row({std::to_string(e.first),
                                     std::to_string(e.second),
                                     std::to_string(step)});
        }
        emit(opt.output_path, out);
    } else if (opt.figure == "figure2") {
        uncover::LabeledTree tree = uncover::sample_uniform_tree(opt.n, rng);
        uncover::UncoverPath path = uncover::uncover_path(tree);
        std::string out = "j,edges,components\n";
        for (int j = 0; j <= path.n; ++j) {
            out += uncover::csv_row({std::to_string(j),
                                     std::to_string(path.k[j]),
                                     std::to_string(j - path.k[j])});
        }
        emit(opt.output_path, out);
    } else if (opt.figure == "figure3") {
        uncover::LabeledTree tree = uncover::sample_uniform_tree(opt.n, rng);
        uncover::UncoverPath path = uncover::uncover_path(tree);
        double n = static_cast<double>(path.n);
        std::string out = "t,scaled_K,Z\n";
        for (int j = 0; j <= path.n; ++j) {
            double t = static_cast<double>(j) / n;
            double scaled = static_cast<double>(path.k[j]) / n;
            double z = (static_cast<double>(path.k[j]) -
                        static_cast<double>(j) * j / n) /
                       std::sqrt(n);
            out += uncover::csv_row({uncover::format_double(t),
                                     uncover::format_double(scaled),
                                     uncover::format_double(z)});
        }
        emit(opt.output_path, out);
    } else {
        throw std::invalid_argument("unknown figure: " + opt.figure);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Vertex-uncover processes on uniform random labeled trees: "
        "samplers, exact distributions, limit laws, and Monte Carlo "
        "experiments."};
    app.require_subcommand(1);

    SampleTreeOptions sample_opt;
    CLI::App* sample = app.add_subcommand(
        "sample-tree", "Sample a uniform labeled tree");
    sample->add_option("--n", sample_opt.n, "Number of vertices")
        ->required()
        ->check(CLI::PositiveNumber);
    sample->add_flag("--rooted", sample_opt.rooted,
                     "Also sample a uniform root (json output only)");
    sample->add_option("--seed", sample_opt.seed, "RNG seed")
        ->capture_default_str();
    sample->add_option("--format", sample_opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sample->add_option("--output-path", sample_opt.output_path,
                       "Write output to this file instead of stdout");

    UncoverOptions uncover_opt;
    CLI::App* uncov = app.add_subcommand(
        "uncover",
        "Run the uncover process on a tree (sampled or read from a file)");
    uncov->add_option("--n", uncover_opt.n,
                      "Sample a tree with this many vertices")
        ->check(CLI::PositiveNumber);
    uncov->add_option("--input", uncover_opt.input_path,
                      "Read the tree from this JSON file");
    uncov->add_option("--k", uncover_opt.k,
                      "Stop after k uncovered vertices and report clusters")
        ->check(CLI::NonNegativeNumber);
    uncov->add_option("--root", uncover_opt.root,
                      "Root vertex for the cluster report")
        ->check(CLI::PositiveNumber);
    uncov->add_option("--seed", uncover_opt.seed, "RNG seed")
        ->capture_default_str();
    uncov->add_option("--format", uncover_opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    uncov->add_option("--output-path", uncover_opt.output_path,
                      "Write output to this file instead of stdout");

    ExactOptions exact_opt;
    CLI::App* exact = app.add_subcommand(
        "exact", "Evaluate an exact finite-n formula (rational output)");
    exact
        ->add_option("formula", exact_opt.formula,
                     "One of: expected-edges, variance-edges, "
                     "partial-sequence-count, full-sequence-count, "
                     "cluster-count, root-cluster-pmf, root-cluster-count, "
                     "root-cluster-mean, root-cluster-mean-integral, "
                     "uncovered-cluster-pmf, expected-components, abel-check")
        ->required();
    exact->add_option("--n", exact_opt.n, "Number of vertices");
    exact->add_option("--k", exact_opt.k, "Number of uncovered vertices");
    exact->add_option("--m", exact_opt.m, "Cluster size");
    exact->add_option("--r", exact_opt.r, "Component size");
    exact->add_option("--j", exact_opt.j, "Step index");
    exact->add_option("--js", exact_opt.js, "Observed step indices")
        ->delimiter(',');
    exact->add_option("--as", exact_opt.as, "Observed edge counts")
        ->delimiter(',');
    exact->add_option("--a", exact_opt.full,
                      "Full edge-count sequence a_1,...,a_n")
        ->delimiter(',');
    exact->add_option("--sizes", exact_opt.sizes,
                      "Prescribed cluster sizes r_1,...,r_l")
        ->delimiter(',');
    exact->add_option("--output-path", exact_opt.output_path,
                      "Write output to this file instead of stdout");

    LimitsOptions limits_opt;
    CLI::App* limits = app.add_subcommand(
        "limits", "Evaluate limit laws on a grid");
    limits
        ->add_option("regime", limits_opt.regime,
                     "One of: central, subcritical-gamma, critical, "
                     "supercritical-cont, supercritical-fixed, kappa, tail")
        ->required();
    limits->add_option("--alpha", limits_opt.alpha,
                       "Uncovered fraction parameter in (0,1)");
    limits->add_option("--c", limits_opt.c, "Critical window parameter");
    limits->add_option("--d", limits_opt.d, "Fixed covered-count parameter");
    limits->add_option("--m-max", limits_opt.m_max,
                       "Largest support point for discrete laws")
        ->capture_default_str();
    limits->add_option("--grid", limits_opt.grid, "Evaluation points")
        ->delimiter(',');
    limits->add_option("--format", limits_opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    limits->add_option("--output-path", limits_opt.output_path,
                       "Write output to this file instead of stdout");

    OracleVerifyOptions oracle_opt;
    CLI::App* oracle = app.add_subcommand(
        "oracle-verify",
        "Check every exact formula against brute-force tree enumeration");
    oracle->add_option("--n", oracle_opt.n, "Number of vertices")
        ->required()
        ->check(CLI::PositiveNumber);
    oracle->add_option("--suite", oracle_opt.suite, "Which checks to run")
        ->check(CLI::IsMember({"all", "counts", "clusters"}))
        ->capture_default_str();
    oracle->add_option("--output-path", oracle_opt.output_path,
                       "Write output to this file instead of stdout");

    SimulateOptions sim_opt;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Run a Monte Carlo experiment");
    simulate
        ->add_option("mode", sim_opt.mode,
                     "One of: edges, clusters, largest")
        ->required()
        ->check(CLI::IsMember({"edges", "clusters", "largest"}));
    simulate->add_option("--n", sim_opt.n, "Number of vertices")
        ->required()
        ->check(CLI::PositiveNumber);
    simulate->add_option("--k", sim_opt.k, "Number of uncovered vertices");
    simulate->add_option("--samples", sim_opt.samples, "Replication count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate->add_option("--seed", sim_opt.seed, "RNG seed")
        ->capture_default_str();
    simulate
        ->add_option("--threads", sim_opt.threads,
                     "Worker threads (0 = hardware concurrency; the "
                     "TREE_UNCOVER_THREADS environment variable overrides)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    simulate->add_option("--alpha", sim_opt.alpha,
                         "Largest-component threshold fraction")
        ->capture_default_str();
    simulate->add_option("--grid", sim_opt.grid, "Time grid for edges mode")
        ->delimiter(',');
    simulate->add_option("--format", sim_opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    simulate->add_option("--output-path", sim_opt.output_path,
                         "Write output to this file instead of stdout");

    PlotdataOptions plot_opt;
    CLI::App* plotdata = app.add_subcommand(
        "plotdata", "Emit CSV data for the standard figures");
    plotdata
        ->add_option("figure", plot_opt.figure,
                     "One of: figure1, figure2, figure3")
        ->required()
        ->check(CLI::IsMember({"figure1", "figure2", "figure3"}));
    plotdata->add_option("--n", plot_opt.n, "Number of vertices")
        ->required()
        ->check(CLI::PositiveNumber);
    plotdata->add_option("--seed", plot_opt.seed, "RNG seed")
        ->capture_default_str();
    plotdata->add_option("--output-path", plot_opt.output_path,
                         "Write output to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*sample) run_sample_tree(sample_opt);
        if (*uncov) run_uncover(uncover_opt);
        if (*exact) run_exact(exact_opt);
        if (*limits) run_limits(limits_opt);
        if (*oracle) run_oracle_verify(oracle_opt);
        if (*simulate) run_simulate(sim_opt);
        if (*plotdata) run_plotdata(plot_opt);
    } catch (const uncover::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
