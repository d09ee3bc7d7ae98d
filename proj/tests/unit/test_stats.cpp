#include <doctest.h>

#include <cmath>
#include <vector>

#include "uncover/asymptotics.hpp"
#include "uncover/exact.hpp"
#include "uncover/stats.hpp"

using namespace uncover;

TEST_SUITE("stats") {

TEST_CASE("chi-square test on a worked example") {
    // Two equiprobable cells, observed 60/40 of 100: statistic 4, dof 1.
    GofResult r = chi_square_test({60, 40}, {0.5, 0.5}, 100);
    CHECK_FALSE(r.degenerate);
    CHECK(r.statistic == doctest::Approx(4.0));
    CHECK(r.dof == 1);
    CHECK(r.p_value == doctest::Approx(0.0455002638963584).epsilon(1e-10));
    CHECK(r.bins.size() == 2);
}

TEST_CASE("chi-square test merges thin cells and detects the tail") {
    // Expected counts 1 each: cells merge until the expectation reaches 5.
    std::vector<long long> obs(20, 1);
    std::vector<double> probs(20, 0.05);
    GofResult r = chi_square_test(obs, probs, 20);
    CHECK(r.bins.size() == 4);
    for (const auto& [o, e] : r.bins) {
        CHECK(o == doctest::Approx(5.0));
        CHECK(e == doctest::Approx(5.0));
    }
    CHECK(r.statistic == doctest::Approx(0.0));

    // Unlisted mass goes into an implicit tail cell.
    GofResult tail = chi_square_test({50}, {0.5}, 100);
    CHECK(tail.bins.size() == 2);
    CHECK(tail.statistic == doctest::Approx(0.0));
    CHECK(tail.dof == 1);

    // A single merged bin cannot be tested.
    GofResult degen = chi_square_test({3}, {1.0}, 3);
    CHECK(degen.degenerate);
    CHECK(degen.p_value == 1.0);
}

TEST_CASE("chi-square test validates its input") {
    CHECK_THROWS_AS(chi_square_test({1, 2}, {0.5}, 3), std::invalid_argument);
    CHECK_THROWS_AS(chi_square_test({-1, 4}, {0.5, 0.5}, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(chi_square_test({1, 1}, {0.8, 0.4}, 2),
                    std::invalid_argument);  // probabilities exceed 1
    CHECK_THROWS_AS(chi_square_test({1, 1}, {0.5, -0.1}, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(chi_square_test({5, 6}, {0.5, 0.5}, 10),
                    std::invalid_argument);  // counts exceed total
    CHECK_THROWS_AS(chi_square_test({1, 1}, {0.5, 0.5}, 0),
                    std::invalid_argument);
}

TEST_CASE("total variation distance") {
    CHECK(total_variation({0.5, 0.5}, {0.5, 0.5}) == doctest::Approx(0.0));
    CHECK(total_variation({1.0, 0.0}, {0.0, 1.0}) == doctest::Approx(1.0));
    CHECK(total_variation({0.7, 0.3}, {0.4, 0.6}) == doctest::Approx(0.3));
    // unequal lengths align at zero
    CHECK(total_variation({1.0}, {0.5, 0.5}) == doctest::Approx(0.5));
    // truncating negligible mass barely moves the distance: both laws decay
    // geometrically, so everything beyond index 120 is below 1e-9
    std::vector<double> p, q;
    for (int m = 0; m < 400; ++m) {
        p.push_back(central_limit_pmf(0.5, m));
        q.push_back(central_limit_pmf(0.2, m));
    }
    std::vector<double> p_short(p.begin(), p.begin() + 120);
    std::vector<double> q_short(q.begin(), q.begin() + 120);
    CHECK(total_variation(p, q) ==
          doctest::Approx(total_variation(p_short, q_short)).epsilon(1e-3));
}

TEST_CASE("experiment configuration is validated") {
    ExperimentConfig cfg;
    cfg.n = 0;
    cfg.samples = 10;
    CHECK_THROWS_AS(run_edge_moment_experiment(cfg), std::invalid_argument);
    cfg.n = 50;
    cfg.samples = 0;
    CHECK_THROWS_AS(run_edge_moment_experiment(cfg), std::invalid_argument);
    cfg.samples = 10;
    cfg.grid = {1.5};
    CHECK_THROWS_AS(run_edge_moment_experiment(cfg), std::invalid_argument);
    cfg.grid = {0.5};
    cfg.k = 0;
    CHECK_THROWS_AS(run_cluster_experiment(cfg), std::invalid_argument);
    cfg.k = 10;
    cfg.alpha = 0.0;
    CHECK_THROWS_AS(run_largest_component_experiment(cfg),
                    std::invalid_argument);
}

TEST_CASE("batched runner is deterministic across thread counts") {
    ExperimentConfig cfg;
    cfg.n = 300;
    cfg.samples = 2000;
    cfg.seed = 71;
    cfg.grid = {0.25, 0.75};
    cfg.js = {100, 200};
    cfg.threads = 1;
    EdgeMomentReport serial = run_edge_moment_experiment(cfg);
    cfg.threads = 5;
    EdgeMomentReport threaded = run_edge_moment_experiment(cfg);
    CHECK(serial.mean_z == threaded.mean_z);
    CHECK(serial.var_z == threaded.var_z);
    CHECK(serial.cov_z == threaded.cov_z);
    for (std::size_t i = 0; i < serial.k_moments.size(); ++i) {
        CHECK(serial.k_moments[i].mean == threaded.k_moments[i].mean);
        CHECK(serial.k_moments[i].variance == threaded.k_moments[i].variance);
    }
    // and a different seed actually changes the result
    cfg.seed = 72;
    EdgeMomentReport other = run_edge_moment_experiment(cfg);
    CHECK(serial.mean_z != other.mean_z);
}

TEST_CASE("edge moments match the exact formulas") {
    ExperimentConfig cfg;
    cfg.n = 2000;
    cfg.samples = 20000;
    cfg.seed = 11;
    cfg.js = {500, 1000, 1500};
    cfg.grid = {0.5};
    cfg.thresholds = {2.0};
    EdgeMomentReport rep = run_edge_moment_experiment(cfg);
    REQUIRE(rep.k_moments.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        long j = cfg.js[i];
        double mean_exact = to_double(expected_edges(cfg.n, j));
        const MomentSummary& ms = rep.k_moments[i];
        INFO("j = ", j);
        CHECK(std::abs(ms.mean - mean_exact) < 4.0 * ms.se_mean);
    }
    double var_exact = to_double(variance_edges(cfg.n, 1000));
    CHECK(rep.k_moments[1].variance ==
          doctest::Approx(var_exact).epsilon(0.05));

    // Z(0.5) has exact mean -t/sqrt(n) and is asymptotically N(0, 0.125)
    double m = static_cast<double>(cfg.samples);
    CHECK(std::abs(rep.mean_z[0] + 0.5 / std::sqrt(2000.0)) <
          4.0 * std::sqrt(0.125 / m));
    CHECK(rep.var_z[0] == doctest::Approx(0.125).epsilon(0.05));
    CHECK(std::abs(rep.skew_z[0]) < 0.1);
    CHECK(std::abs(rep.exkurt_z[0]) < 0.2);
    // sup exceedances at threshold 2.0 are very rare at this size
    REQUIRE(rep.sup_exceed.size() == 1);
    CHECK(rep.sup_exceed[0] < cfg.samples / 100);
}

TEST_CASE("process covariance against the limit surface") {
    ExperimentConfig cfg;
    cfg.n = 1000;
    cfg.samples = 20000;
    cfg.seed = 13;
    cfg.grid = {0.3, 0.6};
    EdgeMomentReport rep = run_edge_moment_experiment(cfg);
    double cov = rep.cov_z[0][1];
    double se = rep.cov_z_se[0][1];
    CHECK(se > 0.0);
    CHECK(std::abs(cov - limit_covariance(0.3, 0.6)) < 5.0 * se + 0.01);

    // the same moments from the Gaussian limit sampler
    LimitProcessMomentReport lim = run_limit_process_experiment(cfg);
    CHECK(std::abs(lim.mean[0]) < 4.0 * std::sqrt(0.3 * 0.3 * 0.7 /
                                                  static_cast<double>(cfg.samples)));
    CHECK(std::abs(lim.cov[0][1] - limit_covariance(0.3, 0.6)) <
          5.0 * lim.cov_se[0][1] + 0.01);
    CHECK(lim.var[1] == doctest::Approx(0.6 * 0.6 * 0.4).epsilon(0.1));
}

TEST_CASE("cluster experiment matches the exact root-cluster law") {
    ExperimentConfig cfg;
    cfg.n = 60;
    cfg.k = 30;
    cfg.samples = 20000;
    cfg.seed = 17;
    cfg.collect_components = true;
    ClusterExperimentReport rep = run_cluster_experiment(cfg);
    REQUIRE(rep.root_cluster_hist.size() ==
            static_cast<std::size_t>(cfg.k + 1));

    std::vector<double> exact;
    for (int m = 0; m <= cfg.k; ++m) {
        exact.push_back(to_double(root_cluster_pmf(cfg.n, cfg.k, m)));
    }
    std::vector<double> empirical;
    for (long c : rep.root_cluster_hist) {
        empirical.push_back(static_cast<double>(c) /
                            static_cast<double>(rep.samples));
    }
    CHECK(total_variation(empirical, exact) < 0.02);

    GofResult gof = chi_square_test(
        std::vector<long long>(rep.root_cluster_hist.begin(),
                               rep.root_cluster_hist.end()),
        exact, rep.samples);
    CHECK(gof.p_value > 1e-3);

    double mean_exact = to_double(root_cluster_expectation(cfg.n, cfg.k)) /
                        static_cast<double>(cfg.n);
    CHECK(std::abs(rep.mean_root_ratio - mean_exact) <
          4.0 * rep.se_root_ratio);

    // mean component counts by size against the exact expectation
    for (int r = 1; r <= 5; ++r) {
        double exact_count = to_double(expected_components(cfg.n, cfg.k, r));
        double got = rep.mean_count_by_size[static_cast<std::size_t>(r)];
        // per-size counts fluctuate; 20000 samples keep 1% accuracy
        INFO("r = ", r);
        CHECK(got == doctest::Approx(exact_count).epsilon(0.05));
    }

    // largest-cluster histogram sums to the sample count
    long total = 0;
    for (long c : rep.largest_hist) total += c;
    CHECK(total == rep.samples);
}

TEST_CASE("largest component experiment basic behavior") {
    ExperimentConfig cfg;
    cfg.n = 400;
    cfg.k = 396;  // only 4 covered vertices: one giant piece survives
    cfg.samples = 2000;
    cfg.seed = 19;
    cfg.alpha = 0.5;
    LargestComponentReport rep = run_largest_component_experiment(cfg);
    CHECK(rep.mean_ratio > 0.5);
    CHECK(rep.mean_ratio <= 1.0);
    CHECK(rep.se_ratio > 0.0);
    CHECK(rep.tail_fraction >= 0.0);
    CHECK(rep.tail_fraction <= 1.0);
    // with alpha at the uncovered fraction the tail event is impossible
    cfg.alpha = 1.0;
    LargestComponentReport top = run_largest_component_experiment(cfg);
    CHECK(top.tail_fraction == 0.0);

    // reproducibility
    cfg.alpha = 0.5;
    LargestComponentReport again = run_largest_component_experiment(cfg);
    CHECK(again.mean_ratio == rep.mean_ratio);
    CHECK(again.tail_fraction == rep.tail_fraction);
}

TEST_CASE("thread resolution") {
    CHECK(resolve_threads(3) == 3);
    CHECK(resolve_threads(0) >= 1);
    CHECK_THROWS_AS(resolve_threads(-1), std::invalid_argument);
}

}  // TEST_SUITE
