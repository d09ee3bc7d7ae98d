#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "uncover/exact.hpp"
#include "uncover/rng.hpp"
#include "uncover/tree.hpp"
#include "uncover/uncover.hpp"

using namespace uncover;

namespace {

// Star centered at 1 and the path 1-3-2: the two shapes that distinguish
// k_2 = 1 from k_2 = 0 at n = 3.
const LabeledTree kStar3{3, {{1, 2}, {1, 3}}};
const LabeledTree kPath3{3, {{1, 3}, {2, 3}}};

}  // namespace

TEST_SUITE("uncover") {

TEST_CASE("edge counts of hand-checked trees") {
    UncoverPath star = uncover_path(kStar3);
    CHECK(star.k == std::vector<int>{0, 0, 1, 2});
    UncoverPath path = uncover_path(kPath3);
    CHECK(path.k == std::vector<int>{0, 0, 0, 2});

    // 5-vertex example: edges {1,2},{2,3},{2,5},{4,5}
    LabeledTree t{5, {{1, 2}, {2, 3}, {2, 5}, {4, 5}}};
    UncoverPath p = uncover_path(t);
    CHECK(p.k == std::vector<int>{0, 0, 1, 2, 2, 4});
}

TEST_CASE("path bounds and forest identity on random trees") {
    RngStream rng(31, 0);
    for (int rep = 0; rep < 50; ++rep) {
        LabeledTree t = sample_uniform_tree(100, rng);
        UncoverPath p = uncover_path(t);
        REQUIRE(static_cast<int>(p.k.size()) == 101);
        CHECK(p.k[0] == 0);
        CHECK(p.k[1] == 0);
        CHECK(p.k[100] == 99);
        IncrementalUncover inc(t);
        for (int j = 1; j <= 100; ++j) {
            CHECK(p.k[j] >= p.k[j - 1]);
            CHECK(p.k[j] <= j - 1);
            inc.advance(j);
            CHECK(inc.edges() == p.k[j]);
            // j uncovered vertices minus edges = number of components
            CHECK(inc.components() == j - p.k[j]);
        }
    }
}

TEST_CASE("incremental view matches a fresh component scan") {
    RngStream rng(32, 0);
    LabeledTree t = sample_uniform_tree(60, rng);
    IncrementalUncover inc(t);
    inc.advance(25);
    std::vector<int> sizes = inc.component_sizes();
    CHECK(std::accumulate(sizes.begin(), sizes.end(), 0) == 25);
    CHECK(static_cast<int>(sizes.size()) == inc.components());
    CHECK(*std::max_element(sizes.begin(), sizes.end()) == inc.largest());
    const std::vector<int>& by_size = inc.count_by_size();
    for (int r = 1; r <= 25; ++r) {
        int direct = static_cast<int>(
            std::count(sizes.begin(), sizes.end(), r));
        CHECK(by_size[static_cast<std::size_t>(r)] == direct);
    }
    // covered vertices are in no cluster
    CHECK(inc.cluster_of(26) == 0);
    CHECK(inc.cluster_of(60) == 0);
    CHECK_FALSE(inc.connected(1, 26));
    CHECK(inc.connected(1, 1));
    CHECK_THROWS_AS(inc.cluster_of(0), std::invalid_argument);
    CHECK_THROWS_AS(inc.cluster_of(61), std::invalid_argument);
}

TEST_CASE("cluster report on a hand example") {
    // edges {1,2},{2,3},{2,5},{4,5}; first 3 vertices induce the path 1-2-3
    LabeledTree t{5, {{1, 2}, {2, 3}, {2, 5}, {4, 5}}};
    ClusterReport r = cluster_report(t, 3, 2);
    CHECK(r.n == 5);
    CHECK(r.k == 3);
    CHECK(r.sizes == std::vector<int>{3});
    CHECK(r.root_cluster == 3);
    CHECK(r.largest == 3);

    ClusterReport covered_root = cluster_report(t, 3, 5);
    CHECK(covered_root.root_cluster == 0);

    ClusterReport empty = cluster_report(t, 0);
    CHECK(empty.sizes.empty());
    CHECK(empty.largest == 0);

    CHECK_THROWS_AS(cluster_report(t, 6), std::invalid_argument);
    CHECK_THROWS_AS(cluster_report(t, 3, 0), std::invalid_argument);
}

TEST_CASE("interpolated process values at n = 3") {
    UncoverPath star = uncover_path(kStar3);
    UncoverPath path = uncover_path(kPath3);
    const double s3 = std::sqrt(3.0);
    // Z(t) = (interpolated K at tn - t^2 n) / sqrt(n)
    CHECK(interpolated_Z(star, 0.0) == doctest::Approx(0.0));
    CHECK(interpolated_Z(star, 2.0 / 3.0) ==
          doctest::Approx(-1.0 / (3.0 * s3)));
    CHECK(interpolated_Z(path, 2.0 / 3.0) ==
          doctest::Approx(-4.0 / (3.0 * s3)));
    CHECK(interpolated_Z(star, 1.0) == doctest::Approx(-1.0 / s3));
    // midpoint of the last segment: K interpolates linearly, t^2 does not
    double z = interpolated_Z(star, 5.0 / 6.0);
    CHECK(z == doctest::Approx((1.5 - 25.0 / 12.0) / s3));
    CHECK_THROWS_AS(interpolated_Z(star, -0.01), std::invalid_argument);
    CHECK_THROWS_AS(interpolated_Z(star, 1.01), std::invalid_argument);
}

TEST_CASE("supremum of |Z| dominates a dense grid scan") {
    RngStream rng(33, 0);
    for (int rep = 0; rep < 20; ++rep) {
        LabeledTree t = sample_uniform_tree(40, rng);
        UncoverPath p = uncover_path(t);
        double sup = sup_abs_Z(p);
        double grid_max = 0.0;
        for (int i = 0; i <= 4000; ++i) {
            grid_max = std::max(grid_max,
                                std::abs(interpolated_Z(p, i / 4000.0)));
        }
        CHECK(sup >= grid_max - 1e-12);
        CHECK(sup <= grid_max + 0.05);  // grid resolution slack
    }
}

TEST_CASE("martingale values at n = 3") {
    UncoverPath star = uncover_path(kStar3);
    UncoverPath path = uncover_path(kPath3);
    CHECK(martingale_Y(star, 1) == doctest::Approx(0.0));
    CHECK(martingale_Y(star, 2) == doctest::Approx(1.0 / 3.0));
    CHECK(martingale_Y(path, 2) == doctest::Approx(-2.0 / 3.0));
    CHECK_THROWS_AS(martingale_Y(star, 0), std::invalid_argument);
    CHECK_THROWS_AS(martingale_Y(star, 3), std::invalid_argument);
}

TEST_CASE("martingale has conditionally centered increments") {
    // Bin on Y_50 quartiles and require each conditional mean of
    // Y_100 - Y_50 to vanish within 4 standard errors.
    const int n = 200;
    const long samples = 20000;
    RngStream rng(34, 0);
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(static_cast<std::size_t>(samples));
    for (long i = 0; i < samples; ++i) {
        UncoverPath p = uncover_path(sample_uniform_tree(n, rng));
        pairs.emplace_back(martingale_Y(p, 50), martingale_Y(p, 100));
    }
    // Bin by value thresholds: Y_50 is discrete, so position-based quartiles
    // would split tied samples by their Y_100 coordinate and bias the bins.
    std::vector<double> firsts;
    firsts.reserve(pairs.size());
    for (const auto& pr : pairs) firsts.push_back(pr.first);
    std::sort(firsts.begin(), firsts.end());
    const std::size_t m = firsts.size();
    const double q1 = firsts[m / 4], q2 = firsts[m / 2], q3 = firsts[3 * m / 4];
    double sum[4] = {}, sum2[4] = {};
    long count[4] = {};
    for (const auto& [y50, y100] : pairs) {
        int b = y50 < q1 ? 0 : y50 < q2 ? 1 : y50 < q3 ? 2 : 3;
        double inc = y100 - y50;
        sum[b] += inc;
        sum2[b] += inc * inc;
        count[b] += 1;
    }
    for (int b = 0; b < 4; ++b) {
        REQUIRE(count[b] > 500);
        double cnt = static_cast<double>(count[b]);
        double mean = sum[b] / cnt;
        double var = sum2[b] / cnt - mean * mean;
        double se = std::sqrt(var / cnt);
        INFO("bin ", b, " mean ", mean, " se ", se);
        CHECK(std::abs(mean) < 4.0 * se);
    }
}

TEST_CASE("recursion-based sampler matches first moments of the tree law") {
    const int n = 50;
    const long samples = 20000;
    RngStream rng(35, 0);
    const std::vector<int> js{10, 25, 40};
    std::vector<double> sum(js.size(), 0.0), sum2(js.size(), 0.0);
    for (long i = 0; i < samples; ++i) {
        UncoverPath p = recursive_model_sampler(n, rng);
        REQUIRE(static_cast<int>(p.k.size()) == n + 1);
        REQUIRE(p.k[n] == n - 1);
        for (std::size_t a = 0; a < js.size(); ++a) {
            double v = p.k[static_cast<std::size_t>(js[a])];
            sum[a] += v;
            sum2[a] += v * v;
        }
    }
    for (std::size_t a = 0; a < js.size(); ++a) {
        double m = static_cast<double>(samples);
        double mean = sum[a] / m;
        double var = sum2[a] / m - mean * mean;
        double expect = to_double(expected_edges(n, js[a]));
        INFO("j = ", js[a]);
        CHECK(std::abs(mean - expect) < 4.0 * std::sqrt(var / m));
    }
}

TEST_CASE("process_sample evaluates Z on the requested grid") {
    RngStream rng(36, 0);
    LabeledTree t = sample_uniform_tree(30, rng);
    std::vector<double> grid{0.2, 0.5, 0.9};
    ProcessSample s = process_sample(t, grid);
    REQUIRE(s.z.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(s.z[i].first == grid[i]);
        CHECK(s.z[i].second ==
              doctest::Approx(interpolated_Z(s.path, grid[i])));
    }
}

}  // TEST_SUITE
