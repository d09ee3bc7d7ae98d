#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "uncover/rng.hpp"
#include "uncover/stats.hpp"
#include "uncover/tree.hpp"

using namespace uncover;

namespace {

std::vector<std::pair<int, int>> sorted_edges(LabeledTree t) {
    canonicalize(t);
    return t.edges;
}

}  // namespace

TEST_SUITE("tree") {

TEST_CASE("decode of known sequences") {
    LabeledTree t3 = prufer_decode({3, {1}});
    CHECK(t3.n == 3);
    CHECK(sorted_edges(t3) ==
          std::vector<std::pair<int, int>>{{1, 2}, {1, 3}});

    LabeledTree t4 = prufer_decode({4, {2, 2}});
    CHECK(sorted_edges(t4) ==
          std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {2, 4}});

    // n = 2 has the empty sequence and the single edge.
    LabeledTree t2 = prufer_decode({2, {}});
    CHECK(sorted_edges(t2) == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("encode inverts decode over every sequence up to n = 6") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> seq(static_cast<std::size_t>(n - 2), 1);
        long count = 0;
        for (;;) {
            PrueferSeq p{n, seq};
            LabeledTree t = prufer_decode(p);
            validate_tree(t);
            PrueferSeq back = prufer_encode(t);
            REQUIRE(back.n == n);
            REQUIRE(back.seq == seq);
            ++count;
            int i = n - 3;
            while (i >= 0 && seq[static_cast<std::size_t>(i)] == n) {
                seq[static_cast<std::size_t>(i)] = 1;
                --i;
            }
            if (i < 0) break;
            ++seq[static_cast<std::size_t>(i)];
        }
        long expect = 1;
        for (int i = 0; i < n - 2; ++i) expect *= n;
        CHECK(count == expect);
    }
}

TEST_CASE("decode inverts encode on sampled trees") {
    RngStream rng(99, 0);
    for (int rep = 0; rep < 100; ++rep) {
        LabeledTree t = sample_uniform_tree(30, rng);
        LabeledTree back = prufer_decode(prufer_encode(t));
        CHECK(sorted_edges(t) == sorted_edges(back));
    }
}

TEST_CASE("validate_tree rejects malformed input") {
    CHECK_THROWS_AS(validate_tree({0, {}}), std::invalid_argument);
    // wrong edge count
    CHECK_THROWS_AS(validate_tree({3, {{1, 2}}}), std::invalid_argument);
    // self loop
    CHECK_THROWS_AS(validate_tree({2, {{1, 1}}}), std::invalid_argument);
    // label out of range
    CHECK_THROWS_AS(validate_tree({3, {{1, 2}, {2, 4}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_tree({3, {{0, 2}, {2, 3}}}), std::invalid_argument);
    // cycle + disconnected vertex
    CHECK_THROWS_AS(validate_tree({4, {{1, 2}, {2, 3}, {3, 1}}}),
                    std::invalid_argument);
    CHECK(is_valid_tree({3, {{1, 2}, {2, 3}}}));
    CHECK_FALSE(is_valid_tree({3, {{1, 2}, {1, 2}}}));
    // the one-vertex tree is valid and has no edges
    validate_tree({1, {}});
}

TEST_CASE("sampler is uniform over the 16 trees on 4 vertices") {
    RngStream rng(12345, 0);
    const long long samples = 160000;
    std::map<std::vector<std::pair<int, int>>, long long> hist;
    for (long long i = 0; i < samples; ++i) {
        hist[sorted_edges(sample_uniform_tree(4, rng))] += 1;
    }
    REQUIRE(hist.size() == 16);
    std::vector<long long> observed;
    for (const auto& [edges, count] : hist) observed.push_back(count);
    std::vector<double> probs(16, 1.0 / 16.0);
    GofResult gof = chi_square_test(observed, probs, samples);
    CHECK(gof.dof == 15);
    CHECK(gof.p_value > 1e-3);
}

TEST_CASE("tiny sizes") {
    RngStream rng(1, 0);
    LabeledTree t1 = sample_uniform_tree(1, rng);
    CHECK(t1.n == 1);
    CHECK(t1.edges.empty());
    LabeledTree t2 = sample_uniform_tree(2, rng);
    CHECK(sorted_edges(t2) == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK_THROWS_AS(sample_uniform_tree(0, rng), std::invalid_argument);
}

TEST_CASE("rooted sampler picks the root uniformly") {
    RngStream rng(777, 0);
    const long long samples = 50000;
    std::vector<long long> root_hist(5, 0);
    for (long long i = 0; i < samples; ++i) {
        RootedTree rt = sample_uniform_rooted_tree(5, rng);
        REQUIRE(rt.root >= 1);
        REQUIRE(rt.root <= 5);
        root_hist[static_cast<std::size_t>(rt.root - 1)] += 1;
    }
    GofResult gof = chi_square_test(root_hist, std::vector<double>(5, 0.2),
                                    samples);
    CHECK(gof.p_value > 1e-3);
}

TEST_CASE("identical seeds give identical trees, different streams differ") {
    RngStream a(5, 1);
    RngStream b(5, 1);
    RngStream c(5, 2);
    LabeledTree ta = sample_uniform_tree(50, a);
    LabeledTree tb = sample_uniform_tree(50, b);
    LabeledTree tc = sample_uniform_tree(50, c);
    CHECK(sorted_edges(ta) == sorted_edges(tb));
    CHECK(sorted_edges(ta) != sorted_edges(tc));
}

}  // TEST_SUITE
