#include <doctest.h>

#include <string>

#include "uncover/serialize.hpp"
#include "uncover/tree.hpp"
#include "uncover/uncover.hpp"

using namespace uncover;

TEST_SUITE("serialize") {

TEST_CASE("tree json round trip") {
    LabeledTree t{4, {{3, 1}, {1, 2}, {2, 4}}};
    std::string doc = tree_to_json(t);
    CHECK(doc == R"({"edges":[[1,2],[1,3],[2,4]],"n":4,"root":null})");
    ParsedTree back = tree_from_json(doc);
    CHECK(back.tree.n == 4);
    CHECK_FALSE(back.root.has_value());
    CHECK(tree_to_json(back.tree) == doc);

    std::string rooted = tree_to_json(t, 3);
    CHECK(rooted == R"({"edges":[[1,2],[1,3],[2,4]],"n":4,"root":3})");
    CHECK(tree_from_json(rooted).root == 3);

    // single vertex: no edges
    CHECK(tree_from_json(tree_to_json({1, {}})).tree.n == 1);
}

TEST_CASE("tree json rejects malformed documents") {
    CHECK_THROWS_AS(tree_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(tree_from_json("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(tree_from_json(R"({"edges":[[1,2]]})"),
                    std::invalid_argument);  // missing n
    CHECK_THROWS_AS(tree_from_json(R"({"n":2})"), std::invalid_argument);
    CHECK_THROWS_AS(tree_from_json(R"({"n":3,"edges":[[1,2],[1]]})"),
                    std::invalid_argument);  // edge is not a pair
    CHECK_THROWS_AS(tree_from_json(R"({"n":3,"edges":[[1,2],[1,2]]})"),
                    std::invalid_argument);  // duplicate edge: not a tree
    CHECK_THROWS_AS(tree_from_json(R"({"n":2,"edges":[[1,2]],"root":5})"),
                    std::invalid_argument);  // root out of range
    CHECK_THROWS_AS(tree_from_json(R"({"n":2,"edges":[[1,2]],"root":0})"),
                    std::invalid_argument);
}

TEST_CASE("cluster report and path serialization") {
    LabeledTree t{5, {{1, 2}, {2, 3}, {2, 5}, {4, 5}}};
    ClusterReport r = cluster_report(t, 3, 2);
    CHECK(cluster_report_to_json(r) ==
          R"({"k":3,"largest":3,"root_cluster":3,"sizes":[3]})");

    UncoverPath p = uncover_path(t);
    CHECK(path_to_json(p) == R"({"k":[0,0,1,2,2,4],"n":5})");
    CHECK(path_to_csv(p) == "j,k_j\n0,0\n1,0\n2,1\n3,2\n4,2\n5,4\n");
}

TEST_CASE("double formatting") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(5.0) == "5");
    CHECK(format_double(-2.25) == "-2.25");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(format_double(1e-12) == "1e-12");
}

TEST_CASE("csv quoting") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("line\nbreak") == "\"line\nbreak\"");
    CHECK(csv_row({"a", "b,c", "d"}) == "a,\"b,c\",d\n");
    CHECK(csv_row({}) == "\n");
}

}  // TEST_SUITE
