#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diagcat/json_io.hpp"
#include "support.hpp"

using namespace diagcat;
using namespace diagcat::testsupport;

TEST_CASE("integer matrix roundtrip") {
    IntMat m(2, 3, {1, -2, 3, 4, 0, -6});
    CHECK(io::read_matrix_z(io::write_matrix(m)) == m);
    // entries beyond 64 bits travel as decimal strings
    IntMat big(1, 1);
    big(0, 0) = Int("123456789012345678901234567890");
    CHECK(io::read_matrix_z(io::write_matrix(big)) == big);
}

TEST_CASE("rational matrix roundtrip") {
    RatMat m(2, 2, {Rat(1, 2), Rat(-3), Rat(0), Rat(7, 5)});
    CHECK(io::read_matrix_q(io::write_matrix(m)) == m);
    CHECK(io::read_matrix_q("{\"rows\":1,\"cols\":2,\"entries\":[[\"2/4\", 3]]}") ==
          RatMat(1, 2, {Rat(1, 2), Rat(3)}));
}

TEST_CASE("malformed json raises a runtime error with position context") {
    CHECK_THROWS_AS(io::read_matrix_z("{\"rows\": 2,"), std::runtime_error);
    CHECK_THROWS_AS(io::read_matrix_z("{\"rows\": 1, \"cols\": 1}"), std::invalid_argument);
    // ragged rows
    CHECK_THROWS_AS(io::read_matrix_z("{\"rows\":2,\"cols\":2,\"entries\":[[1,2],[3]]}"),
                    std::invalid_argument);
    // floating-point entries are rejected: everything is exact
    CHECK_THROWS_AS(io::read_matrix_z("{\"rows\":1,\"cols\":1,\"entries\":[[1.5]]}"),
                    std::invalid_argument);
}

TEST_CASE("representation files parse with ring dispatch and named stages") {
    std::string text = R"({
      "ring": "Z",
      "objects": ["p", "q"],
      "arrows": [{"id": "a", "src": "p", "dst": "q"}],
      "values": {"p": 2, "q": 1},
      "matrices": {"a": {"rows": 1, "cols": 2, "entries": [[1, 1]]}},
      "stages": {"half": {"objects": ["p"], "arrows": []}}
    })";
    io::RepFile f = io::read_representation(text);
    CHECK(f.ring == Ring::Z);
    CHECK(f.z.diagram.objects.size() == 2);
    CHECK(f.z.matrix("a") == IntMat(1, 2, {1, 1}));
    REQUIRE(f.stages.count("half") == 1);
    CHECK(f.stages.at("half").is_subdiagram_of(f.z.diagram));

    std::string qtext = R"({
      "ring": "Q",
      "objects": ["p"],
      "arrows": [{"id": "a", "src": "p", "dst": "p"}],
      "values": {"p": 1},
      "matrices": {"a": {"rows": 1, "cols": 1, "entries": [["1/3"]]}}
    })";
    io::RepFile g = io::read_representation(qtext);
    CHECK(g.ring == Ring::Q);
    CHECK(g.q.matrix("a")(0, 0) == Rat(1, 3));

    // shape errors surface as schema violations
    std::string bad = R"({
      "ring": "Z",
      "objects": ["p"],
      "arrows": [{"id": "a", "src": "p", "dst": "p"}],
      "values": {"p": 2},
      "matrices": {"a": {"rows": 1, "cols": 1, "entries": [[1]]}}
    })";
    CHECK_THROWS_AS(io::read_representation(bad), std::invalid_argument);
}

TEST_CASE("coproduct witnesses parse") {
    std::string text = R"({
      "objects": ["p", "q", "s"],
      "arrows": [{"id": "i", "src": "p", "dst": "s"}, {"id": "j", "src": "q", "dst": "s"}],
      "values": {"p": 1, "q": 1, "s": 2},
      "matrices": {
        "i": {"rows": 2, "cols": 1, "entries": [[1], [0]]},
        "j": {"rows": 2, "cols": 1, "entries": [[0], [1]]}
      },
      "coproducts": [{"p": "p", "q": "q", "sum": "s", "i": "i", "iPrime": "j"}]
    })";
    io::RepFile f = io::read_representation(text);
    REQUIRE(f.z.diagram.coproducts.size() == 1);
    auto res = check_condition_a(f.z);
    REQUIRE(res.size() == 1);
    CHECK(res[0].status == CheckStatus::PASS);
}

TEST_CASE("graph pair and triple files parse and validate") {
    GraphPair p = io::read_graph_pair(
        R"({"vertices": ["v"], "edges": [{"id": "l", "a": "v", "b": "v"}],
            "Y": {"vertices": [], "edges": []}, "degree": 1})");
    CHECK(relative_homology(p).h1 == FgAbGroup::free(1));

    GraphTriple t = io::read_graph_triple(
        R"({"vertices": ["a", "b"], "edges": [{"id": "e", "a": "a", "b": "b"}],
            "Y": {"vertices": ["a", "b"], "edges": []},
            "Z": {"vertices": ["a"], "edges": []}})");
    CHECK(les_check(t).pass);

    // Y referencing an unknown vertex is a validation error
    CHECK_THROWS_AS(io::read_graph_pair(
                        R"({"vertices": ["v"], "edges": [],
                            "Y": {"vertices": ["w"], "edges": []}, "degree": 0})"),
                    std::invalid_argument);
}

TEST_CASE("group files parse and validate") {
    io::GroupFile f = io::read_group(
        R"({"order": 2, "table": [[0, 1], [1, 0]],
            "sets": [{"size": 2, "action": [[0, 1], [1, 0]]}]})");
    CHECK(f.group.order == 2);
    REQUIRE(f.sets.size() == 1);
    CHECK(f.sets[0].validate(f.group).empty());
    CHECK_THROWS_AS(io::read_group(R"({"order": 2, "table": [[0, 0], [0, 0]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::read_group(R"({"order": 3, "table": [[0, 1], [1, 0]]})"),
                    std::invalid_argument);
}

TEST_CASE("chain files resolve arrows against the ambient diagram") {
    io::RepFile f = io::read_representation(read_rep_text());
    SubdiagramChain c = io::read_chain(
        R"({"stages": [{"objects": ["p"], "arrows": ["g0"]},
                       {"objects": ["p"], "arrows": ["g0", "g1"]}]})",
        f.z.diagram);
    CHECK(c.stages.size() == 2);
    CHECK(c.validate(f.z.diagram).empty());
    // non-increasing chains are rejected
    CHECK_THROWS_AS(io::read_chain(
                        R"({"stages": [{"objects": ["p"], "arrows": ["g0", "g1"]},
                                       {"objects": ["p"], "arrows": ["g0"]}]})",
                        f.z.diagram),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::read_chain(R"({"stages": [{"objects": ["p"], "arrows": ["zz"]}]})",
                                   f.z.diagram),
                    std::invalid_argument);
}

TEST_CASE("target and test-map files drive the full criterion") {
    io::RepFile f = io::read_representation(read_rep_text());
    auto tp = io::read_target_z(read_file("target_c2_scalar.json"));
    CHECK(verify_target(f.z, tp).empty());
    auto good = io::read_test_maps_z(read_file("maps_sum.json"));
    auto bad = io::read_test_maps_z(read_file("maps_projection.json"));
    CHECK(full_criterion(f.z, tp, good).overall == CheckStatus::PASS);
    auto rep = full_criterion(f.z, tp, bad);
    CHECK(rep.overall == CheckStatus::FAIL);
    REQUIRE(rep.condition_c.size() == 1);
    CHECK(rep.condition_c[0].certificate.has_value());
}

TEST_CASE("writers are deterministic") {
    io::RepFile f = io::read_representation(read_rep_text());
    auto alg = compute_end(f.z, f.z.diagram);
    CHECK(io::write_end_algebra(alg) == io::write_end_algebra(alg));
    auto s = smith_normal_form(IntMat(2, 2, {2, 4, 6, 8}));
    CHECK(io::write_smith(s) == io::write_smith(s));
    CHECK(io::write_smith(s).find("\"diagonal\"") != std::string::npos);
}

TEST_CASE("end algebra serialization carries stage, basis, and structure") {
    io::RepFile f = io::read_representation(read_rep_text());
    auto alg = compute_end(f.z, f.z.diagram);
    std::string text = io::write_end_algebra(alg);
    CHECK(text.find("\"dim\": 2") != std::string::npos);
    CHECK(text.find("\"stage\"") != std::string::npos);
    CHECK(text.find("\"unit\"") != std::string::npos);
}
