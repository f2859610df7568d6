#include <doctest.h>

#include "wb/set_model.hpp"
#include "wb/syntax.hpp"

using namespace wb;

namespace {
Formula S(const std::string& s) { return parse_formula(s, Lang::SetTheory); }
}

TEST_CASE("vrank_model sizes and edges") {
    CHECK(vrank_model(0).size() == 0);
    CHECK(vrank_model(1).size() == 1);
    CHECK(vrank_model(2).size() == 2);
    auto v3 = vrank_model(3);
    CHECK(v3.size() == 4);
    int edges = 0;
    for (int e = 0; e < v3.size(); ++e) edges += static_cast<int>(v3.members(e).size());
    CHECK(edges == 4);
    CHECK(vrank_model(4).size() == 16);
    CHECK_THROWS_AS(vrank_model(5), Error);

    for (int n = 1; n <= 4; ++n) CHECK(validate_classical(vrank_model(n)).ok());
}

TEST_CASE("vrank helpers") {
    auto v3 = vrank_model(3);
    auto empty = v3.find_empty();
    REQUIRE(empty.has_value());
    CHECK(v3.rank(*empty) == 0);
    auto sing = v3.find_pair(*empty, *empty);  // {0}
    REQUIRE(sing.has_value());
    auto pair = v3.find_pair(*empty, *sing);
    REQUIRE(pair.has_value());
    CHECK(v3.members(*pair) == std::set<int>{*empty, *sing});
    CHECK(v3.rank(*pair) == 2);
    auto un = v3.find_union(*pair);
    REQUIRE(un.has_value());
    CHECK(*un == *sing);
    auto pw = v3.find_power(*empty);
    REQUIRE(pw.has_value());
    CHECK(*pw == *sing);
}

TEST_CASE("validate_classical violation reporting") {
    // two elements with the same members
    ClassicalSetModel dup({"a", "b"}, {{}, {}});
    auto r1 = validate_classical(dup);
    CHECK(r1.extensionality_violations.size() == 1);
    // self-loop
    ClassicalSetModel loop({"a"}, {{0}});
    auto r2 = validate_classical(loop);
    CHECK(r2.wellfoundedness_violations.size() == 1);
    CHECK_FALSE(r2.ok());
}

TEST_CASE("eval_classical golden cases") {
    auto v2 = vrank_model(2);
    CHECK(eval_classical(v2, S("exists x. forall y. ~(y in x)")));
    auto v1 = vrank_model(1);
    CHECK_FALSE(eval_classical(v1, cardinality_sentence(2, false)));
    auto v3 = vrank_model(3);
    // pairing instance for the empty set and its singleton
    Formula pairing = S(
        "exists z. forall w. ((w in z -> (w = x | w = y)) & ((w = x | w = y) -> w in z))");
    std::map<std::string, int> env{{"x", *v3.find_empty()},
                                   {"y", *v3.find_pair(*v3.find_empty(), *v3.find_empty())}};
    CHECK(eval_classical(v3, pairing, env));
    CHECK_THROWS_AS(eval_classical(v3, S("x in y")), Error);  // unbound variables
}

TEST_CASE("cardinality sentences") {
    CHECK(render_formula(cardinality_sentence(2, false)) == "exists x1. exists x2. ~(x1 = x2)");
    CHECK(render_formula(cardinality_sentence(1, false)) == "exists x1. true");
    auto v2 = vrank_model(2);
    auto v3 = vrank_model(3);
    CHECK(eval_classical(v2, cardinality_sentence(2, true)));
    CHECK_FALSE(eval_classical(v3, cardinality_sentence(2, true)));
    CHECK(eval_classical(vrank_model(1), cardinality_sentence(1, true)));
    auto o5 = ordinal_model(5);
    CHECK(validate_classical(o5).ok());
    CHECK(eval_classical(o5, cardinality_sentence(5, true)));
    CHECK_FALSE(eval_classical(o5, cardinality_sentence(6, false)));
}
