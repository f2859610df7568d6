#include <doctest.h>

#include "wb/generators.hpp"
#include "wb/set_model.hpp"
#include "wb/structures.hpp"
#include "wb/subst.hpp"
#include "wb/syntax.hpp"

using namespace wb;

TEST_CASE("apply_assignment golden cases") {
    Assignment a;
    a.set("R", 2, parse_formula("x0 in x1", Lang::SetTheory));
    Formula f = Formula::atom("R", {"y", "z"});
    CHECK(apply_assignment(a, f) == parse_formula("y in z", Lang::SetTheory));

    Assignment b;
    b.set("p", 0, Formula::top());
    Formula g = parse_formula("p | ~p", Lang::Prop);
    CHECK(apply_assignment(b, g) == parse_formula("true | ~true", Lang::Prop));
}

TEST_CASE("apply_assignment commutes with connectives") {
    Rng rng(7);
    std::vector<std::string> atoms{"p", "q"};
    Assignment a;
    a.set("p", 0, parse_formula("q -> q", Lang::Prop));
    a.set("q", 0, Formula::bot());
    for (int i = 0; i < 100; ++i) {
        Formula x = random_prop_formula(rng, atoms, 4);
        Formula y = random_prop_formula(rng, atoms, 4);
        CHECK(apply_assignment(a, Formula::conj(x, y)) ==
              Formula::conj(apply_assignment(a, x), apply_assignment(a, y)));
        CHECK(apply_assignment(a, Formula::implies(x, y)) ==
              Formula::implies(apply_assignment(a, x), apply_assignment(a, y)));
        CHECK(apply_assignment(a, Formula::negate(x)) == Formula::negate(apply_assignment(a, x)));
    }
}

TEST_CASE("apply_assignment avoids capture") {
    Assignment a;
    a.set("P", 1, parse_formula("exists w. x0 in w", Lang::SetTheory));

    Formula f1 = Formula::forall("y", Formula::atom("P", {"y"}));
    CHECK(apply_assignment(a, f1) ==
          parse_formula("forall y. exists w. y in w", Lang::SetTheory));

    // the argument variable collides with the assigned formula's binder
    Formula f2 = Formula::forall("w", Formula::atom("P", {"w"}));
    Formula got = apply_assignment(a, f2);
    CHECK(got == parse_formula("forall w. exists v0. w in v0", Lang::SetTheory));

    // brute-force semantic check on all membership digraphs with 2 elements:
    // sigma(forall w. P(w)) must mean "every element is a member of something"
    Formula expected = parse_formula("forall u. exists t. u in t", Lang::SetTheory);
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<std::set<int>> members(2);
        for (int bit = 0; bit < 4; ++bit)
            if (mask & (1u << bit)) members[bit / 2].insert(bit % 2);
        ClassicalSetModel m({"a", "b"}, members);
        CHECK(eval_classical(m, got) == eval_classical(m, expected));
    }
}

TEST_CASE("assignment arity discipline") {
    Assignment a;
    CHECK_THROWS_AS(a.set("P", 1, parse_formula("x0 in x1", Lang::SetTheory)), Error);
    a.set("P", 2, parse_formula("x0 in x1", Lang::SetTheory));
    CHECK_THROWS_AS(apply_assignment(a, Formula::atom("P", {"y"})), Error);
    CHECK_THROWS_AS(apply_assignment(Assignment{}, Formula::atom("q")), Error);
}

TEST_CASE("ground substitution enumeration") {
    Signature empty;
    auto none = ground_substitutions(empty);
    REQUIRE(none.size() == 1);
    CHECK(none[0].empty());

    Signature one{{{"p", 0}}};
    auto two = ground_substitutions(one);
    REQUIRE(two.size() == 2);
    CHECK(two[0].at("p") == false);  // binary counting starts all-false
    CHECK(two[1].at("p") == true);

    Signature mixed{{{"P", 1}, {"Q", 0}}};
    auto four = ground_substitutions(mixed);
    REQUIRE(four.size() == 4);
    std::set<std::pair<bool, bool>> distinct;
    for (const auto& g : four) distinct.insert({g.at("P"), g.at("Q")});
    CHECK(distinct.size() == 4);
    // lexicographically smallest symbol is the least-significant bit
    CHECK(four[1].at("P") == true);
    CHECK(four[1].at("Q") == false);
}

TEST_CASE("constant_fold golden cases") {
    CHECK(constant_fold(parse_formula("true & ~false", Lang::Prop)) == true);
    CHECK(constant_fold(parse_formula("forall x. (false -> false)", Lang::FirstOrder)) == true);
    // image of exists x P(x) & exists x ~P(x) under P -> true
    Formula img = Formula::conj(Formula::exists("x", Formula::top()),
                                Formula::exists("x", Formula::negate(Formula::top())));
    CHECK(constant_fold(img) == false);
    CHECK_THROWS_AS(constant_fold(parse_formula("p & true", Lang::Prop)), Error);
}

TEST_CASE("constant_fold agrees with classical evaluation on constant structures") {
    // build random function-free first-order formulas over P/1, Q/0
    Rng rng(99);
    auto random_fo = [&](auto&& self, int size, int depth) -> Formula {
        std::uniform_int_distribution<int> d(0, 5);
        if (size <= 1) {
            int c = d(rng) % 3;
            if (c == 0) return Formula::atom("Q");
            return Formula::atom("P", {"z" + std::to_string(d(rng) % std::max(1, depth + 1))});
        }
        switch (d(rng)) {
            case 0:
                return Formula::negate(self(self, size - 1, depth));
            case 1:
                return Formula::forall("z" + std::to_string(depth + 1), self(self, size - 1, depth + 1));
            case 2:
                return Formula::exists("z" + std::to_string(depth + 1), self(self, size - 1, depth + 1));
            default: {
                Formula a = self(self, size / 2, depth);
                Formula b = self(self, size - 1 - size / 2, depth);
                int op = d(rng) % 3;
                if (op == 0) return Formula::conj(a, b);
                if (op == 1) return Formula::disj(a, b);
                return Formula::implies(a, b);
            }
        }
    };
    Signature sig{{{"P", 1}, {"Q", 0}}};
    for (int i = 0; i < 60; ++i) {
        Formula f = random_fo(random_fo, 2 + i % 7, 0);
        // close it
        Formula g = f;
        auto fv = f.free_vars();
        for (auto it = fv.rbegin(); it != fv.rend(); ++it) g = Formula::forall(*it, g);
        for (const auto& tau : ground_substitutions(sig)) {
            bool folded = constant_fold(apply_ground(tau, g));
            for (int size = 1; size <= 3; ++size) {
                FoStructure s;
                s.size = size;
                s.interp["Q"] = {};
                if (tau.at("Q")) s.interp["Q"].insert(std::vector<int>{});
                s.interp["P"] = {};
                if (tau.at("P"))
                    for (int d = 0; d < size; ++d) s.interp["P"].insert({d});
                CHECK(folded == eval_structure(s, g, {}));
            }
        }
    }
}
