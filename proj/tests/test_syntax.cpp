#include <doctest.h>

#include "wb/generators.hpp"
#include "wb/syntax.hpp"

using namespace wb;

TEST_CASE("parser golden cases") {
    Formula f = parse_formula("p -> p", Lang::Prop);
    CHECK(f.kind() == Kind::Implies);
    CHECK(f.lhs() == Formula::atom("p"));
    CHECK(f.rhs() == Formula::atom("p"));

    Formula g = parse_formula("exists x. P(x) & exists x. ~P(x)", Lang::FirstOrder);
    // quantifiers scope maximally: this is exists x. (P(x) & exists x. ~P(x))
    CHECK(g.kind() == Kind::Exists);
    CHECK(g.body().kind() == Kind::And);

    Formula h = parse_formula("(exists x. P(x)) & (exists x. ~P(x))", Lang::FirstOrder);
    CHECK(h == Formula::conj(Formula::exists("x", Formula::atom("P", {"x"})),
                             Formula::exists("x", Formula::negate(Formula::atom("P", {"x"})))));

    Formula s = parse_formula("forall x. (x in a -> false)", Lang::SetTheory);
    CHECK(s == Formula::forall("x", Formula::implies(Formula::in("x", "a"), Formula::bot())));
    CHECK(s.free_vars() == std::vector<std::string>{"a"});
}

TEST_CASE("parser errors") {
    CHECK_THROWS_AS(parse_formula("p ->", Lang::Prop), ParseError);
    CHECK_THROWS_AS(parse_formula("forall x. p", Lang::Prop), ParseError);
    CHECK_THROWS_AS(parse_formula("P(x)", Lang::Prop), ParseError);
    CHECK_THROWS_AS(parse_formula("x in y", Lang::Prop), ParseError);
    CHECK_THROWS_AS(parse_formula("x in y", Lang::FirstOrder), ParseError);
    // bare atom in the set-theoretic language (the unbound-phi case)
    CHECK_THROWS_AS(parse_formula("forall x. (x in a -> phi)", Lang::SetTheory), ParseError);
    // inconsistent arity
    CHECK_THROWS_AS(parse_formula("P(x) & P(x,y)", Lang::FirstOrder), ParseError);
    CHECK_THROWS_AS(parse_formula("p & (q | r", Lang::Prop), ParseError);
    CHECK_THROWS(parse_formula("", Lang::Prop));
}

TEST_CASE("render golden cases") {
    CHECK(render_formula(Formula::top()) == "true");
    CHECK(render_formula(Formula::conj(Formula::atom("p"), Formula::atom("q"))) == "p & q");
    Formula s = Formula::forall("x", Formula::implies(Formula::in("x", "a"), Formula::bot()));
    CHECK(render_formula(s) == "forall x. (x in a -> false)");
    // implication into a quantifier needs no parentheses; out of one does
    Formula t = Formula::implies(Formula::exists("x", Formula::atom("P", {"x"})),
                                 Formula::atom("P", {"z"}));
    CHECK(render_formula(t) == "(exists x. P(x)) -> P(z)");
    CHECK(parse_formula(render_formula(t), Lang::FirstOrder) == t);
}

TEST_CASE("parse/render round trip on random formulas") {
    Rng rng(20240817);
    std::vector<std::string> atoms{"p", "q", "r"};
    for (int i = 0; i < 400; ++i) {
        Formula f = random_prop_formula(rng, atoms, 1 + i % 12);
        CHECK(parse_formula(render_formula(f), Lang::Prop) == f);
    }
    for (int i = 0; i < 400; ++i) {
        Formula f = random_set_sentence(rng, 3 + i % 9);
        CHECK(parse_formula(render_formula(f), Lang::SetTheory) == f);
    }
}

TEST_CASE("language discipline") {
    CHECK(parse_formula("p", Lang::Prop).lang() == Lang::Prop);
    CHECK(parse_formula("P(x)", Lang::FirstOrder).lang() == Lang::FirstOrder);
    CHECK(parse_formula("x in y", Lang::SetTheory).lang() == Lang::SetTheory);
    CHECK_THROWS_AS(Formula::conj(Formula::atom("P", {"x"}), Formula::in("x", "y")), Error);
    CHECK_THROWS_AS(Formula::atom("in", {"x"}), Error);
}
