#include <doctest.h>

#include "wb/generators.hpp"
#include "wb/prover.hpp"
#include "wb/syntax.hpp"

using namespace wb;

namespace {

Formula P(const std::string& s) { return parse_formula(s, Lang::Prop); }

// Semantic IPC validity over all tree frames with <= max_nodes nodes and all
// monotone valuations of the formula's atoms; independent of the sequent
// engine.
bool tree_oracle_valid(const Formula& f, int max_nodes) {
    std::vector<std::string> atoms;
    for (const auto& [sym, arity] : f.signature()) atoms.push_back(sym);
    for (const auto& frame : enumerate_finite_trees(max_nodes)) {
        auto ups = up_sets(frame);
        std::vector<std::size_t> pick(atoms.size(), 0);
        while (true) {
            std::vector<std::set<std::string>> val(frame.node_count());
            for (std::size_t a = 0; a < atoms.size(); ++a)
                for (std::size_t v = 0; v < frame.node_count(); ++v)
                    if (ups[pick[a]] & (1u << v)) val[v].insert(atoms[a]);
            if (!force_prop(frame.with_valuation(val), 0, f)) return false;
            std::size_t i = 0;
            for (; i < pick.size(); ++i) {
                if (++pick[i] < ups.size()) break;
                pick[i] = 0;
            }
            if (i == pick.size()) break;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("decide_ipc golden verdicts") {
    CHECK(decide_ipc(P("p -> p")).valid);
    CHECK(decide_ipc(P("~~(p | ~p)")).valid);
    CHECK(decide_ipc(P("p -> ~~p")).valid);
    CHECK(decide_ipc(P("(p -> q) -> ((q -> r) -> (p -> r))")).valid);
    CHECK(decide_ipc(P("false -> p")).valid);

    auto lem = decide_ipc(P("p | ~p"));
    REQUIRE_FALSE(lem.valid);
    REQUIRE(lem.countermodel.has_value());
    // the first countermodel in enumeration order is the two-chain
    CHECK(lem.countermodel->model.node_count() == 2);
    CHECK_FALSE(force_prop(lem.countermodel->model, lem.countermodel->root, P("p | ~p")));

    CHECK_FALSE(decide_ipc(P("~~p -> p")).valid);
    CHECK_FALSE(decide_ipc(P("((p -> q) -> p) -> p")).valid);  // Peirce
    CHECK_FALSE(decide_ipc(P("(p -> q) | (q -> p)")).valid);   // Dummett
    CHECK_FALSE(decide_ipc(P("~p | ~~p")).valid);              // weak excluded middle
}

TEST_CASE("decide_ipc countermodels refute at the root") {
    Rng rng(2024);
    std::vector<std::string> atoms{"p", "q", "r"};
    int refuted = 0;
    for (int i = 0; i < 300; ++i) {
        Formula f = random_prop_formula(rng, atoms, 1 + i % 10);
        auto v = decide_ipc(f);
        if (!v.valid) {
            ++refuted;
            REQUIRE(v.countermodel.has_value());
            CHECK_FALSE(force_prop(v.countermodel->model, v.countermodel->root, f));
        }
    }
    CHECK(refuted > 50);
}

TEST_CASE("decide_cpc golden verdicts") {
    CHECK(decide_cpc(P("((p -> q) -> p) -> p")).valid);
    CHECK(decide_cpc(P("p | ~p")).valid);
    auto v = decide_cpc(P("p -> q"));
    REQUIRE_FALSE(v.valid);
    CHECK(v.falsifying == std::map<std::string, bool>{{"p", true}, {"q", false}});
}

TEST_CASE("dual engines agree on an exhaustive mini-corpus") {
    // all formulas over {p, q} with at most 6 AST nodes
    std::vector<std::string> atoms{"p", "q"};
    std::vector<std::vector<Formula>> by_size(7);
    for (const auto& a : atoms) by_size[1].push_back(Formula::atom(a));
    for (int s = 2; s <= 6; ++s) {
        for (const auto& f : by_size[s - 1]) by_size[s].push_back(Formula::negate(f));
        for (int ls = 1; ls <= s - 2; ++ls)
            for (const auto& l : by_size[ls])
                for (const auto& r : by_size[s - 1 - ls]) {
                    by_size[s].push_back(Formula::conj(l, r));
                    by_size[s].push_back(Formula::disj(l, r));
                    by_size[s].push_back(Formula::implies(l, r));
                }
    }
    int total = 0, valid = 0;
    for (int s = 1; s <= 6; ++s)
        for (const auto& f : by_size[s]) {
            ++total;
            bool sequent = ipc_provable(f);
            CHECK(sequent == tree_oracle_valid(f, 4));
            if (sequent) {
                ++valid;
                CHECK(decide_cpc(f).valid);  // IPC within CPC
            }
        }
    CHECK(total > 1000);
    CHECK(valid > 10);
}

TEST_CASE("ipc_provable handles classic theorems and non-theorems") {
    CHECK(ipc_provable(P("(p & q) -> (q & p)")));
    CHECK(ipc_provable(P("(p -> (q -> r)) -> ((p & q) -> r)")));
    CHECK(ipc_provable(P("((p | q) -> r) -> ((p -> r) & (q -> r))")));
    CHECK(ipc_provable(P("~(p & ~p)")));
    CHECK(ipc_provable(P("(~p | q) -> (p -> q)")));
    CHECK_FALSE(ipc_provable(P("(p -> q) -> (~p | q)")));
    CHECK_FALSE(ipc_provable(P("~~(p | q) -> (~~p | ~~q)")));
}
