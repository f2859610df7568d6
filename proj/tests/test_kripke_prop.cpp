#include <doctest.h>

#include <set>

#include "wb/generators.hpp"
#include "wb/kripke_prop.hpp"
#include "wb/syntax.hpp"

using namespace wb;

namespace {

PropKripkeModel two_chain() {
    return PropKripkeModel::from_cover({"r", "t"}, {{"r", "t"}}, {{"t", {"p"}}});
}

// Independent census: all rooted trees on exactly n nodes via parent arrays
// parent[i] < i, up to isomorphism by AHU codes.
std::set<std::string> tree_census(int n) {
    std::set<std::string> codes;
    std::vector<int> parent(n, -1);
    auto code_of = [&]() {
        auto rec = [&](auto&& self, int v) -> std::string {
            std::vector<std::string> cs;
            for (int w = v + 1; w < n; ++w)
                if (parent[w] == v) cs.push_back(self(self, w));
            std::sort(cs.begin(), cs.end());
            std::string out = "(";
            for (auto& c : cs) out += c;
            return out + ")";
        };
        return rec(rec, 0);
    };
    auto enumerate = [&](auto&& self, int i) -> void {
        if (i == n) {
            codes.insert(code_of());
            return;
        }
        for (int p = 0; p < i; ++p) {
            parent[i] = p;
            self(self, i + 1);
        }
    };
    if (n == 1)
        codes.insert("()");
    else
        enumerate(enumerate, 1);
    return codes;
}

}  // namespace

TEST_CASE("model construction validates the order and valuation") {
    CHECK_THROWS_AS(PropKripkeModel::from_cover({"a", "b"}, {{"a", "b"}, {"b", "a"}}, {}), Error);
    // non-monotone valuation
    CHECK_THROWS_AS(PropKripkeModel::from_cover({"a", "b"}, {{"a", "b"}}, {{"a", {"p"}}}), Error);
    auto m = two_chain();
    CHECK(m.leq(0, 1));
    CHECK(!m.leq(1, 0));
    CHECK(m.minimal_nodes() == std::vector<int>{0});
}

TEST_CASE("force_prop golden cases") {
    auto m = two_chain();
    int r = m.node_index("r"), t = m.node_index("t");
    CHECK_FALSE(force_prop(m, r, parse_formula("p | ~p", Lang::Prop)));
    CHECK(force_prop(m, t, parse_formula("p", Lang::Prop)));
    CHECK(force_prop(m, r, Formula::top()));
    CHECK_FALSE(force_prop(m, r, parse_formula("p", Lang::Prop)));
    CHECK(force_prop(m, r, parse_formula("~~p", Lang::Prop)));
    CHECK_THROWS_AS(force_prop(m, 5, Formula::top()), Error);
    CHECK_THROWS_AS(force_prop(m, r, parse_formula("exists x. P(x)", Lang::FirstOrder)), Error);
}

TEST_CASE("check_persistence finds no violations on valid models") {
    auto m = two_chain();
    std::vector<Formula> fs{parse_formula("p", Lang::Prop), parse_formula("~p", Lang::Prop),
                            parse_formula("p -> q", Lang::Prop)};
    CHECK(check_persistence(m, fs).ok());

    auto one = PropKripkeModel::from_cover({"v"}, {}, {});
    CHECK(check_persistence(one, fs).ok());

    Rng rng(42);
    std::vector<std::string> atoms{"p", "q", "r"};
    for (int i = 0; i < 100; ++i) {
        PropKripkeModel rm = random_prop_model(rng, 5, atoms);
        std::vector<Formula> rfs;
        for (int k = 0; k < 3; ++k) rfs.push_back(random_prop_formula(rng, atoms, 6));
        CHECK(check_persistence(rm, rfs).ok());
    }
}

TEST_CASE("enumerate_finite_trees counts and shapes") {
    CHECK(enumerate_finite_trees(1).size() == 1);
    CHECK(enumerate_finite_trees(2).size() == 2);
    CHECK(enumerate_finite_trees(3).size() == 4);

    // against the independent census, exactly once each
    for (int n = 1; n <= 6; ++n) {
        std::size_t expected = 0;
        for (int k = 1; k <= n; ++k) expected += tree_census(k).size();
        auto frames = enumerate_finite_trees(n);
        CHECK(frames.size() == expected);
        // every frame is a rooted tree poset with the root at node 0
        std::set<std::string> seen;
        for (const auto& fr : frames) {
            for (std::size_t v = 0; v < fr.node_count(); ++v) CHECK(fr.leq(0, static_cast<int>(v)));
            // rebuild the AHU code from the cover relation
            auto cover = fr.cover_pairs();
            std::vector<std::vector<int>> children(fr.node_count());
            for (auto [lo, hi] : cover) children[lo].push_back(hi);
            auto rec = [&](auto&& self, int v) -> std::string {
                std::vector<std::string> cs;
                for (int w : children[v]) cs.push_back(self(self, w));
                std::sort(cs.begin(), cs.end());
                std::string out = "(";
                for (auto& c : cs) out += c;
                return out + ")";
            };
            std::string code = rec(rec, 0) + ":" + std::to_string(fr.node_count());
            CHECK(seen.insert(code).second);  // no duplicates up to isomorphism
        }
    }
}

TEST_CASE("up_sets of small frames") {
    auto frames = enumerate_finite_trees(2);
    // one-node frame: {} and {n0}
    CHECK(up_sets(frames[0]).size() == 2);
    // two-chain: {}, {top}, {both}
    CHECK(up_sets(frames[1]).size() == 3);
}
