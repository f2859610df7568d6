#include <doctest.h>

#include "wb/generators.hpp"
#include "wb/root_extension.hpp"
#include "wb/syntax.hpp"

using namespace wb;

namespace {

Formula S(const std::string& s) { return parse_formula(s, Lang::SetTheory); }

RootExtension extend_vrank(int n, int alpha = 2, int cap = 64) {
    RootExtensionConfig cfg;
    cfg.alpha_max = alpha;
    cfg.width_cap = cap;
    return extend(SetKripkeModel::one_node(vrank_model(n)), cfg);
}

}  // namespace

TEST_CASE("extend over V1: the second stratum is empty") {
    auto ext = extend_vrank(1);
    // rank 1: one upper family (the single element), empty member set;
    // rank 2: {e} is incompatible since e(v) is never a member of the empty set
    REQUIRE(ext.element_count() == 1);
    CHECK(ext.elements()[0].rank == 1);
    CHECK(ext.elements()[0].root_members.empty());
    CHECK(validate_extension(ext).empty());
    CHECK(check_coherence(ext.model()).ok());
}

TEST_CASE("extend over V2: exactly one rank-2 element") {
    auto ext = extend_vrank(2);
    // rank 1: one element per V2 element; rank 2: only x(r) = {e_empty},
    // x(v) = {emptyset}
    REQUIRE(ext.element_count() == 3);
    CHECK(ext.elements()[0].rank == 1);
    CHECK(ext.elements()[1].rank == 1);
    CHECK(ext.elements()[2].rank == 2);
    const auto& top = ext.elements()[2];
    const auto v2 = vrank_model(2);
    // its member is the rank-1 element over the empty set
    REQUIRE(top.root_members.size() == 1);
    int member = top.root_members[0];
    CHECK(ext.base().extension(0, ext.elements()[member].upper[0]).empty());
    CHECK(ext.base().extension(0, top.upper[0]) == std::set<int>{*v2.find_empty()});
    CHECK(validate_extension(ext).empty());
}

TEST_CASE("extension restriction is bit-identical and coherent") {
    Rng rng(4242);
    for (int i = 0; i < 25; ++i) {
        SetKripkeModel m = random_set_model(rng, 3, 3);
        RootExtensionConfig cfg;
        cfg.alpha_max = 2;
        cfg.width_cap = 4096;
        RootExtension ext = extend(m, cfg);
        const SetKripkeModel& mp = ext.model();
        int r = ext.root();
        // restriction identity, field by field
        CHECK(std::vector<std::string>(mp.nodes.begin(), mp.nodes.end() - 1) == m.nodes);
        CHECK(std::vector<std::vector<std::string>>(mp.dom.begin(), mp.dom.end() - 1) == m.dom);
        for (int v = 0; v < m.node_count(); ++v) CHECK(mp.mem[v] == m.mem[v]);
        for (const auto& [vw, f] : m.trans) CHECK(mp.trans.at(vw) == f);
        for (int v = 0; v <= m.node_count(); ++v) CHECK(mp.leq[r][v]);
        CHECK(check_coherence(mp).ok());
        CHECK(validate_extension(ext).empty());
        // E_r is well-founded and rank-decreasing
        for (const auto& [y, x] : mp.mem[r])
            CHECK(ext.elements()[y].rank < ext.elements()[x].rank);
    }
}

TEST_CASE("extension persistence from the new root") {
    Rng rng(888);
    for (int i = 0; i < 30; ++i) {
        SetKripkeModel m = random_set_model(rng, 3, 3);
        RootExtensionConfig cfg;
        cfg.alpha_max = 1;
        cfg.width_cap = 4096;
        RootExtension ext = extend(m, cfg);
        Formula f = random_set_sentence(rng, 3 + i % 6);
        if (force_set(ext.model(), ext.root(), f))
            for (int v = 0; v < m.node_count(); ++v) CHECK(force_set(ext.model(), v, f));
    }
}

TEST_CASE("witness_empty") {
    for (int n : {1, 2, 3}) {
        auto ext = extend_vrank(n);
        int e = witness_empty(ext);
        CHECK(ext.elements()[e].root_members.empty());
        CHECK(ext.base().extension(0, ext.elements()[e].upper[0]).empty());
        CHECK(force_set(ext.model(), ext.root(), S("forall y. ~(y in we)"), Env{{"we", e}}));
    }
    // a leaf without an empty set
    ClassicalSetModel loopy({"a", "b"}, {{1}, {0}});  // cyclic, but no empty element
    auto m = SetKripkeModel::one_node(loopy);
    RootExtensionConfig cfg;
    cfg.lazy = true;
    auto ext = extend(m, cfg);
    CHECK_THROWS_AS(witness_empty(ext), WitnessError);
}

TEST_CASE("witness_pair over V2 and V3") {
    {
        auto ext = extend_vrank(2);
        int e = witness_empty(ext);
        int p = witness_pair(ext, e, e);
        CHECK(ext.elements()[p].root_members == std::vector<int>{e});
        auto v2 = vrank_model(2);
        CHECK(ext.base().extension(0, ext.elements()[p].upper[0]) ==
              std::set<int>{*v2.find_empty()});
        // the Fig-style pair condition holds at the root over the fragment
        Formula cond = S("forall q. ((q in wz -> (q = wx | q = wy)) & ((q = wx | q = wy) -> q in wz))");
        CHECK(force_set(ext.model(), ext.root(), cond, Env{{"wz", p}, {"wx", e}, {"wy", e}}));
        // a top-rank pair does not exist in the finite stage
        int s = ext.element_count() - 1;  // the rank-2 element over {emptyset}
        CHECK_THROWS_AS(witness_pair(ext, s, s), WitnessError);
    }
    {
        auto ext = extend_vrank(3);
        int e = witness_empty(ext);
        // e' = the rank-1 element over {emptyset}
        auto v3 = vrank_model(3);
        int target = *v3.find_pair(*v3.find_empty(), *v3.find_empty());
        int eprime = -1;
        for (int i = 0; i < ext.element_count(); ++i)
            if (ext.elements()[i].rank == 1 && ext.elements()[i].upper[0] == target) eprime = i;
        REQUIRE(eprime >= 0);
        int p = witness_pair(ext, e, eprime);
        CHECK(ext.base().extension(0, ext.elements()[p].upper[0]) ==
              std::set<int>{*v3.find_empty(), target});
        Formula cond = S("forall q. ((q in wz -> (q = wx | q = wy)) & ((q = wx | q = wy) -> q in wz))");
        CHECK(force_set(ext.model(), ext.root(), cond,
                        Env{{"wz", p}, {"wx", e}, {"wy", eprime}}));
    }
}

TEST_CASE("witness_union") {
    auto ext = extend_vrank(3, 3);  // pair-of-pair intermediates have rank 3
    int e = witness_empty(ext);
    // union of the empty set is empty-like
    int u0 = witness_union(ext, e);
    CHECK(ext.elements()[u0].root_members.empty());
    // union of {{e}} is {e}-like: build p = {e}, then q = {p}, then union(q) = p-like
    int p = witness_pair(ext, e, e);
    int q = witness_pair(ext, p, p);
    int u = witness_union(ext, q);
    CHECK(ext.elements()[u].root_members == std::vector<int>{e});
    Formula cond = S(
        "forall z. ((z in wu -> exists t. (t in wx & z in t)) & ((exists t. (t in wx & z in t)) -> z in wu))");
    CHECK(force_set(ext.model(), ext.root(), cond, Env{{"wu", u}, {"wx", q}}));
    // overflow: union needs q's member-sets' unions at the node; exceed the stage
    auto ext2 = extend_vrank(2, 3, 64);
    int e2 = witness_empty(ext2);
    int p2 = witness_pair(ext2, e2, e2);
    CHECK_THROWS_AS(witness_pair(ext2, p2, p2), WitnessError);  // {{emptyset}} not in V2
}

TEST_CASE("witness_separation with Delta0 instances") {
    auto ext = extend_vrank(3);
    int e = witness_empty(ext);
    int p = witness_pair(ext, e, e);

    // phi = true keeps everything: separating from p gives a p-like element
    int s_all = witness_separation(ext, p, Formula::top(), "z");
    CHECK(ext.elements()[s_all].root_members == ext.elements()[p].root_members);
    // phi = false empties it
    int s_none = witness_separation(ext, p, Formula::bot(), "z");
    CHECK(ext.elements()[s_none].root_members.empty());
    // phi = "z in wp" with parameter wp = p: members of p that are in p
    int s_inp = witness_separation(ext, p, S("z in wp"), "z", {{"wp", p}});
    CHECK(ext.elements()[s_inp].root_members == std::vector<int>{e});
    // rank bound from the construction
    CHECK(ext.elements()[s_inp].rank <= ext.elements()[p].rank + 1);
    // the separation condition holds at the root over the fragment
    Formula cond = S("forall z. ((z in ws -> (z in wx & z in wp)) & ((z in wx & z in wp) -> z in ws))");
    CHECK(force_set(ext.model(), ext.root(), cond, Env{{"ws", s_inp}, {"wx", p}, {"wp", p}}));
}

TEST_CASE("witness_power") {
    auto ext = extend_vrank(3);
    int e = witness_empty(ext);
    int pw = witness_power(ext, e);
    // subsets of the empty set at the root: exactly the empty-like elements
    REQUIRE(ext.elements()[pw].root_members.size() >= 1);
    for (int y : ext.elements()[pw].root_members)
        CHECK(force_set(ext.model(), ext.root(), S("forall q. (q in wy -> q in wx)"),
                        Env{{"wy", y}, {"wx", e}}));
    // power of a rank-2 singleton over V3 (the power set element has rank 3)
    auto ext3 = extend_vrank(3, 3);
    int e3 = witness_empty(ext3);
    int p = witness_pair(ext3, e3, e3);
    int pwp = witness_power(ext3, p);
    Formula cond = S(
        "forall w. ((w in wz -> forall q. (q in w -> q in wx)) & ((forall q. (q in w -> q in wx)) -> w in wz))");
    CHECK(force_set(ext3.model(), ext3.root(), cond, Env{{"wz", pwp}, {"wx", p}}));
    // overflow at the top of V2
    auto ext2 = extend_vrank(2);
    int e2 = witness_empty(ext2);
    int p2 = witness_pair(ext2, e2, e2);
    CHECK_THROWS_AS(witness_power(ext2, p2), WitnessError);  // P({emptyset}) not in V2
}

TEST_CASE("witness_replacement") {
    auto ext = extend_vrank(3, 3);  // the image {{e}} has rank 3
    int e = witness_empty(ext);
    int p = witness_pair(ext, e, e);
    // identity instance: the image of p under z = y is p-like
    int a = witness_replacement(ext, p, S("z = y"), "y", "z");
    CHECK(ext.elements()[a].root_members == ext.elements()[p].root_members);
    // "z is the pair {y,y}" over V3: image of p = {e} is {{e}}-like
    Formula pairphi = S("forall q. ((q in z -> q = y) & (q = y -> q in z))");
    int b = witness_replacement(ext, p, pairphi, "y", "z");
    CHECK(ext.elements()[b].root_members == std::vector<int>{p});
    // non-functional instance errors with a counter-instantiation
    CHECK_THROWS_AS(witness_replacement(ext, p, S("z = z"), "y", "z"), WitnessError);
}

TEST_CASE("witness_exponentiation singleton instance") {
    for (int n : {2, 3}) {
        auto ext = extend_vrank(n);
        int e = witness_empty(ext);
        int z = witness_exponentiation(ext, e, e);
        // exactly one function: the empty one, which is the empty-set element
        CHECK(ext.elements()[z].root_members == std::vector<int>{e});
        Formula is_func = function_space_formula("wf", "wa", "wb");
        Formula cond = Formula::forall(
            "g", Formula::iff(S("g in wz"), function_space_formula("g", "wa", "wb")));
        CHECK(force_set(ext.model(), ext.root(), cond, Env{{"wz", z}, {"wa", e}, {"wb", e}}));
    }
    // V1 lacks {emptyset}, the node-level function space
    auto ext1 = extend_vrank(1);
    int e1 = witness_empty(ext1);
    CHECK_THROWS_AS(witness_exponentiation(ext1, e1, e1), WitnessError);
}

TEST_CASE("witness_strong_infinity") {
    RootExtensionConfig lazy;
    lazy.lazy = true;
    lazy.width_cap = 512;
    {
        auto ext = extend(SetKripkeModel::one_node(vrank_model(3)), lazy);
        auto chain = witness_strong_infinity(ext, 1);
        CHECK(chain.size() == 2);
    }
    {
        auto ext = extend(SetKripkeModel::one_node(vrank_model(4)), lazy);
        auto chain = witness_strong_infinity(ext, 2);
        CHECK(chain.size() == 3);
        // 2_r = {0_r, 1_r}
        CHECK(ext.elements()[chain[2]].root_members ==
              std::vector<int>{chain[0], chain[1]});
    }
    {
        auto ext = extend(SetKripkeModel::one_node(vrank_model(2)), lazy);
        CHECK_THROWS_AS(witness_strong_infinity(ext, 2), WitnessError);
    }
}

TEST_CASE("check_ein_induction") {
    auto ext = extend_vrank(3);
    auto r1 = check_ein_induction(ext, Formula::top(), 2);
    CHECK(r1.wellfounded);
    CHECK(r1.rank_decreasing);
    CHECK(r1.axiom.passed());
    auto r2 = check_ein_induction(ext, S("x = x"), 2);
    CHECK(r2.ok());
    // a Delta0 instance
    auto r3 = check_ein_induction(ext, S("forall q. (q in x -> q = q)"), 2);
    CHECK(r3.ok());
}

TEST_CASE("extensionality transfer at the root") {
    for (int n : {2, 3}) {
        auto ext = extend_vrank(n);
        Formula same = S("forall q. ((q in wx -> q in wy) & (q in wy -> q in wx))");
        for (int x = 0; x < ext.element_count(); ++x)
            for (int y = 0; y < ext.element_count(); ++y)
                if (force_set(ext.model(), ext.root(), same, Env{{"wx", x}, {"wy", y}}))
                    CHECK(x == y);
    }
}

TEST_CASE("dp_demo: the documented two-leaf configuration") {
    Formula phi = Formula::negate(cardinality_sentence(3, false));  // ~E_3, true in V2 only
    Formula psi = cardinality_sentence(3, false);                   // E_3, true in V3 only
    auto m1 = SetKripkeModel::one_node(vrank_model(3), "v3");       // refutes ~E_3
    auto m2 = SetKripkeModel::one_node(vrank_model(2), "v2");       // refutes E_3
    RootExtensionConfig cfg;
    cfg.alpha_max = 1;
    cfg.width_cap = 64;
    auto report = dp_demo(m1, m2, phi, psi, cfg);
    CHECK(report.ok);
    REQUIRE(report.facts.size() == 5);

    // trivial case
    auto trivial = dp_demo(m1, m2, Formula::bot(), Formula::bot(), cfg);
    CHECK(trivial.ok);

    // identical models, same unforced sentence on both sides
    auto twin = dp_demo(SetKripkeModel::one_node(vrank_model(2), "a"),
                        SetKripkeModel::one_node(vrank_model(2), "b"), psi, psi, cfg);
    CHECK(twin.ok);

    // precondition violation: V3 forces E_3
    CHECK_THROWS_AS(dp_demo(m1, m2, psi, psi, cfg), Error);
}

TEST_CASE("visser_semantic_demo with cardinality components") {
    // n = 1: sigma(a1) = E_2, sigma(b1) = E_3, sigma(a2) = exact-E_2,
    // sigma(a3) = exact-E_1; components V1, V3, V4
    Assignment sigma;
    sigma.set("a1", 0, cardinality_sentence(2, false));
    sigma.set("b1", 0, cardinality_sentence(3, false));
    sigma.set("a2", 0, cardinality_sentence(2, true));
    sigma.set("a3", 0, cardinality_sentence(1, true));
    std::vector<SetKripkeModel> ms{SetKripkeModel::one_node(vrank_model(1), "m1"),
                                   SetKripkeModel::one_node(vrank_model(3), "m2"),
                                   SetKripkeModel::one_node(vrank_model(4), "m3")};
    RootExtensionConfig cfg;
    cfg.alpha_max = 1;
    cfg.width_cap = 128;
    auto report = visser_semantic_demo(ms, sigma, 1, cfg);
    CHECK(report.ok);

    // degenerate components: every sigma(a_i) = false, implications vacuous
    Assignment degenerate;
    degenerate.set("a1", 0, Formula::bot());
    degenerate.set("b1", 0, Formula::bot());
    degenerate.set("a2", 0, Formula::bot());
    degenerate.set("a3", 0, Formula::bot());
    auto r2 = visser_semantic_demo(ms, degenerate, 1, cfg);
    CHECK(r2.ok);

    // precondition violation: V1 forces exact-E_1
    Assignment bad = sigma;
    bad.set("a1", 0, cardinality_sentence(1, true));
    CHECK_THROWS_AS(visser_semantic_demo(ms, bad, 1, cfg), Error);
}

TEST_CASE("width cap aborts with the rank reached") {
    SetKripkeModel big = SetKripkeModel::one_node(vrank_model(3));
    RootExtensionConfig cfg;
    cfg.alpha_max = 2;
    cfg.width_cap = 3;
    try {
        extend(big, cfg);
        FAIL("expected WidthCapError");
    } catch (const WidthCapError& e) {
        CHECK(e.rank_reached >= 1);
    }
}

TEST_CASE("lazy mode builds only witnesses") {
    RootExtensionConfig cfg;
    cfg.lazy = true;
    auto ext = extend(SetKripkeModel::one_node(vrank_model(3)), cfg);
    CHECK(ext.element_count() == 0);
    int e = witness_empty(ext);
    int p = witness_pair(ext, e, e);
    CHECK(ext.element_count() == 2);
    CHECK(ext.elements()[p].rank == 2);
    CHECK(validate_extension(ext).empty());
}
