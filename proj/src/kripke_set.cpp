#include "wb/kripke_set.hpp"

#include <algorithm>
#include <functional>

#include "wb/syntax.hpp"

namespace wb {

int SetKripkeModel::node_index(const std::string& name) const {
    for (int i = 0; i < node_count(); ++i)
        if (nodes[i] == name) return i;
    throw Error("unknown node '" + name + "'");
}

int SetKripkeModel::transport(int v, int w, int e) const {
    if (v == w) return e;
    auto it = trans.find({v, w});
    if (it == trans.end()) throw Error("missing transition " + nodes[v] + " -> " + nodes[w]);
    if (e < 0 || e >= static_cast<int>(it->second.size()))
        throw Error("transition " + nodes[v] + " -> " + nodes[w] + " is not total");
    return it->second[e];
}

std::vector<int> SetKripkeModel::nodes_above(int v) const {
    std::vector<int> out;
    for (int w = 0; w < node_count(); ++w)
        if (leq[v][w]) out.push_back(w);
    return out;
}

std::vector<int> SetKripkeModel::minimal_nodes() const {
    std::vector<int> out;
    for (int v = 0; v < node_count(); ++v) {
        bool minimal = true;
        for (int u = 0; u < node_count(); ++u)
            if (u != v && leq[u][v]) minimal = false;
        if (minimal) out.push_back(v);
    }
    return out;
}

std::set<int> SetKripkeModel::extension(int v, int e) const {
    std::set<int> out;
    for (const auto& [a, b] : mem[v])
        if (b == e) out.insert(a);
    return out;
}

int SetKripkeModel::depth_rank(int v, int e) const {
    std::vector<int> state(dom[v].size(), 0), memo(dom[v].size(), 0);
    auto rec = [&](auto&& self, int x) -> int {
        if (state[x] == 1) throw Error("membership cycle in node '" + nodes[v] + "'");
        if (state[x] == 2) return memo[x];
        state[x] = 1;
        int r = 0;
        for (int m : extension(v, x)) r = std::max(r, self(self, m) + 1);
        state[x] = 2;
        memo[x] = r;
        return r;
    };
    return rec(rec, e);
}

SetKripkeModel SetKripkeModel::one_node(const ClassicalSetModel& m, const std::string& node_name) {
    if (m.size() == 0) throw Error("Kripke node domains must be nonempty");
    SetKripkeModel out;
    out.nodes = {node_name};
    out.leq = {{true}};
    out.dom.emplace_back();
    for (int e = 0; e < m.size(); ++e) out.dom[0].push_back(m.name(e));
    out.mem.emplace_back();
    for (int e = 0; e < m.size(); ++e)
        for (int a : m.members(e)) out.mem[0].insert({a, e});
    return out;
}

void SetKripkeModel::complete_transitions() {
    int n = node_count();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v || !leq[u][v] || !trans.count({u, v})) continue;
                for (int w = 0; w < n; ++w) {
                    if (w == v || w == u || !leq[v][w] || !trans.count({v, w})) continue;
                    if (trans.count({u, w})) continue;
                    const auto& first = trans.at({u, v});
                    const auto& second = trans.at({v, w});
                    std::vector<int> composed;
                    for (int e : first)
                        composed.push_back(e >= 0 && e < static_cast<int>(second.size()) ? second[e]
                                                                                         : -1);
                    trans[{u, w}] = std::move(composed);
                    changed = true;
                }
            }
    }
}

CoherenceReport check_coherence(const SetKripkeModel& m) {
    CoherenceReport report;
    int n = m.node_count();
    auto complain = [&](const std::string& s) { report.violations.push_back(s); };

    if (static_cast<int>(m.leq.size()) != n || static_cast<int>(m.dom.size()) != n ||
        static_cast<int>(m.mem.size()) != n) {
        complain("component sizes disagree with node count");
        return report;
    }
    for (int v = 0; v < n; ++v) {
        if (!m.leq[v][v]) complain("order not reflexive at '" + m.nodes[v] + "'");
        if (m.dom[v].empty()) complain("empty domain at '" + m.nodes[v] + "'");
        for (int w = 0; w < n; ++w) {
            if (v != w && m.leq[v][w] && m.leq[w][v])
                complain("order not antisymmetric: '" + m.nodes[v] + "', '" + m.nodes[w] + "'");
            for (int u = 0; u < n; ++u)
                if (m.leq[v][w] && m.leq[w][u] && !m.leq[v][u])
                    complain("order not transitive: '" + m.nodes[v] + "' <= '" + m.nodes[w] +
                             "' <= '" + m.nodes[u] + "'");
        }
    }
    for (int v = 0; v < n; ++v)
        for (const auto& [a, b] : m.mem[v])
            if (a < 0 || b < 0 || a >= m.domain_size(v) || b >= m.domain_size(v))
                complain("membership at '" + m.nodes[v] + "' references unknown elements");

    // transitions: totality, identity omitted, functoriality
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) {
            if (v == w || !m.leq[v][w]) continue;
            auto it = m.trans.find({v, w});
            if (it == m.trans.end()) {
                complain("missing transition " + m.nodes[v] + " -> " + m.nodes[w]);
                continue;
            }
            if (static_cast<int>(it->second.size()) != m.domain_size(v)) {
                complain("transition " + m.nodes[v] + " -> " + m.nodes[w] + " is not total");
                continue;
            }
            for (int e : it->second)
                if (e < 0 || e >= m.domain_size(w))
                    complain("transition " + m.nodes[v] + " -> " + m.nodes[w] +
                             " maps outside the target domain");
        }
    for (const auto& [vw, f] : m.trans) {
        auto [v, w] = vw;
        if (v == w || !m.leq[v][w]) complain("transition on non-comparable pair");
        (void)f;
    }
    if (!report.violations.empty()) return report;

    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w) {
                if (!(m.leq[u][v] && m.leq[v][w])) continue;
                for (int e = 0; e < m.domain_size(u); ++e)
                    if (m.transport(v, w, m.transport(u, v, e)) != m.transport(u, w, e)) {
                        complain("functoriality fails at " + m.nodes[u] + " -> " + m.nodes[v] +
                                 " -> " + m.nodes[w] + " on element " + m.dom[u][e]);
                        break;
                    }
            }
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) {
            if (v == w || !m.leq[v][w]) continue;
            for (const auto& [a, b] : m.mem[v])
                if (!m.member(w, m.transport(v, w, a), m.transport(v, w, b)))
                    complain("atomic persistence fails: " + m.dom[v][a] + " in " + m.dom[v][b] +
                             " at '" + m.nodes[v] + "' but not at '" + m.nodes[w] + "'");
        }
    return report;
}

bool force_set(const SetKripkeModel& m, int v, const Formula& f, const Env& env) {
    if (v < 0 || v >= m.node_count()) throw Error("unknown node index");
    if (f.has_fo_atoms())
        throw Error("force_set handles membership-language formulas");
    auto transported = [&](int w) {
        Env out;
        for (const auto& [var, e] : env) out[var] = m.transport(v, w, e);
        return out;
    };
    switch (f.kind()) {
        case Kind::Top:
            return true;
        case Kind::Bot:
            return false;
        case Kind::Atom: {
            if (f.args().size() != 2) throw Error("force_set: atom '" + f.pred() + "' is not a membership atom");
            auto lookup = [&](const std::string& var) {
                auto it = env.find(var);
                if (it == env.end()) throw Error("unbound variable '" + var + "'");
                if (it->second < 0 || it->second >= m.domain_size(v))
                    throw Error("environment value outside the domain of '" + m.nodes[v] + "'");
                return it->second;
            };
            int a = lookup(f.args()[0]);
            int b = lookup(f.args()[1]);
            return f.pred() == "in" ? m.member(v, a, b) : a == b;
        }
        case Kind::And:
            return force_set(m, v, f.lhs(), env) && force_set(m, v, f.rhs(), env);
        case Kind::Or:
            return force_set(m, v, f.lhs(), env) || force_set(m, v, f.rhs(), env);
        case Kind::Exists: {
            Env e = env;
            for (int d = 0; d < m.domain_size(v); ++d) {
                e[f.var()] = d;
                if (force_set(m, v, f.body(), e)) return true;
            }
            return false;
        }
        case Kind::Implies:
            for (int w : m.nodes_above(v)) {
                Env ew = transported(w);
                if (force_set(m, w, f.lhs(), ew) && !force_set(m, w, f.rhs(), ew)) return false;
            }
            return true;
        case Kind::Not:
            for (int w : m.nodes_above(v))
                if (force_set(m, w, f.body(), transported(w))) return false;
            return true;
        case Kind::Forall:
            for (int w : m.nodes_above(v)) {
                Env ew = transported(w);
                for (int d = 0; d < m.domain_size(w); ++d) {
                    ew[f.var()] = d;
                    if (!force_set(m, w, f.body(), ew)) return false;
                }
            }
            return true;
    }
    throw Error("unreachable");
}

SetKripkeModel disjoint_union(const std::vector<SetKripkeModel>& ms) {
    if (ms.empty()) throw Error("disjoint_union of no models");
    std::set<std::string> seen;
    bool collision = false;
    for (const auto& m : ms)
        for (const auto& name : m.nodes)
            if (!seen.insert(name).second) collision = true;

    SetKripkeModel out;
    int offset = 0;
    for (std::size_t k = 0; k < ms.size(); ++k) {
        const auto& m = ms[k];
        for (const auto& name : m.nodes)
            out.nodes.push_back(collision ? std::to_string(k) + ":" + name : name);
        out.dom.insert(out.dom.end(), m.dom.begin(), m.dom.end());
        out.mem.insert(out.mem.end(), m.mem.begin(), m.mem.end());
        for (const auto& [vw, f] : m.trans)
            out.trans[{vw.first + offset, vw.second + offset}] = f;
        offset += m.node_count();
    }
    int n = offset;
    out.leq.assign(n, std::vector<bool>(n, false));
    offset = 0;
    for (const auto& m : ms) {
        for (int v = 0; v < m.node_count(); ++v)
            for (int w = 0; w < m.node_count(); ++w)
                if (m.leq[v][w]) out.leq[offset + v][offset + w] = true;
        offset += m.node_count();
    }
    return out;
}

Formula function_space_formula(const std::string& f, const std::string& a, const std::string& b) {
    auto in = [](const std::string& x, const std::string& y) { return Formula::in(x, y); };
    auto eq = [](const std::string& x, const std::string& y) { return Formula::eq(x, y); };
    auto fa = [](std::string v, Formula g) { return Formula::forall(std::move(v), std::move(g)); };
    auto ex = [](std::string v, Formula g) { return Formula::exists(std::move(v), std::move(g)); };

    // sing(s, x): s = {x}
    auto sing = [&](const std::string& s, const std::string& x) {
        return Formula::conj(in(x, s), fa("qu", Formula::implies(in("qu", s), eq("qu", x))));
    };
    // two(t, x, y): t = {x, y}
    auto two = [&](const std::string& t, const std::string& x, const std::string& y) {
        return Formula::conj(
            Formula::conj(in(x, t), in(y, t)),
            fa("qu", Formula::implies(in("qu", t), Formula::disj(eq("qu", x), eq("qu", y)))));
    };
    // kpair(p, x, y): p = {{x}, {x,y}}
    auto kpair = [&](const std::string& p, const std::string& x, const std::string& y) {
        Formula shape = fa(
            "qw", Formula::implies(in("qw", p), Formula::disj(sing("qw", x), two("qw", x, y))));
        Formula has_sing = ex("qs", Formula::conj(in("qs", p), sing("qs", x)));
        Formula has_two = ex("qt", Formula::conj(in("qt", p), two("qt", x, y)));
        return Formula::conj(Formula::conj(has_sing, has_two), shape);
    };
    // graph(f, x, y): some pair in f codes (x, y)
    auto graph = [&](const std::string& x, const std::string& y) {
        return ex("qp", Formula::conj(in("qp", f), kpair("qp", x, y)));
    };

    Formula pairs_ok = fa(
        "qp", Formula::implies(in("qp", f),
                               ex("qx", Formula::conj(in("qx", a),
                                                      ex("qy", Formula::conj(in("qy", b),
                                                                             kpair("qp", "qx", "qy")))))));
    Formula total_functional = fa(
        "qa",
        Formula::implies(
            in("qa", a),
            ex("qb", Formula::conj(Formula::conj(in("qb", b), graph("qa", "qb")),
                                   fa("qc", Formula::implies(
                                                Formula::conj(in("qc", b), graph("qa", "qc")),
                                                eq("qc", "qb")))))));
    return Formula::conj(pairs_ok, total_functional);
}

bool is_delta0(const Formula& f) {
    switch (f.kind()) {
        case Kind::Atom:
        case Kind::Top:
        case Kind::Bot:
            return true;
        case Kind::Not:
            return is_delta0(f.body());
        case Kind::And:
        case Kind::Or:
        case Kind::Implies:
            return is_delta0(f.lhs()) && is_delta0(f.rhs());
        case Kind::Forall: {
            const Formula& b = f.body();
            if (b.kind() != Kind::Implies) return false;
            const Formula& g = b.lhs();
            if (!(g.kind() == Kind::Atom && g.pred() == "in" && g.args()[0] == f.var() &&
                  g.args()[1] != f.var()))
                return false;
            return is_delta0(b.rhs());
        }
        case Kind::Exists: {
            const Formula& b = f.body();
            if (b.kind() != Kind::And) return false;
            const Formula& g = b.lhs();
            if (!(g.kind() == Kind::Atom && g.pred() == "in" && g.args()[0] == f.var() &&
                  g.args()[1] != f.var()))
                return false;
            return is_delta0(b.rhs());
        }
    }
    return false;
}

namespace {

// Elements of depth <= bound at a node, in index order.
std::vector<int> graded_elements(const SetKripkeModel& m, int v, int bound) {
    std::vector<int> out;
    for (int e = 0; e < m.domain_size(v); ++e)
        if (m.depth_rank(v, e) <= bound) out.push_back(e);
    return out;
}

struct AxiomContext {
    const SetKripkeModel& m;
    AxiomReport& report;
    int rank_bound;

    void fail(int node, const std::string& what) {
        report.failures.push_back("at '" + m.nodes[node] + "': " + what);
    }
};

// Runs `check` for every node w >= v and every tuple of graded elements,
// recording failures.
void for_graded_tuples(AxiomContext& cx, int v, int tuple_size,
                       const std::function<void(int w, const std::vector<int>&)>& check) {
    for (int w : cx.m.nodes_above(v)) {
        std::vector<int> pool = graded_elements(cx.m, w, cx.rank_bound);
        std::vector<int> tuple(tuple_size, 0);
        std::vector<std::size_t> pick(tuple_size, 0);
        if (pool.empty() && tuple_size > 0) continue;
        while (true) {
            for (int i = 0; i < tuple_size; ++i) tuple[i] = pool[pick[i]];
            check(w, tuple);
            int i = 0;
            for (; i < tuple_size; ++i) {
                if (++pick[i] < pool.size()) break;
                pick[i] = 0;
            }
            if (i == tuple_size) break;
        }
        if (tuple_size == 0) continue;
    }
}

// Fig-style parameters: free variables of phi other than the designated
// ones, sorted; they range over graded elements alongside the main tuple.
std::vector<std::string> phi_params(const Formula& phi, const std::vector<std::string>& designated) {
    std::vector<std::string> out;
    for (const auto& fv : phi.free_vars())
        if (std::find(designated.begin(), designated.end(), fv) == designated.end())
            out.push_back(fv);
    return out;
}

std::string elem_name(const SetKripkeModel& m, int w, int e) { return m.dom[w][e]; }

}  // namespace

const std::vector<std::string>& axiom_names() {
    static const std::vector<std::string> names = {
        "extensionality", "pair",           "union",          "emptyset",
        "separation",     "bounded-separation", "replacement", "powerset",
        "ein-induction",  "exponentiation", "strong-infinity"};
    return names;
}

AxiomReport check_axiom(const SetKripkeModel& m, const AxiomSpec& axiom, int v, int rank_bound) {
    AxiomReport report;
    report.axiom = axiom.name;
    report.node = m.nodes.at(v);
    AxiomContext cx{m, report, rank_bound};

    auto witness_pool = [&](int w) { return graded_elements(m, w, rank_bound + 1); };

    const std::string& ax = axiom.name;
    if (ax == "extensionality") {
        Formula same_members = parse_formula(
            "forall q. ((q in wx -> q in wy) & (q in wy -> q in wx))", Lang::SetTheory);
        for_graded_tuples(cx, v, 2, [&](int w, const std::vector<int>& t) {
            Env env{{"wx", t[0]}, {"wy", t[1]}};
            if (force_set(m, w, same_members, env) && t[0] != t[1])
                cx.fail(w, "extensionality: " + elem_name(m, w, t[0]) + " and " +
                               elem_name(m, w, t[1]) + " force the same members but differ");
        });
    } else if (ax == "pair") {
        Formula cond = parse_formula(
            "forall q. ((q in wz -> (q = wx | q = wy)) & ((q = wx | q = wy) -> q in wz))",
            Lang::SetTheory);
        for_graded_tuples(cx, v, 2, [&](int w, const std::vector<int>& t) {
            for (int z : witness_pool(w)) {
                Env env{{"wx", t[0]}, {"wy", t[1]}, {"wz", z}};
                if (force_set(m, w, cond, env)) return;
            }
            cx.fail(w, "pair: no witness for {" + elem_name(m, w, t[0]) + "," +
                           elem_name(m, w, t[1]) + "}");
        });
    } else if (ax == "union") {
        Formula cond = parse_formula(
            "forall q. ((q in wu -> exists t. (t in wx & q in t)) & ((exists t. (t in wx & q in t)) -> q in wu))",
            Lang::SetTheory);
        for_graded_tuples(cx, v, 1, [&](int w, const std::vector<int>& t) {
            for (int u : witness_pool(w)) {
                Env env{{"wx", t[0]}, {"wu", u}};
                if (force_set(m, w, cond, env)) return;
            }
            cx.fail(w, "union: no witness for " + elem_name(m, w, t[0]));
        });
    } else if (ax == "emptyset") {
        Formula cond = parse_formula("forall q. ~(q in we)", Lang::SetTheory);
        bool found = false;
        for (int e : witness_pool(v))
            if (force_set(m, v, cond, Env{{"we", e}})) {
                found = true;
                break;
            }
        if (!found) cx.fail(v, "emptyset: no element forces emptiness");
    } else if (ax == "separation" || ax == "bounded-separation") {
        if (!axiom.phi) throw Error(ax + " needs a scheme formula");
        const Formula& phi = *axiom.phi;
        if (phi.has_fo_atoms()) throw Error("scheme formula must be in the membership language");
        if (ax == "bounded-separation" && !is_delta0(phi))
            throw Error("bounded-separation requires a Delta0 formula");
        std::vector<std::string> params = phi_params(phi, {"z"});
        int extra = static_cast<int>(params.size());
        for_graded_tuples(cx, v, 1 + extra, [&](int w, const std::vector<int>& t) {
            Env base;
            for (int i = 0; i < extra; ++i) base[params[i]] = t[1 + i];
            for (int s : witness_pool(w)) {
                bool good = true;
                // s separates phi from t[0] iff that holds at every w' >= w
                for (int w2 : m.nodes_above(w)) {
                    Env env2;
                    for (const auto& [var, e] : base) env2[var] = m.transport(w, w2, e);
                    int x2 = m.transport(w, w2, t[0]);
                    int s2 = m.transport(w, w2, s);
                    for (int z = 0; z < m.domain_size(w2) && good; ++z) {
                        env2["z"] = z;
                        bool in_s = m.member(w2, z, s2);
                        bool in_x = m.member(w2, z, x2);
                        bool holds = force_set(m, w2, phi, env2);
                        if (in_s != (in_x && holds)) good = false;
                    }
                    if (!good) break;
                }
                if (good) return;
            }
            cx.fail(w, ax + ": no witness separating from " + elem_name(m, w, t[0]));
        });
    } else if (ax == "replacement") {
        if (!axiom.phi) throw Error("replacement needs a scheme formula");
        const Formula& phi = *axiom.phi;
        std::vector<std::string> params = phi_params(phi, {"y", "z"});
        int extra = static_cast<int>(params.size());
        for_graded_tuples(cx, v, 1 + extra, [&](int w, const std::vector<int>& t) {
            Env base;
            for (int i = 0; i < extra; ++i) base[params[i]] = t[1 + i];
            // functionality premise: forall y in x there is a unique z with phi
            auto unique_at = [&](int w2, const Env& env2, int y) -> std::optional<int> {
                std::optional<int> found;
                Env e = env2;
                e["y"] = y;
                for (int z = 0; z < m.domain_size(w2); ++z) {
                    e["z"] = z;
                    if (force_set(m, w2, phi, e)) {
                        if (found) return std::nullopt;
                        found = z;
                    }
                }
                return found;
            };
            bool premise = true;
            for (int w2 : m.nodes_above(w) ) {
                Env env2;
                for (const auto& [var, e] : base) env2[var] = m.transport(w, w2, e);
                int x2 = m.transport(w, w2, t[0]);
                for (int y = 0; y < m.domain_size(w2) && premise; ++y)
                    if (m.member(w2, y, x2) && !unique_at(w2, env2, y)) premise = false;
                if (!premise) break;
            }
            if (!premise) return;  // instance holds vacuously
            for (int a : witness_pool(w)) {
                bool good = true;
                for (int w2 : m.nodes_above(w)) {
                    Env env2;
                    for (const auto& [var, e] : base) env2[var] = m.transport(w, w2, e);
                    int x2 = m.transport(w, w2, t[0]);
                    int a2 = m.transport(w, w2, a);
                    for (int y = 0; y < m.domain_size(w2) && good; ++y) {
                        if (!m.member(w2, y, x2)) continue;
                        auto z = unique_at(w2, env2, y);
                        if (!z || !m.member(w2, *z, a2)) good = false;
                    }
                    if (!good) break;
                }
                if (good) return;
            }
            cx.fail(w, "replacement: no witness collecting the image of " + elem_name(m, w, t[0]));
        });
    } else if (ax == "powerset") {
        Formula subset = parse_formula("forall q. (q in wy -> q in wx)", Lang::SetTheory);
        for_graded_tuples(cx, v, 1, [&](int w, const std::vector<int>& t) {
            for (int p : witness_pool(w)) {
                bool good = true;
                for (int w2 : m.nodes_above(w) ) {
                    int x2 = m.transport(w, w2, t[0]);
                    int p2 = m.transport(w, w2, p);
                    for (int y = 0; y < m.domain_size(w2) && good; ++y) {
                        bool in_p = m.member(w2, y, p2);
                        bool is_subset = force_set(m, w2, subset, Env{{"wy", y}, {"wx", x2}});
                        if (in_p != is_subset) good = false;
                    }
                    if (!good) break;
                }
                if (good) return;
            }
            cx.fail(w, "powerset: no witness for " + elem_name(m, w, t[0]));
        });
    } else if (ax == "ein-induction") {
        if (!axiom.phi) throw Error("ein-induction needs a scheme formula");
        const Formula& phi = *axiom.phi;
        std::vector<std::string> params = phi_params(phi, {"x"});
        int extra = static_cast<int>(params.size());
        for_graded_tuples(cx, v, extra, [&](int w, const std::vector<int>& t) {
            Env base;
            for (int i = 0; i < extra; ++i) base[params[i]] = t[i];
            // premise: forall x (forall y in x phi(y) -> phi(x)) at w
            bool premise = true;
            for (int w2 : m.nodes_above(w)) {
                Env env2;
                for (const auto& [var, e] : base) env2[var] = m.transport(w, w2, e);
                for (int x = 0; x < m.domain_size(w2) && premise; ++x) {
                    // forall y in x phi(y) at w2
                    bool all_members = true;
                    for (int w3 : m.nodes_above(w2)) {
                        Env env3;
                        for (const auto& [var, e] : env2) env3[var] = m.transport(w2, w3, e);
                        int x3 = m.transport(w2, w3, x);
                        for (int y = 0; y < m.domain_size(w3) && all_members; ++y)
                            if (m.member(w3, y, x3)) {
                                env3["x"] = y;
                                if (!force_set(m, w3, phi, env3)) all_members = false;
                            }
                        if (!all_members) break;
                    }
                    if (all_members) {
                        env2["x"] = x;
                        if (!force_set(m, w2, phi, env2)) premise = false;
                    }
                }
                if (!premise) break;
            }
            if (!premise) return;  // vacuous
            for (int w2 : m.nodes_above(w)) {
                Env env2;
                for (const auto& [var, e] : base) env2[var] = m.transport(w, w2, e);
                for (int x = 0; x < m.domain_size(w2); ++x) {
                    env2["x"] = x;
                    if (!force_set(m, w2, phi, env2))
                        cx.fail(w2, "ein-induction: premise forced but phi fails on " +
                                        elem_name(m, w2, x));
                }
            }
        });
    } else if (ax == "exponentiation") {
        Formula is_func = function_space_formula("wf", "wa", "wb");
        for_graded_tuples(cx, v, 2, [&](int w, const std::vector<int>& t) {
            for (int z : witness_pool(w)) {
                bool good = true;
                for (int w2 : m.nodes_above(w)) {
                    int a2 = m.transport(w, w2, t[0]);
                    int b2 = m.transport(w, w2, t[1]);
                    int z2 = m.transport(w, w2, z);
                    for (int g = 0; g < m.domain_size(w2) && good; ++g) {
                        bool in_z = m.member(w2, g, z2);
                        bool func = force_set(m, w2, is_func, Env{{"wf", g}, {"wa", a2}, {"wb", b2}});
                        if (in_z != func) good = false;
                    }
                    if (!good) break;
                }
                if (good) return;
            }
            cx.fail(w, "exponentiation: no witness for functions " + elem_name(m, w, t[0]) +
                           " -> " + elem_name(m, w, t[1]));
        });
    } else if (ax == "strong-infinity") {
        // bounded approximation: the von Neumann chain 0..n_max exists at v
        // and some graded element contains it
        report.note = "bounded approximation up to " + std::to_string(axiom.n_max) +
                      "; leastness not checked";
        std::vector<int> chain;
        std::optional<int> zero;
        for (int e = 0; e < m.domain_size(v); ++e)
            if (m.extension(v, e).empty()) {
                zero = e;
                break;
            }
        if (!zero) {
            cx.fail(v, "strong-infinity: no empty set at the node");
        } else {
            chain.push_back(*zero);
            for (int k = 0; k < axiom.n_max; ++k) {
                std::set<int> next_ext = m.extension(v, chain.back());
                next_ext.insert(chain.back());
                std::optional<int> next;
                for (int e = 0; e < m.domain_size(v); ++e)
                    if (m.extension(v, e) == next_ext) {
                        next = e;
                        break;
                    }
                if (!next) {
                    cx.fail(v, "strong-infinity: von Neumann " + std::to_string(k + 1) +
                                   " is missing");
                    break;
                }
                chain.push_back(*next);
            }
            if (static_cast<int>(chain.size()) == axiom.n_max + 1) {
                bool found = false;
                for (int e = 0; e < m.domain_size(v) && !found; ++e) {
                    bool contains_all = true;
                    for (int c : chain)
                        if (!m.member(v, c, e)) contains_all = false;
                    if (contains_all) found = true;
                }
                if (!found)
                    cx.fail(v, "strong-infinity: no set contains the bounded chain");
            }
        }
    } else {
        throw Error("unsupported axiom '" + ax + "'");
    }
    return report;
}

}  // namespace wb
