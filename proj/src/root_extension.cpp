// The new-root model extension.
//
// Elements of the root domain are functions x with x(r) a set of previously
// constructed elements and x(v) an element of each original node's domain,
// subject to:
//   (a) x(r) contains only elements of strictly smaller rank,
//   (b) x(v) lies in D_v for every original node v,
//   (c) y in x(r) implies y(v) E_v x(v) for every v,
//   (d) x(w) = f_vw(x(v)) whenever v <= w.
// Enumeration proceeds stratum by stratum: the coherent upper families are
// computed once; a stratum-alpha element pairs a family with a compatible
// member set whose maximal rank is alpha - 1. Witness constructions locate
// (or, in lazy mode, create) specific elements and are re-verified by
// fragment forcing in the tests.

#include "wb/root_extension.hpp"

#include <algorithm>
#include <functional>

#include "wb/syntax.hpp"

namespace wb {

namespace {

// Linear extension of the node order: ascending strict-predecessor count.
std::vector<int> topo_order(const SetKripkeModel& m) {
    std::vector<std::pair<int, int>> keyed;
    for (int v = 0; v < m.node_count(); ++v) {
        int preds = 0;
        for (int u = 0; u < m.node_count(); ++u)
            if (u != v && m.leq[u][v]) ++preds;
        keyed.emplace_back(preds, v);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> out;
    for (auto& [k, v] : keyed) out.push_back(v);
    return out;
}

std::vector<std::vector<int>> enumerate_families(const SetKripkeModel& m) {
    std::vector<int> order = topo_order(m);
    std::vector<std::vector<int>> families;
    std::vector<int> vals(m.node_count(), -1);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == order.size()) {
            families.push_back(vals);
            return;
        }
        int v = order[i];
        std::vector<int> candidates;
        int determined = -1;
        bool consistent = true;
        for (int u = 0; u < m.node_count(); ++u) {
            if (u == v || !m.leq[u][v] || vals[u] < 0) continue;
            int image = m.transport(u, v, vals[u]);
            if (determined < 0)
                determined = image;
            else if (determined != image)
                consistent = false;
        }
        if (!consistent) return;
        if (determined >= 0)
            candidates.push_back(determined);
        else
            for (int e = 0; e < m.domain_size(v); ++e) candidates.push_back(e);
        for (int c : candidates) {
            vals[v] = c;
            self(self, i + 1);
            vals[v] = -1;
        }
    };
    rec(rec, 0);
    return families;
}

}  // namespace

void RootExtension::validate_element(const std::vector<int>& root_members,
                                     const std::vector<int>& upper) const {
    if (static_cast<int>(upper.size()) != base_.node_count())
        throw Error("root element: upper family size mismatch");
    for (int v = 0; v < base_.node_count(); ++v)
        if (upper[v] < 0 || upper[v] >= base_.domain_size(v))
            throw Error("root element: upper value outside domain at '" + base_.nodes[v] + "'");
    for (int v = 0; v < base_.node_count(); ++v)
        for (int w = 0; w < base_.node_count(); ++w)
            if (v != w && base_.leq[v][w] && base_.transport(v, w, upper[v]) != upper[w])
                throw Error("root element: upper family not coherent along " + base_.nodes[v] +
                            " -> " + base_.nodes[w]);
    if (!std::is_sorted(root_members.begin(), root_members.end()) ||
        std::adjacent_find(root_members.begin(), root_members.end()) != root_members.end())
        throw Error("root element: members not sorted/unique");
    for (int y : root_members) {
        if (y < 0 || y >= element_count()) throw Error("root element: unknown member index");
        for (int v = 0; v < base_.node_count(); ++v)
            if (!base_.member(v, elements_[y].upper[v], upper[v]))
                throw Error("root element: membership coherence fails at '" + base_.nodes[v] + "'");
    }
}

std::optional<int> RootExtension::find(const std::vector<int>& root_members,
                                       const std::vector<int>& upper) const {
    for (int i = 0; i < element_count(); ++i)
        if (elements_[i].root_members == root_members && elements_[i].upper == upper) return i;
    return std::nullopt;
}

int RootExtension::append(std::vector<int> root_members, std::vector<int> upper) {
    int rank = 1;
    for (int y : root_members) rank = std::max(rank, elements_[y].rank + 1);
    int idx = element_count();
    RootElement el{std::move(root_members), std::move(upper), rank};
    model_.dom[root()].push_back("r" + std::to_string(idx));
    for (int y : el.root_members) model_.mem[root()].insert({y, idx});
    for (int v = 0; v < base_.node_count(); ++v) model_.trans[{root(), v}].push_back(el.upper[v]);
    elements_.push_back(std::move(el));
    return idx;
}

int RootExtension::intern(std::vector<int> root_members, std::vector<int> upper) {
    std::sort(root_members.begin(), root_members.end());
    root_members.erase(std::unique(root_members.begin(), root_members.end()), root_members.end());
    validate_element(root_members, upper);
    if (auto found = find(root_members, upper)) return *found;
    if (!cfg_.lazy) {
        int rank = 1;
        for (int y : root_members) rank = std::max(rank, elements_[y].rank + 1);
        throw WitnessError("witness has rank " + std::to_string(rank) +
                           ", beyond the enumerated strata (alpha_max = " +
                           std::to_string(cfg_.alpha_max) + ")");
    }
    return append(std::move(root_members), std::move(upper));
}

void RootExtension::enumerate() {
    for (int rank = 1; rank <= cfg_.alpha_max; ++rank) {
        long long stratum = 0;
        int first_of_stratum = element_count();
        for (const auto& family : families_) {
            // members compatible with this family, all of smaller rank
            std::vector<int> allowed;
            int exact = 0;  // how many have rank exactly rank-1
            for (int y = 0; y < first_of_stratum; ++y) {
                if (elements_[y].rank >= rank) continue;
                bool ok = true;
                for (int v = 0; v < base_.node_count() && ok; ++v)
                    if (!base_.member(v, elements_[y].upper[v], family[v])) ok = false;
                if (ok) {
                    allowed.push_back(y);
                    if (elements_[y].rank == rank - 1) ++exact;
                }
            }
            long long candidates;
            if (rank == 1) {
                candidates = 1;  // the empty member set
            } else {
                // subsets containing at least one rank-(rank-1) member
                if (allowed.size() > 62) candidates = (1LL << 62);
                else
                    candidates = (1LL << allowed.size()) - (1LL << (allowed.size() - exact));
            }
            if (stratum + candidates > cfg_.width_cap)
                throw WidthCapError("width cap (" + std::to_string(cfg_.width_cap) +
                                        ") exceeded at rank " + std::to_string(rank),
                                    rank);
            if (rank == 1) {
                append({}, family);
                ++stratum;
                continue;
            }
            for (std::size_t mask = 1; mask < (std::size_t{1} << allowed.size()); ++mask) {
                std::vector<int> members;
                int maxrank = 0;
                for (std::size_t i = 0; i < allowed.size(); ++i)
                    if (mask & (std::size_t{1} << i)) {
                        members.push_back(allowed[i]);
                        maxrank = std::max(maxrank, elements_[allowed[i]].rank);
                    }
                if (maxrank != rank - 1) continue;
                append(std::move(members), family);
                ++stratum;
            }
        }
    }
}

RootExtension extend(const SetKripkeModel& m, const RootExtensionConfig& cfg,
                     const std::string& root_name) {
    {
        CoherenceReport pre = check_coherence(m);
        if (!pre.ok()) throw Error("extend: input model incoherent: " + pre.violations.front());
    }
    if (cfg.alpha_max < 1 || cfg.width_cap < 1) throw Error("extend: invalid configuration");

    RootExtension ext;
    ext.base_ = m;
    ext.cfg_ = cfg;

    std::string name = root_name;
    while (std::find(m.nodes.begin(), m.nodes.end(), name) != m.nodes.end()) name += "'";

    int n = m.node_count();
    ext.model_ = m;
    ext.model_.nodes.push_back(name);
    for (auto& row : ext.model_.leq) row.push_back(false);
    ext.model_.leq.emplace_back(n + 1, true);  // root below everything, reflexive
    ext.model_.dom.emplace_back();
    ext.model_.mem.emplace_back();
    for (int v = 0; v < n; ++v) ext.model_.trans[{n, v}] = {};

    ext.families_ = enumerate_families(m);
    if (!cfg.lazy) ext.enumerate();
    return ext;
}

std::vector<std::string> validate_extension(const RootExtension& ext) {
    std::vector<std::string> problems;
    const SetKripkeModel& base = ext.base();
    const SetKripkeModel& mp = ext.model();
    int r = ext.root();

    // restriction identity
    SetKripkeModel restricted;
    restricted.nodes.assign(mp.nodes.begin(), mp.nodes.end() - 1);
    for (int v = 0; v < base.node_count(); ++v) {
        std::vector<bool> row(mp.leq[v].begin(), mp.leq[v].end() - 1);
        restricted.leq.push_back(std::move(row));
    }
    restricted.dom.assign(mp.dom.begin(), mp.dom.end() - 1);
    restricted.mem.assign(mp.mem.begin(), mp.mem.end() - 1);
    for (const auto& [vw, f] : mp.trans)
        if (vw.first != r && vw.second != r) restricted.trans[vw] = f;
    if (restricted.nodes != base.nodes || restricted.leq != base.leq ||
        restricted.dom != base.dom || restricted.mem != base.mem ||
        restricted.trans != base.trans)
        problems.push_back("restriction to the original frame differs from the base model");

    // registry/domain alignment and the defining clauses
    if (ext.element_count() != mp.domain_size(r))
        problems.push_back("registry size differs from the root domain");
    for (int i = 0; i < ext.element_count(); ++i) {
        const RootElement& x = ext.elements()[i];
        int least = 1;
        for (int y : x.root_members) {
            if (y >= i) problems.push_back("element r" + std::to_string(i) + " has a member not previously constructed");
            if (ext.elements()[y].rank >= x.rank)
                problems.push_back("element r" + std::to_string(i) + " has a member of rank >= its own");
            least = std::max(least, ext.elements()[y].rank + 1);
        }
        if (x.rank != least)
            problems.push_back("element r" + std::to_string(i) + " has non-minimal rank");
        for (int v = 0; v < base.node_count(); ++v) {
            if (x.upper[v] < 0 || x.upper[v] >= base.domain_size(v)) {
                problems.push_back("element r" + std::to_string(i) + " has invalid upper value");
                continue;
            }
            for (int w = 0; w < base.node_count(); ++w)
                if (v != w && base.leq[v][w] && base.transport(v, w, x.upper[v]) != x.upper[w])
                    problems.push_back("element r" + std::to_string(i) + " upper family incoherent");
            for (int y : x.root_members)
                if (!base.member(v, ext.elements()[y].upper[v], x.upper[v]))
                    problems.push_back("element r" + std::to_string(i) +
                                       " violates membership coherence");
        }
        if (mp.extension(r, i) != std::set<int>(x.root_members.begin(), x.root_members.end()))
            problems.push_back("E_r extension of r" + std::to_string(i) +
                               " differs from the registry");
        for (int v = 0; v < base.node_count(); ++v)
            if (mp.transport(r, v, i) != x.upper[v])
                problems.push_back("f_rv of r" + std::to_string(i) + " differs from the registry");
    }
    return problems;
}

namespace {

// One element per node, found at minimal nodes and transported upward;
// `accept` must hold everywhere.
std::vector<int> coherent_witness_family(const SetKripkeModel& m,
                                         const std::function<bool(int, int)>& accept,
                                         const std::string& what) {
    std::vector<int> vals(m.node_count(), -1);
    for (int v : topo_order(m)) {
        int determined = -1;
        for (int u = 0; u < m.node_count(); ++u) {
            if (u == v || !m.leq[u][v] || vals[u] < 0) continue;
            int image = m.transport(u, v, vals[u]);
            if (determined >= 0 && determined != image)
                throw WitnessError(what + ": transported values disagree at '" + m.nodes[v] + "'");
            determined = image;
        }
        if (determined >= 0) {
            vals[v] = determined;
        } else {
            for (int e = 0; e < m.domain_size(v); ++e)
                if (accept(v, e)) {
                    vals[v] = e;
                    break;
                }
        }
        if (vals[v] < 0 || !accept(v, vals[v]))
            throw WitnessError(what + ": absent at node '" + m.nodes[v] + "'");
    }
    return vals;
}

Env with_params(const RootExtension& ext, const std::map<std::string, int>& params, int node) {
    Env env;
    for (const auto& [var, idx] : params) {
        if (idx < 0 || idx >= ext.element_count()) throw Error("parameter index out of range");
        env[var] = node == ext.root() ? idx : ext.elements()[idx].upper[node];
    }
    return env;
}

}  // namespace

int witness_empty(RootExtension& ext) {
    const SetKripkeModel& base = ext.base();
    auto accept = [&](int v, int e) { return base.extension(v, e).empty(); };
    std::vector<int> upper = coherent_witness_family(base, accept, "empty set witness");
    return ext.intern({}, std::move(upper));
}

int witness_pair(RootExtension& ext, int x, int y) {
    const SetKripkeModel& base = ext.base();
    const RootElement& ex = ext.elements().at(x);
    const RootElement& ey = ext.elements().at(y);
    auto accept = [&](int v, int e) {
        return base.extension(v, e) == std::set<int>{ex.upper[v], ey.upper[v]};
    };
    std::vector<int> upper = coherent_witness_family(base, accept, "pair witness");
    std::vector<int> members{x, y};
    return ext.intern(std::move(members), std::move(upper));
}

int witness_union(RootExtension& ext, int x) {
    const SetKripkeModel& base = ext.base();
    const RootElement& ex = ext.elements().at(x);
    auto accept = [&](int v, int e) {
        std::set<int> want;
        for (int t : base.extension(v, ex.upper[v])) {
            auto inner = base.extension(v, t);
            want.insert(inner.begin(), inner.end());
        }
        return base.extension(v, e) == want;
    };
    std::vector<int> upper = coherent_witness_family(base, accept, "union witness");
    std::vector<int> members;
    for (int y : ex.root_members) {
        const auto& inner = ext.elements()[y].root_members;
        members.insert(members.end(), inner.begin(), inner.end());
    }
    return ext.intern(std::move(members), std::move(upper));
}

int witness_separation(RootExtension& ext, int x, const Formula& phi, const std::string& sep_var,
                       const std::map<std::string, int>& params) {
    if (phi.has_fo_atoms()) throw Error("separation formula must be in the membership language");
    const SetKripkeModel& base = ext.base();
    const SetKripkeModel& mp = ext.model();
    const RootElement& ex = ext.elements().at(x);
    auto accept = [&](int v, int e) {
        std::set<int> want;
        for (int z : base.extension(v, ex.upper[v])) {
            Env env = with_params(ext, params, v);
            env[sep_var] = z;
            if (force_set(mp, v, phi, env)) want.insert(z);
        }
        return base.extension(v, e) == want;
    };
    std::vector<int> upper = coherent_witness_family(base, accept, "separation witness");
    std::vector<int> members;
    for (int y : ex.root_members) {
        Env env = with_params(ext, params, ext.root());
        env[sep_var] = y;
        if (force_set(mp, ext.root(), phi, env)) members.push_back(y);
    }
    int s = ext.intern(std::move(members), std::move(upper));
    if (ext.elements()[s].rank > ext.elements()[x].rank + 1)
        throw Error("separation witness rank exceeds rank(x) + 1");
    return s;
}

int witness_power(RootExtension& ext, int x) {
    const SetKripkeModel& base = ext.base();
    const SetKripkeModel& mp = ext.model();
    const RootElement& ex = ext.elements().at(x);
    auto accept = [&](int v, int e) {
        std::set<int> want;
        for (int d = 0; d < base.domain_size(v); ++d) {
            const std::set<int> dext = base.extension(v, d);
            const std::set<int> xext = base.extension(v, ex.upper[v]);
            if (std::includes(xext.begin(), xext.end(), dext.begin(), dext.end())) want.insert(d);
        }
        return base.extension(v, e) == want;
    };
    std::vector<int> upper = coherent_witness_family(base, accept, "power set witness");
    Formula subset = parse_formula("forall q. (q in wy -> q in wx)", Lang::SetTheory);
    std::vector<int> members;
    for (int y = 0; y < ext.element_count(); ++y)
        if (force_set(mp, ext.root(), subset, Env{{"wy", y}, {"wx", x}})) members.push_back(y);
    return ext.intern(std::move(members), std::move(upper));
}

int witness_replacement(RootExtension& ext, int x, const Formula& phi, const std::string& y_var,
                        const std::string& z_var, const std::map<std::string, int>& params) {
    const SetKripkeModel& base = ext.base();
    const SetKripkeModel& mp = ext.model();
    const RootElement& ex = ext.elements().at(x);
    int r = ext.root();

    // functionality precondition at the root, over the enumerated fragment
    for (int y : ex.root_members) {
        int hits = 0;
        for (int z = 0; z < ext.element_count(); ++z) {
            Env env = with_params(ext, params, r);
            env[y_var] = y;
            env[z_var] = z;
            if (force_set(mp, r, phi, env)) ++hits;
        }
        if (hits != 1)
            throw WitnessError("replacement: member r" + std::to_string(y) + " has " +
                               std::to_string(hits) + " images at the root (need exactly 1)");
    }

    auto accept = [&](int v, int e) {
        std::set<int> want;
        for (int y : base.extension(v, ex.upper[v]))
            for (int z = 0; z < base.domain_size(v); ++z) {
                Env env = with_params(ext, params, v);
                env[y_var] = y;
                env[z_var] = z;
                if (force_set(mp, v, phi, env)) want.insert(z);
            }
        return base.extension(v, e) == want;
    };
    std::vector<int> upper = coherent_witness_family(base, accept, "replacement witness");
    std::vector<int> members;
    for (int z = 0; z < ext.element_count(); ++z) {
        bool hit = false;
        for (int y : ex.root_members) {
            Env env = with_params(ext, params, r);
            env[y_var] = y;
            env[z_var] = z;
            if (force_set(mp, r, phi, env)) hit = true;
        }
        if (hit) members.push_back(z);
    }
    return ext.intern(std::move(members), std::move(upper));
}

int witness_exponentiation(RootExtension& ext, int a, int b) {
    const SetKripkeModel& base = ext.base();
    const SetKripkeModel& mp = ext.model();
    const RootElement& ea = ext.elements().at(a);
    const RootElement& eb = ext.elements().at(b);
    Formula is_func = function_space_formula("wf", "wa", "wb");
    auto accept = [&](int v, int e) {
        std::set<int> want;
        for (int g = 0; g < base.domain_size(v); ++g)
            if (force_set(mp, v, is_func, Env{{"wf", g}, {"wa", ea.upper[v]}, {"wb", eb.upper[v]}}))
                want.insert(g);
        return base.extension(v, e) == want;
    };
    std::vector<int> upper = coherent_witness_family(base, accept, "exponentiation witness");
    std::vector<int> members;
    for (int w = 0; w < ext.element_count(); ++w)
        if (force_set(mp, ext.root(), is_func, Env{{"wf", w}, {"wa", a}, {"wb", b}}))
            members.push_back(w);
    return ext.intern(std::move(members), std::move(upper));
}

std::vector<int> witness_strong_infinity(RootExtension& ext, int n_max) {
    if (n_max < 0) throw Error("witness_strong_infinity requires n_max >= 0");
    std::vector<int> chain{witness_empty(ext)};
    Formula successor = parse_formula(
        "forall q. ((q in ws -> (q in wn | q = wn)) & ((q in wn | q = wn) -> q in ws))",
        Lang::SetTheory);
    for (int k = 0; k < n_max; ++k) {
        int n = chain.back();
        int singleton = witness_pair(ext, n, n);
        int pairset = witness_pair(ext, n, singleton);
        int next = witness_union(ext, pairset);
        if (!force_set(ext.model(), ext.root(), successor, Env{{"ws", next}, {"wn", n}}))
            throw WitnessError("strong infinity: successor of " + std::to_string(k) +
                               " fails n+1 = n ∪ {n} at the root");
        chain.push_back(next);
    }
    return chain;
}

EinductionReport check_ein_induction(RootExtension& ext, const Formula& phi, int rank_bound) {
    EinductionReport report;
    report.wellfounded = true;
    report.rank_decreasing = true;
    const SetKripkeModel& mp = ext.model();
    for (const auto& [y, x] : mp.mem[ext.root()]) {
        if (ext.elements()[y].rank >= ext.elements()[x].rank) report.rank_decreasing = false;
    }
    try {
        for (int e = 0; e < mp.domain_size(ext.root()); ++e) mp.depth_rank(ext.root(), e);
    } catch (const Error&) {
        report.wellfounded = false;
    }
    AxiomSpec spec;
    spec.name = "ein-induction";
    spec.phi = phi;
    report.axiom = check_axiom(mp, spec, ext.root(), rank_bound);
    return report;
}

DemoReport dp_demo(const SetKripkeModel& m1, const SetKripkeModel& m2, const Formula& phi,
                   const Formula& psi, const RootExtensionConfig& cfg) {
    DemoReport report;
    if (!phi.free_vars().empty() || !psi.free_vars().empty())
        throw Error("dp_demo requires sentences");
    auto root_of = [](const SetKripkeModel& m, const char* which) {
        auto mins = m.minimal_nodes();
        if (mins.size() != 1) throw Error(std::string("dp_demo: ") + which + " must be rooted");
        return mins[0];
    };
    int r1 = root_of(m1, "m1");
    int r2 = root_of(m2, "m2");
    if (force_set(m1, r1, phi)) throw Error("dp_demo precondition: m1 forces phi at its root");
    if (force_set(m2, r2, psi)) throw Error("dp_demo precondition: m2 forces psi at its root");
    report.facts.push_back("m1 root does not force phi");
    report.facts.push_back("m2 root does not force psi");

    RootExtension ext = extend(disjoint_union({m1, m2}), cfg);
    int r = ext.root();
    bool f_phi = force_set(ext.model(), r, phi);
    bool f_psi = force_set(ext.model(), r, psi);
    bool f_or = force_set(ext.model(), r, Formula::disj(phi, psi));
    report.facts.push_back(std::string("new root ") + (f_phi ? "forces" : "does not force") +
                           " phi");
    report.facts.push_back(std::string("new root ") + (f_psi ? "forces" : "does not force") +
                           " psi");
    report.facts.push_back(std::string("new root ") + (f_or ? "forces" : "does not force") +
                           " phi | psi");
    report.ok = !f_phi && !f_psi && !f_or;
    return report;
}

DemoReport visser_semantic_demo(const std::vector<SetKripkeModel>& ms, const Assignment& sigma,
                                int n, const RootExtensionConfig& cfg) {
    DemoReport report;
    if (n < 1) throw Error("visser_semantic_demo requires n >= 1");
    if (static_cast<int>(ms.size()) != n + 2)
        throw Error("visser_semantic_demo needs exactly n + 2 component models");
    auto component = [&](const std::string& name) {
        const Assignment::Entry* e = sigma.find(name);
        if (!e) throw Error("sigma does not assign component '" + name + "'");
        if (!e->body.free_vars().empty()) throw Error("sigma('" + name + "') must be a sentence");
        return e->body;
    };
    std::vector<Formula> sa, sb;
    for (int i = 1; i <= n + 2; ++i) sa.push_back(component("a" + std::to_string(i)));
    for (int i = 1; i <= n; ++i) sb.push_back(component("b" + std::to_string(i)));

    std::vector<Formula> impls;
    for (int i = 0; i < n; ++i) impls.push_back(Formula::implies(sa[i], sb[i]));
    Formula all_impls = Formula::conj_all(impls);

    for (int j = 0; j < n + 2; ++j) {
        auto mins = ms[j].minimal_nodes();
        if (mins.size() != 1) throw Error("visser_semantic_demo: component models must be rooted");
        if (!force_set(ms[j], mins[0], all_impls))
            throw Error("precondition: component " + std::to_string(j + 1) +
                        " does not force the implications");
        if (force_set(ms[j], mins[0], sa[j]))
            throw Error("precondition: component " + std::to_string(j + 1) + " forces sigma(a" +
                        std::to_string(j + 1) + ")");
    }
    report.facts.push_back("all components force the implications and refute their own sigma(a_j)");

    RootExtension ext = extend(disjoint_union(ms), cfg);
    int r = ext.root();
    report.ok = true;
    for (int j = 0; j < n + 2; ++j) {
        bool forced = force_set(ext.model(), r, sa[j]);
        report.facts.push_back("new root " + std::string(forced ? "forces" : "does not force") +
                               " sigma(a" + std::to_string(j + 1) + ")");
        if (forced) report.ok = false;
    }
    for (int i = 0; i < n; ++i) {
        bool forced = force_set(ext.model(), r, impls[i]);
        report.facts.push_back("new root " + std::string(forced ? "forces" : "does not force") +
                               " sigma(a" + std::to_string(i + 1) + ") -> sigma(b" +
                               std::to_string(i + 1) + ")");
        if (!forced) report.ok = false;
    }
    bool tail = force_set(ext.model(), r, Formula::disj(sa[n], sa[n + 1]));
    report.facts.push_back("new root " + std::string(tail ? "forces" : "does not force") +
                           " sigma(a" + std::to_string(n + 1) + ") | sigma(a" +
                           std::to_string(n + 2) + ")");
    if (tail) report.ok = false;
    return report;
}

}  // namespace wb
