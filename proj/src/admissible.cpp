// Admissibility procedures.
//
// IPC: the positive side saturates the premise under applications of
// Visser's rules V_n. A formula matches the V_n premise schema when it has
// the shape (/\ implications -> disjunction), optionally under a top-level
// disjunction supplying C; each match contributes the corresponding V_n
// conclusion. Soundness rests on the admissibility of V_n in IPC; every
// recorded step can be re-verified mechanically. The negative side searches
// small substitutions and re-checks candidates with the provers. Between the
// two bounded engines sits an honest Unknown.
//
// CPC: structural completeness makes admissibility decidable outright.
//
// CQC: only the ground machinery is implemented: passive premises, and
// refutations of derivability on small finite structures. Derivability
// itself is never claimed.

#include "wb/admissible.hpp"

#include <algorithm>
#include <cmath>

#include "wb/prover.hpp"
#include "wb/syntax.hpp"

namespace wb {

namespace {

std::vector<Formula> normalize_set(std::vector<Formula> fs) {
    std::sort(fs.begin(), fs.end(), FormulaLess{});
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    return fs;
}

}  // namespace

Rule Rule::make(std::vector<Formula> premises, std::vector<Formula> conclusions) {
    if (premises.empty() || conclusions.empty())
        throw Error("a rule needs at least one premise and one conclusion");
    Rule r{normalize_set(std::move(premises)), normalize_set(std::move(conclusions))};
    Lang l = r.lang();  // validates that languages agree
    (void)l;
    return r;
}

Lang Rule::lang() const {
    Lang l = Lang::Prop;
    auto join = [&](Lang x) {
        if (l == Lang::Prop)
            l = x;
        else if (x != Lang::Prop && x != l)
            throw Error("rule mixes formula languages");
    };
    for (const auto& f : premises) join(f.lang());
    for (const auto& f : conclusions) join(f.lang());
    return l;
}

Signature Rule::signature() const {
    Formula all = Formula::conj(premise_conj(), conclusion_disj());
    return Signature::of(all);
}

Rule visser_rule(int n, const std::vector<Formula>& a, const std::vector<Formula>& b,
                 const std::optional<Formula>& c) {
    if (n < 1) throw Error("visser_rule requires n >= 1");
    if (a.size() != static_cast<std::size_t>(n) + 2)
        throw Error("visser_rule: expected " + std::to_string(n + 2) + " A-components");
    if (b.size() != static_cast<std::size_t>(n))
        throw Error("visser_rule: expected " + std::to_string(n) + " B-components");
    std::vector<Formula> impls;
    for (int i = 0; i < n; ++i) impls.push_back(Formula::implies(a[i], b[i]));
    Formula antecedent = Formula::conj_all(impls);
    Formula premise =
        Formula::implies(antecedent, Formula::disj(a[n], a[n + 1]));
    std::vector<Formula> disjuncts;
    for (int j = 0; j < n + 2; ++j) disjuncts.push_back(Formula::implies(antecedent, a[j]));
    Formula conclusion = Formula::disj_all(disjuncts);
    if (c) {
        premise = Formula::disj(premise, *c);
        conclusion = Formula::disj(conclusion, *c);
    }
    return Rule{{premise}, {conclusion}};
}

bool derivable(const Rule& r, LogicId logic) {
    Formula imp = Formula::implies(r.premise_conj(), r.conclusion_disj());
    return logic == LogicId::Ipc ? ipc_provable(imp) : decide_cpc(imp).valid;
}

namespace {

bool provable_in(const Formula& f, LogicId logic) {
    return logic == LogicId::Ipc ? ipc_provable(f) : decide_cpc(f).valid;
}

// (antecedent, consequent) of an implication, reading ~X as X -> false.
std::optional<std::pair<Formula, Formula>> decompose_impl(const Formula& f) {
    if (f.kind() == Kind::Implies) return std::make_pair(f.lhs(), f.rhs());
    if (f.kind() == Kind::Not) return std::make_pair(f.body(), Formula::bot());
    return std::nullopt;
}

std::vector<Formula> flatten_and(const Formula& f) {
    if (f.kind() == Kind::And) {
        auto l = flatten_and(f.lhs());
        auto r = flatten_and(f.rhs());
        l.insert(l.end(), r.begin(), r.end());
        return l;
    }
    return {f};
}

// Tries to read `g` as the V_n premise schema (without C): a conjunction of
// implications implying a disjunction.
std::optional<VisserStep> match_core(const Formula& g, const std::optional<Formula>& c,
                                     int max_n) {
    auto impl = decompose_impl(g);
    if (!impl) return std::nullopt;
    const auto& [antecedent, consequent] = *impl;
    if (consequent.kind() != Kind::Or) return std::nullopt;
    std::vector<Formula> conjuncts = flatten_and(antecedent);
    if (static_cast<int>(conjuncts.size()) > max_n) return std::nullopt;
    VisserStep step;
    step.n = static_cast<int>(conjuncts.size());
    for (const auto& cj : conjuncts) {
        auto ab = decompose_impl(cj);
        if (!ab) return std::nullopt;
        step.a.push_back(ab->first);
        step.b.push_back(ab->second);
    }
    step.a.push_back(consequent.lhs());
    step.a.push_back(consequent.rhs());
    step.c = c;
    return step;
}

std::vector<VisserStep> match_visser(const Formula& f, int max_n) {
    std::vector<VisserStep> out;
    if (auto s = match_core(f, std::nullopt, max_n)) out.push_back(std::move(*s));
    if (f.kind() == Kind::Or) {
        if (auto s = match_core(f.lhs(), f.rhs(), max_n)) out.push_back(std::move(*s));
        if (auto s = match_core(f.rhs(), f.lhs(), max_n)) out.push_back(std::move(*s));
    }
    return out;
}

}  // namespace

std::optional<Assignment> refute_admissibility(const Rule& r, LogicId logic,
                                               const RefutationBudget& budget) {
    if (r.lang() != Lang::Prop) throw Error("refute_admissibility handles propositional rules");
    std::vector<std::string> rule_atoms;
    for (const auto& [sym, arity] : r.signature().preds) rule_atoms.push_back(sym);

    // candidate pool: formulas over the first pool_atoms rule atoms (padded
    // with fresh u0, u1, ...), of size <= pool_max_size
    std::vector<std::string> pool_atoms = rule_atoms;
    for (int i = 0; static_cast<int>(pool_atoms.size()) < budget.pool_atoms; ++i)
        pool_atoms.push_back("u" + std::to_string(i));
    pool_atoms.resize(budget.pool_atoms);

    // documented candidate order: the rule's own atoms (identity candidates)
    // first, then padding atoms, true, false, then composite formulas by
    // size in generation order
    std::vector<std::vector<Formula>> by_size(budget.pool_max_size + 1);
    if (budget.pool_max_size >= 1) {
        for (const auto& p : pool_atoms) by_size[1].push_back(Formula::atom(p));
        by_size[1].push_back(Formula::top());
        by_size[1].push_back(Formula::bot());
    }
    for (int s = 2; s <= budget.pool_max_size; ++s) {
        for (const auto& f : by_size[s - 1]) by_size[s].push_back(Formula::negate(f));
        for (int ls = 1; ls <= s - 2; ++ls)
            for (const auto& l : by_size[ls])
                for (const auto& rr : by_size[s - 1 - ls]) {
                    by_size[s].push_back(Formula::conj(l, rr));
                    by_size[s].push_back(Formula::disj(l, rr));
                    by_size[s].push_back(Formula::implies(l, rr));
                }
    }
    std::vector<Formula> pool;
    for (auto& v : by_size)
        for (auto& f : v)
            if (std::find(pool.begin(), pool.end(), f) == pool.end()) pool.push_back(f);

    double combos = std::pow(static_cast<double>(pool.size()),
                             static_cast<double>(rule_atoms.size()));
    if (combos > 2e6) throw Error("refutation budget too large");

    std::vector<std::size_t> pick(rule_atoms.size(), 0);
    while (true) {
        Assignment sigma;
        for (std::size_t i = 0; i < rule_atoms.size(); ++i)
            sigma.set(rule_atoms[i], 0, pool[pick[i]]);
        bool premises_ok = true;
        for (const auto& p : r.premises)
            if (!provable_in(apply_assignment(sigma, p), logic)) {
                premises_ok = false;
                break;
            }
        if (premises_ok) {
            bool any_conclusion = false;
            for (const auto& c : r.conclusions)
                if (provable_in(apply_assignment(sigma, c), logic)) {
                    any_conclusion = true;
                    break;
                }
            if (!any_conclusion) return sigma;
        }
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < pool.size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    return std::nullopt;
}

AdmissibilityVerdict admissible_ipc(const Rule& r, const IpcAdmissibilityOptions& opts) {
    if (r.lang() != Lang::Prop) throw Error("admissible_ipc handles propositional rules");
    Formula premise = r.premise_conj();
    Formula goal = r.conclusion_disj();

    AdmissibilityVerdict verdict;
    std::vector<Formula> derived{premise};
    auto derives_goal = [&]() {
        return ipc_provable(Formula::implies(Formula::conj_all(derived), goal));
    };

    bool reached = derives_goal();
    for (int round = 0; round < opts.depth && !reached; ++round) {
        std::vector<VisserStep> steps;
        for (const auto& f : derived)
            for (auto& s : match_visser(f, opts.saturation_bound)) {
                s.matched_premise = f;
                Rule inst = visser_rule(s.n, s.a, s.b, s.c);
                s.conclusion = inst.conclusions[0];
                steps.push_back(std::move(s));
            }
        bool grew = false;
        for (auto& s : steps) {
            if (std::find(derived.begin(), derived.end(), s.conclusion) != derived.end()) continue;
            derived.push_back(s.conclusion);
            verdict.trace.push_back(s);
            grew = true;
        }
        if (!grew) break;
        reached = derives_goal();
    }

    verdict.derived = derived;
    if (reached) {
        verdict.status = Admissibility::Admissible;
        return verdict;
    }

    verdict.trace.clear();
    if (auto witness = refute_admissibility(r, LogicId::Ipc, opts.refutation)) {
        verdict.status = Admissibility::NotAdmissible;
        verdict.witness = std::move(witness);
        return verdict;
    }
    verdict.status = Admissibility::Unknown;
    verdict.note = "saturation (n <= " + std::to_string(opts.saturation_bound) + ", depth " +
                   std::to_string(opts.depth) + ") did not reach the conclusion; refutation search (" +
                   std::to_string(opts.refutation.pool_atoms) + " atoms, size <= " +
                   std::to_string(opts.refutation.pool_max_size) + ") found no witness";
    return verdict;
}

bool reverify_ipc_trace(const Rule& r, const AdmissibilityVerdict& v, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (v.status != Admissibility::Admissible) return fail("verdict is not Admissible");
    std::vector<Formula> acc{r.premise_conj()};
    for (std::size_t i = 0; i < v.trace.size(); ++i) {
        const VisserStep& s = v.trace[i];
        Rule inst = visser_rule(s.n, s.a, s.b, s.c);
        if (inst.conclusions[0] != s.conclusion)
            return fail("step " + std::to_string(i) + ": conclusion is not the V_n conclusion instance");
        if (!ipc_provable(Formula::implies(Formula::conj_all(acc), inst.premises[0])))
            return fail("step " + std::to_string(i) + ": V_n premise instance does not follow in IPC");
        acc.push_back(s.conclusion);
    }
    if (!ipc_provable(Formula::implies(Formula::conj_all(acc), r.conclusion_disj())))
        return fail("final step: conclusion does not follow in IPC from the saturated set");
    return true;
}

std::optional<GroundSubstitution> unifiable_cpc(const Formula& f) {
    if (f.lang() != Lang::Prop) throw Error("unifiable_cpc requires a propositional formula");
    for (auto& g : ground_substitutions(Signature::of(f)))
        if (constant_fold(apply_ground(g, f))) return g;
    return std::nullopt;
}

AdmissibilityVerdict admissible_cpc(const Rule& r) {
    if (r.lang() != Lang::Prop) throw Error("admissible_cpc handles propositional rules");
    AdmissibilityVerdict verdict;
    Formula premise = r.premise_conj();
    if (!unifiable_cpc(premise)) {
        verdict.status = Admissibility::Admissible;
        verdict.passive = true;
        verdict.note = "passive: premise is not unifiable";
        return verdict;
    }
    if (derivable(r, LogicId::Cpc)) {
        verdict.status = Admissibility::Admissible;
        verdict.note = "derivable";
        return verdict;
    }
    // structural completeness: not derivable with unifiable premise means a
    // ground witness exists; return the first in enumeration order
    Signature sig = r.signature();
    for (auto& g : ground_substitutions(sig)) {
        if (!constant_fold(apply_ground(g, premise))) continue;
        bool any = false;
        for (const auto& c : r.conclusions)
            if (constant_fold(apply_ground(g, c))) {
                any = true;
                break;
            }
        if (!any) {
            verdict.status = Admissibility::NotAdmissible;
            verdict.witness = to_assignment(g, sig);
            return verdict;
        }
    }
    throw Error("admissible_cpc: internal inconsistency (no ground witness for underivable rule)");
}

bool passive_rule(const Rule& r, const std::function<bool(const Formula&)>& unifiable) {
    return !unifiable(r.premise_conj());
}

std::optional<GroundSubstitution> unifiable_cqc(const Formula& f) {
    if (f.has_set_atoms()) throw Error("unifiable_cqc handles the pure first-order language");
    for (auto& g : ground_substitutions(Signature::of(f)))
        if (constant_fold(apply_ground(g, f))) return g;
    return std::nullopt;
}

namespace {

Formula universal_closure(const Formula& f) {
    Formula g = f;
    std::vector<std::string> fv = f.free_vars();
    for (auto it = fv.rbegin(); it != fv.rend(); ++it) g = Formula::forall(*it, g);
    return g;
}

}  // namespace

Assignment sigma_construction_cqc(const Formula& A, const GroundSubstitution& tau) {
    GroundSubstitution restricted;
    for (const auto& [sym, arity] : A.signature()) {
        auto it = tau.find(sym);
        if (it == tau.end()) throw Error("tau does not cover predicate '" + sym + "'");
        restricted[sym] = it->second;
    }
    if (!constant_fold(apply_ground(restricted, A))) throw Error("tau is not a unifier of A");

    Formula closure = universal_closure(A);
    std::map<std::string, int> arities;
    for (const auto& [sym, arity] : A.signature()) arities[sym] = arity;

    Assignment sigma;
    for (const auto& [sym, value] : tau) {
        int arity = arities.count(sym) ? arities[sym] : 0;
        std::vector<std::string> params;
        for (int i = 0; i < arity; ++i) params.push_back(canonical_param(i));
        Formula head = Formula::atom(sym, params);
        sigma.set(sym, arity,
                  value ? Formula::implies(closure, head) : Formula::conj(closure, head));
    }
    return sigma;
}

ClaimReport verify_claim_cqc(const Formula& A, const GroundSubstitution& tau, const Formula& B,
                             int max_domain) {
    Assignment sigma = sigma_construction_cqc(A, tau);
    GroundSubstitution tau_b;
    for (const auto& [sym, arity] : B.signature()) {
        auto it = tau.find(sym);
        if (it == tau.end()) throw Error("B uses predicate '" + sym + "' outside tau's domain");
        tau_b[sym] = it->second;
    }
    bool b_top = constant_fold(apply_ground(tau_b, B));
    Formula closure = universal_closure(A);
    Formula expected = b_top ? Formula::implies(closure, B) : Formula::conj(closure, B);
    Formula bicond = Formula::iff(apply_assignment(sigma, B), expected);

    Signature sig;
    {
        std::map<std::string, int> merged;
        for (const auto& [sym, ar] : A.signature()) merged[sym] = ar;
        for (const auto& [sym, ar] : B.signature()) {
            if (merged.count(sym) && merged[sym] != ar)
                throw Error("arity mismatch between A and B for '" + sym + "'");
            merged[sym] = ar;
        }
        for (const auto& [sym, ar] : merged) sig.preds.emplace_back(sym, ar);
    }

    ClaimReport report;
    for (int size = 1; size <= max_domain; ++size)
        for (const auto& s : enumerate_structures(sig, size)) {
            ++report.structures_checked;
            if (!eval_closed(s, bicond))
                report.failures.push_back(
                    {s, "sigma(B) <-> " + std::string(b_top ? "(closure -> B)" : "(closure & B)") +
                            " fails in " + s.describe()});
        }
    return report;
}

AdmissibilityVerdict admissible_cqc_ground(const Rule& r, int model_bound) {
    Lang rl = r.lang();
    if (rl == Lang::SetTheory)
        throw Error("admissible_cqc_ground handles the pure first-order language");
    if (r.conclusions.size() != 1)
        throw Error("admissible_cqc_ground requires a single conclusion");
    Formula A = r.premise_conj();
    Formula B = r.conclusions[0];

    AdmissibilityVerdict verdict;
    auto tau = unifiable_cqc(A);
    if (!tau) {
        verdict.status = Admissibility::Admissible;
        verdict.passive = true;
        verdict.note = "passive: premise has no ground unifier";
        return verdict;
    }

    // refute derivability: a finite structure of closure(A) & ~closure(B);
    // by almost structural completeness this refutes admissibility
    Formula target = Formula::conj(universal_closure(A), Formula::negate(universal_closure(B)));
    Signature sig = r.signature();
    for (int size = 1; size <= model_bound; ++size)
        for (const auto& s : enumerate_structures(sig, size))
            if (eval_structure(s, target, {})) {
                verdict.status = Admissibility::NotAdmissible;
                verdict.witness = sigma_construction_cqc(A, *tau);
                verdict.refuting_structure = s;
                verdict.note = "premise is unifiable and " + s.describe() +
                               " refutes premise -> conclusion";
                return verdict;
            }
    verdict.status = Admissibility::Unknown;
    verdict.note = "premise unifiable; no refuting structure of size <= " +
                   std::to_string(model_bound) + "; CQC derivability is not decided";
    return verdict;
}

}  // namespace wb
