// Decision procedures for IPC and CPC.
//
// The IPC engine is a contraction-free root-first sequent search in the
// style of Dyckhoff's G4ip: left rules are keyed on the shape of an
// implication's antecedent, so no loop checking is needed. Negation is
// eliminated (~A becomes A -> false) before the search. When the search
// fails, a countermodel is produced independently by enumerating finite
// rooted trees with all monotone valuations over the formula's atoms.

#include "wb/prover.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>

namespace wb {

namespace {

bool contains(const std::vector<Formula>& gamma, const Formula& f) {
    for (const auto& g : gamma)
        if (g == f) return true;
    return false;
}

void add_unique(std::vector<Formula>& gamma, const Formula& f) {
    if (!contains(gamma, f)) gamma.push_back(f);
}

// G4ip search. `gamma` and `goal` are negation-free.
bool prove(std::vector<Formula> gamma, Formula goal) {
    // saturate non-branching invertible left rules
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < gamma.size(); ++i) {
            const Formula f = gamma[i];
            if (f.kind() == Kind::Bot) return true;
            if (f.kind() == Kind::Top) {
                gamma.erase(gamma.begin() + i);
                changed = true;
                break;
            }
            if (f.kind() == Kind::And) {
                Formula a = f.lhs(), b = f.rhs();
                gamma.erase(gamma.begin() + i);
                add_unique(gamma, a);
                add_unique(gamma, b);
                changed = true;
                break;
            }
            if (f.kind() == Kind::Implies) {
                const Formula& ant = f.lhs();
                if (ant.kind() == Kind::Top) {
                    Formula b = f.rhs();
                    gamma.erase(gamma.begin() + i);
                    add_unique(gamma, b);
                    changed = true;
                    break;
                }
                if (ant.kind() == Kind::Bot) {
                    gamma.erase(gamma.begin() + i);
                    changed = true;
                    break;
                }
                if (ant.kind() == Kind::And) {
                    Formula curried = Formula::implies(ant.lhs(), Formula::implies(ant.rhs(), f.rhs()));
                    gamma.erase(gamma.begin() + i);
                    add_unique(gamma, curried);
                    changed = true;
                    break;
                }
                if (ant.kind() == Kind::Or) {
                    Formula left = Formula::implies(ant.lhs(), f.rhs());
                    Formula right = Formula::implies(ant.rhs(), f.rhs());
                    gamma.erase(gamma.begin() + i);
                    add_unique(gamma, left);
                    add_unique(gamma, right);
                    changed = true;
                    break;
                }
                if (ant.kind() == Kind::Atom && contains(gamma, ant)) {
                    Formula b = f.rhs();
                    gamma.erase(gamma.begin() + i);
                    add_unique(gamma, b);
                    changed = true;
                    break;
                }
            }
        }
    }

    // invertible left disjunction: split
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        if (gamma[i].kind() == Kind::Or) {
            Formula a = gamma[i].lhs(), b = gamma[i].rhs();
            std::vector<Formula> left = gamma, right = gamma;
            left.erase(left.begin() + i);
            right.erase(right.begin() + i);
            add_unique(left, a);
            add_unique(right, b);
            return prove(std::move(left), goal) && prove(std::move(right), std::move(goal));
        }
    }

    // invertible right rules
    if (goal.kind() == Kind::Top) return true;
    if (goal.kind() == Kind::And)
        return prove(gamma, goal.lhs()) && prove(std::move(gamma), goal.rhs());
    if (goal.kind() == Kind::Implies) {
        add_unique(gamma, goal.lhs());
        return prove(std::move(gamma), goal.rhs());
    }

    // axiom
    if (goal.kind() == Kind::Atom && contains(gamma, goal)) return true;

    // choice points: right disjunction, and implication-antecedent implications
    if (goal.kind() == Kind::Or) {
        if (prove(gamma, goal.lhs()) || prove(gamma, goal.rhs())) return true;
    }
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        const Formula& f = gamma[i];
        if (f.kind() != Kind::Implies || f.lhs().kind() != Kind::Implies) continue;
        const Formula& cd = f.lhs();  // c -> d
        std::vector<Formula> g1 = gamma, g2 = gamma;
        g1.erase(g1.begin() + i);
        g2.erase(g2.begin() + i);
        add_unique(g1, Formula::implies(cd.rhs(), f.rhs()));
        add_unique(g2, f.rhs());
        if (prove(std::move(g1), cd) && prove(std::move(g2), goal)) return true;
    }
    return false;
}

std::vector<std::string> atoms_of(const Formula& f) {
    std::vector<std::string> atoms;
    for (const auto& [sym, arity] : f.signature()) {
        if (arity != 0) throw Error("propositional decision procedure given a non-nullary atom");
        atoms.push_back(sym);
    }
    return atoms;  // signature() is already sorted
}

// Shared, immutable table of tree frames and their up-sets.
struct TreeTable {
    std::vector<PropKripkeModel> frames;
    std::vector<std::vector<unsigned>> upsets;  // per frame
};

std::shared_ptr<const TreeTable> tree_table(int max_nodes) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const TreeTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(max_nodes);
    if (it != cache.end()) return it->second;
    auto table = std::make_shared<TreeTable>();
    table->frames = enumerate_finite_trees(max_nodes);
    for (const auto& fr : table->frames) table->upsets.push_back(up_sets(fr));
    cache[max_nodes] = table;
    return table;
}

}  // namespace

bool ipc_provable(const Formula& f) {
    if (f.lang() != Lang::Prop) throw Error("ipc_provable requires a propositional formula");
    return prove({}, eliminate_negation(f));
}

IpcVerdict decide_ipc(const Formula& f, const IpcOptions& opts) {
    if (f.lang() != Lang::Prop) throw Error("decide_ipc requires a propositional formula");
    Formula g = eliminate_negation(f);
    if (prove({}, g)) return IpcVerdict{true, std::nullopt};

    std::size_t impl = implication_subformula_count(g);
    long long theoretical = impl >= 30 ? (1LL << 30) : (1LL << impl);
    if (theoretical < 1) theoretical = 1;
    int bound = static_cast<int>(std::min<long long>(theoretical, opts.node_budget));

    std::vector<std::string> atoms = atoms_of(f);
    auto table = tree_table(bound);
    for (std::size_t t = 0; t < table->frames.size(); ++t) {
        const PropKripkeModel& frame = table->frames[t];
        const auto& ups = table->upsets[t];
        std::size_t n = frame.node_count();
        // lexicographic product of up-sets, one per atom
        std::vector<std::size_t> pick(atoms.size(), 0);
        while (true) {
            std::vector<std::set<std::string>> val(n);
            for (std::size_t a = 0; a < atoms.size(); ++a)
                for (std::size_t v = 0; v < n; ++v)
                    if (ups[pick[a]] & (1u << v)) val[v].insert(atoms[a]);
            PropKripkeModel candidate = frame.with_valuation(std::move(val));
            if (!force_prop(candidate, 0, f))
                return IpcVerdict{false, PropCountermodel{std::move(candidate), 0}};
            // advance
            std::size_t i = 0;
            for (; i < pick.size(); ++i) {
                if (++pick[i] < ups.size()) break;
                pick[i] = 0;
            }
            if (i == pick.size()) break;
            if (atoms.empty()) break;
        }
    }
    if (theoretical <= opts.node_budget)
        throw InternalInconsistencyError(
            "decide_ipc: sequent engine reports unprovable but no countermodel exists on trees of <= " +
            std::to_string(bound) + " nodes");
    throw Error("decide_ipc: countermodel search budget (" + std::to_string(opts.node_budget) +
                " nodes) exhausted below the theoretical bound; the sequent verdict (unprovable) stands");
}

bool eval_prop(const Formula& f, const std::map<std::string, bool>& assignment) {
    switch (f.kind()) {
        case Kind::Atom: {
            auto it = assignment.find(f.pred());
            if (it == assignment.end()) throw Error("assignment misses atom '" + f.pred() + "'");
            return it->second;
        }
        case Kind::Top:
            return true;
        case Kind::Bot:
            return false;
        case Kind::Not:
            return !eval_prop(f.body(), assignment);
        case Kind::And:
            return eval_prop(f.lhs(), assignment) && eval_prop(f.rhs(), assignment);
        case Kind::Or:
            return eval_prop(f.lhs(), assignment) || eval_prop(f.rhs(), assignment);
        case Kind::Implies:
            return !eval_prop(f.lhs(), assignment) || eval_prop(f.rhs(), assignment);
        default:
            throw Error("eval_prop: quantifier in propositional formula");
    }
}

CpcVerdict decide_cpc(const Formula& f) {
    if (f.lang() != Lang::Prop) throw Error("decide_cpc requires a propositional formula");
    std::vector<std::string> atoms = atoms_of(f);
    if (atoms.size() > 20) throw Error("decide_cpc: too many atoms");
    for (std::size_t c = 0; c < (std::size_t{1} << atoms.size()); ++c) {
        std::map<std::string, bool> a;
        for (std::size_t i = 0; i < atoms.size(); ++i) a[atoms[i]] = (c >> i) & 1;
        if (!eval_prop(f, a)) return CpcVerdict{false, std::move(a)};
    }
    return CpcVerdict{true, {}};
}

}  // namespace wb
