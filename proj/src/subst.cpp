#include "wb/subst.hpp"

#include <algorithm>
#include <set>

namespace wb {

std::string canonical_param(int i) { return "x" + std::to_string(i); }

void Assignment::set(const std::string& pred, int arity, Formula body) {
    if (arity < 0) throw Error("negative arity");
    std::set<std::string> params;
    for (int i = 0; i < arity; ++i) params.insert(canonical_param(i));
    for (const auto& v : body.free_vars())
        if (!params.count(v))
            throw Error("assigned formula for '" + pred + "' has free variable '" + v +
                        "' beyond its arity");
    map_[pred] = Entry{arity, std::move(body)};
}

const Assignment::Entry* Assignment::find(const std::string& pred) const {
    auto it = map_.find(pred);
    return it == map_.end() ? nullptr : &it->second;
}

bool Assignment::covers(const Formula& f) const {
    for (const auto& [sym, arity] : f.signature()) {
        const Entry* e = find(sym);
        if (!e || e->arity != arity) return false;
    }
    return true;
}

std::vector<GroundSubstitution> ground_substitutions(const Signature& sig) {
    if (sig.size() > 20) throw Error("signature too large for ground enumeration");
    std::vector<std::string> syms;
    for (const auto& [s, a] : sig.preds) syms.push_back(s);
    std::sort(syms.begin(), syms.end());
    syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
    std::vector<GroundSubstitution> out;
    out.reserve(std::size_t{1} << syms.size());
    for (std::size_t c = 0; c < (std::size_t{1} << syms.size()); ++c) {
        GroundSubstitution g;
        for (std::size_t i = 0; i < syms.size(); ++i) g[syms[i]] = (c >> i) & 1;
        out.push_back(std::move(g));
    }
    return out;
}

Assignment to_assignment(const GroundSubstitution& g, const Signature& sig) {
    Assignment a;
    for (const auto& [sym, arity] : sig.preds) {
        auto it = g.find(sym);
        if (it == g.end()) throw Error("ground substitution does not cover '" + sym + "'");
        a.set(sym, arity, it->second ? Formula::top() : Formula::bot());
    }
    return a;
}

namespace {

class FreshNames {
public:
    explicit FreshNames(std::set<std::string> avoid) : avoid_(std::move(avoid)) {}

    std::string next() {
        for (;; ++counter_) {
            std::string cand = "v" + std::to_string(counter_);
            if (!avoid_.count(cand)) {
                ++counter_;
                avoid_.insert(cand);
                return cand;
            }
        }
    }

private:
    std::set<std::string> avoid_;
    int counter_ = 0;
};

void collect_vars(const Formula& f, std::set<std::string>& out) {
    switch (f.kind()) {
        case Kind::Atom:
            out.insert(f.args().begin(), f.args().end());
            break;
        case Kind::Forall:
        case Kind::Exists:
            out.insert(f.var());
            collect_vars(f.body(), out);
            break;
        case Kind::Not:
            collect_vars(f.body(), out);
            break;
        case Kind::And:
        case Kind::Or:
        case Kind::Implies:
            collect_vars(f.lhs(), out);
            collect_vars(f.rhs(), out);
            break;
        default:
            break;
    }
}

// Simultaneous variable-for-variable substitution, renaming bound variables
// that would capture a substituted argument.
Formula subst_vars(const Formula& f, std::map<std::string, std::string> m, FreshNames& fresh) {
    switch (f.kind()) {
        case Kind::Top:
        case Kind::Bot:
            return f;
        case Kind::Atom: {
            std::vector<std::string> args = f.args();
            for (auto& a : args) {
                auto it = m.find(a);
                if (it != m.end()) a = it->second;
            }
            return Formula::atom(f.pred(), std::move(args));
        }
        case Kind::Not:
            return Formula::negate(subst_vars(f.body(), std::move(m), fresh));
        case Kind::And:
            return Formula::conj(subst_vars(f.lhs(), m, fresh), subst_vars(f.rhs(), std::move(m), fresh));
        case Kind::Or:
            return Formula::disj(subst_vars(f.lhs(), m, fresh), subst_vars(f.rhs(), std::move(m), fresh));
        case Kind::Implies:
            return Formula::implies(subst_vars(f.lhs(), m, fresh),
                                    subst_vars(f.rhs(), std::move(m), fresh));
        case Kind::Forall:
        case Kind::Exists: {
            std::string bound = f.var();
            m.erase(bound);
            bool captures = false;
            for (const auto& v : f.body().free_vars()) {
                auto it = m.find(v);
                if (it != m.end() && it->second == bound) captures = true;
            }
            if (captures) {
                std::string renamed = fresh.next();
                m[bound] = renamed;
                bound = renamed;
            }
            Formula body = subst_vars(f.body(), std::move(m), fresh);
            return f.kind() == Kind::Forall ? Formula::forall(std::move(bound), std::move(body))
                                            : Formula::exists(std::move(bound), std::move(body));
        }
    }
    throw Error("unreachable");
}

Formula apply_rec(const Assignment& a, const Formula& f, FreshNames& fresh) {
    switch (f.kind()) {
        case Kind::Top:
        case Kind::Bot:
            return f;
        case Kind::Atom: {
            const Assignment::Entry* e = a.find(f.pred());
            if (!e) throw Error("assignment does not cover predicate '" + f.pred() + "'");
            if (e->arity != static_cast<int>(f.args().size()))
                throw Error("assignment arity mismatch for '" + f.pred() + "'");
            std::map<std::string, std::string> m;
            for (int i = 0; i < e->arity; ++i) m[canonical_param(i)] = f.args()[i];
            return subst_vars(e->body, std::move(m), fresh);
        }
        case Kind::Not:
            return Formula::negate(apply_rec(a, f.body(), fresh));
        case Kind::And:
            return Formula::conj(apply_rec(a, f.lhs(), fresh), apply_rec(a, f.rhs(), fresh));
        case Kind::Or:
            return Formula::disj(apply_rec(a, f.lhs(), fresh), apply_rec(a, f.rhs(), fresh));
        case Kind::Implies:
            return Formula::implies(apply_rec(a, f.lhs(), fresh), apply_rec(a, f.rhs(), fresh));
        case Kind::Forall:
            return Formula::forall(f.var(), apply_rec(a, f.body(), fresh));
        case Kind::Exists:
            return Formula::exists(f.var(), apply_rec(a, f.body(), fresh));
    }
    throw Error("unreachable");
}

}  // namespace

Formula apply_assignment(const Assignment& a, const Formula& f) {
    std::set<std::string> avoid;
    collect_vars(f, avoid);
    for (const auto& [sym, e] : a.entries()) collect_vars(e.body, avoid);
    FreshNames fresh(std::move(avoid));
    return apply_rec(a, f, fresh);
}

Formula apply_ground(const GroundSubstitution& g, const Formula& f) {
    return apply_assignment(to_assignment(g, Signature::of(f)), f);
}

Formula substitute_var(const Formula& f, const std::string& from, const std::string& to) {
    std::set<std::string> avoid;
    collect_vars(f, avoid);
    avoid.insert(to);
    FreshNames fresh(std::move(avoid));
    return subst_vars(f, {{from, to}}, fresh);
}

bool constant_fold(const Formula& f) {
    switch (f.kind()) {
        case Kind::Top:
            return true;
        case Kind::Bot:
            return false;
        case Kind::Atom:
            throw Error("constant_fold: non-constant atom '" + f.pred() + "'");
        case Kind::Not:
            return !constant_fold(f.body());
        case Kind::And:
            return constant_fold(f.lhs()) && constant_fold(f.rhs());
        case Kind::Or:
            return constant_fold(f.lhs()) || constant_fold(f.rhs());
        case Kind::Implies:
            return !constant_fold(f.lhs()) || constant_fold(f.rhs());
        case Kind::Forall:
        case Kind::Exists:
            return constant_fold(f.body());
    }
    throw Error("unreachable");
}

}  // namespace wb
