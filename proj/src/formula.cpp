#include "wb/formula.hpp"

#include <algorithm>

namespace wb {

namespace {

std::size_t hash_mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::vector<std::string> merge_sorted(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

}  // namespace

Lang Formula::lang() const {
    if (node_->has_set_atom) return Lang::SetTheory;
    if (node_->has_fo_atom || node_->has_quant) return Lang::FirstOrder;
    return Lang::Prop;
}

Formula Formula::make(Node n) {
    std::size_t h = hash_mix(static_cast<std::size_t>(n.kind) + 1, std::hash<std::string>{}(n.name));
    for (const auto& a : n.args) h = hash_mix(h, std::hash<std::string>{}(a));
    for (const auto& c : n.children) {
        h = hash_mix(h, c.hash());
        n.size += c.size();
    }
    n.hash = h;
    return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::atom(std::string pred, std::vector<std::string> args) {
    if (pred.empty()) throw Error("empty predicate symbol");
    Node n;
    n.kind = Kind::Atom;
    if (pred == "in" || pred == "eq") {
        if (args.size() != 2) throw Error("set-theoretic atom '" + pred + "' takes exactly two arguments");
        n.has_set_atom = true;
    } else if (!args.empty()) {
        n.has_fo_atom = true;
    }
    n.sig = {{pred, static_cast<int>(args.size())}};
    n.fv = args;
    std::sort(n.fv.begin(), n.fv.end());
    n.fv.erase(std::unique(n.fv.begin(), n.fv.end()), n.fv.end());
    n.name = std::move(pred);
    n.args = std::move(args);
    return make(std::move(n));
}

Formula Formula::top() {
    Node n;
    n.kind = Kind::Top;
    return make(std::move(n));
}

Formula Formula::bot() {
    Node n;
    n.kind = Kind::Bot;
    return make(std::move(n));
}

Formula Formula::negate(Formula f) {
    Node n;
    n.kind = Kind::Not;
    n.has_fo_atom = f.has_fo_atoms();
    n.has_set_atom = f.has_set_atoms();
    n.has_quant = f.has_quantifiers();
    n.fv = f.free_vars();
    n.sig = f.signature();
    n.children = {std::move(f)};
    return make(std::move(n));
}

static std::vector<std::pair<std::string, int>> merge_sig(
    std::vector<std::pair<std::string, int>> a, const std::vector<std::pair<std::string, int>>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i].first == a[i - 1].first)
            throw Error("predicate symbol '" + a[i].first + "' used with inconsistent arity");
    return a;
}

Formula Formula::conj(Formula a, Formula b) {
    Node n;
    n.kind = Kind::And;
    n.has_fo_atom = a.has_fo_atoms() || b.has_fo_atoms();
    n.has_set_atom = a.has_set_atoms() || b.has_set_atoms();
    n.has_quant = a.has_quantifiers() || b.has_quantifiers();
    if (n.has_fo_atom && n.has_set_atom)
        throw Error("cannot mix first-order and set-theoretic subformulas");
    n.fv = merge_sorted(a.free_vars(), b.free_vars());
    n.sig = merge_sig(a.signature(), b.signature());
    n.children = {std::move(a), std::move(b)};
    return make(std::move(n));
}

Formula Formula::disj(Formula a, Formula b) {
    Node n;
    n.kind = Kind::Or;
    n.has_fo_atom = a.has_fo_atoms() || b.has_fo_atoms();
    n.has_set_atom = a.has_set_atoms() || b.has_set_atoms();
    n.has_quant = a.has_quantifiers() || b.has_quantifiers();
    if (n.has_fo_atom && n.has_set_atom)
        throw Error("cannot mix first-order and set-theoretic subformulas");
    n.fv = merge_sorted(a.free_vars(), b.free_vars());
    n.sig = merge_sig(a.signature(), b.signature());
    n.children = {std::move(a), std::move(b)};
    return make(std::move(n));
}

Formula Formula::implies(Formula a, Formula b) {
    Node n;
    n.kind = Kind::Implies;
    n.has_fo_atom = a.has_fo_atoms() || b.has_fo_atoms();
    n.has_set_atom = a.has_set_atoms() || b.has_set_atoms();
    n.has_quant = a.has_quantifiers() || b.has_quantifiers();
    if (n.has_fo_atom && n.has_set_atom)
        throw Error("cannot mix first-order and set-theoretic subformulas");
    n.fv = merge_sorted(a.free_vars(), b.free_vars());
    n.sig = merge_sig(a.signature(), b.signature());
    n.children = {std::move(a), std::move(b)};
    return make(std::move(n));
}

Formula Formula::iff(Formula a, Formula b) { return conj(implies(a, b), implies(b, a)); }

Formula Formula::forall(std::string var, Formula body) {
    if (var.empty()) throw Error("empty quantifier variable");
    Node n;
    n.kind = Kind::Forall;
    n.has_fo_atom = body.has_fo_atoms();
    n.has_set_atom = body.has_set_atoms();
    n.has_quant = true;
    n.fv = body.free_vars();
    n.fv.erase(std::remove(n.fv.begin(), n.fv.end(), var), n.fv.end());
    n.sig = body.signature();
    n.name = std::move(var);
    n.children = {std::move(body)};
    return make(std::move(n));
}

Formula Formula::exists(std::string var, Formula body) {
    if (var.empty()) throw Error("empty quantifier variable");
    Node n;
    n.kind = Kind::Exists;
    n.has_fo_atom = body.has_fo_atoms();
    n.has_set_atom = body.has_set_atoms();
    n.has_quant = true;
    n.fv = body.free_vars();
    n.fv.erase(std::remove(n.fv.begin(), n.fv.end(), var), n.fv.end());
    n.sig = body.signature();
    n.name = std::move(var);
    n.children = {std::move(body)};
    return make(std::move(n));
}

Formula Formula::conj_all(const std::vector<Formula>& fs) {
    if (fs.empty()) return top();
    Formula out = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) out = conj(out, fs[i]);
    return out;
}

Formula Formula::disj_all(const std::vector<Formula>& fs) {
    if (fs.empty()) return bot();
    Formula out = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) out = disj(out, fs[i]);
    return out;
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash()) return false;
    return compare(a, b) == 0;
}

int compare(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    if (int c = a.node_->name.compare(b.node_->name)) return c < 0 ? -1 : 1;
    if (a.node_->args != b.node_->args) return a.node_->args < b.node_->args ? -1 : 1;
    if (a.node_->children.size() != b.node_->children.size())
        return a.node_->children.size() < b.node_->children.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.node_->children.size(); ++i)
        if (int c = compare(a.node_->children[i], b.node_->children[i])) return c;
    return 0;
}

namespace {

void collect_impl(const Formula& f, std::vector<Formula>& acc) {
    if (f.kind() == Kind::Implies || f.kind() == Kind::Not) {
        bool seen = false;
        for (const auto& g : acc)
            if (g == f) {
                seen = true;
                break;
            }
        if (!seen) acc.push_back(f);
    }
    switch (f.kind()) {
        case Kind::Not:
        case Kind::Forall:
        case Kind::Exists:
            collect_impl(f.body(), acc);
            break;
        case Kind::And:
        case Kind::Or:
        case Kind::Implies:
            collect_impl(f.lhs(), acc);
            collect_impl(f.rhs(), acc);
            break;
        default:
            break;
    }
}

}  // namespace

std::size_t implication_subformula_count(const Formula& f) {
    std::vector<Formula> acc;
    collect_impl(f, acc);
    return acc.size();
}

Formula eliminate_negation(const Formula& f) {
    switch (f.kind()) {
        case Kind::Atom:
        case Kind::Top:
        case Kind::Bot:
            return f;
        case Kind::Not:
            return Formula::implies(eliminate_negation(f.body()), Formula::bot());
        case Kind::And:
            return Formula::conj(eliminate_negation(f.lhs()), eliminate_negation(f.rhs()));
        case Kind::Or:
            return Formula::disj(eliminate_negation(f.lhs()), eliminate_negation(f.rhs()));
        case Kind::Implies:
            return Formula::implies(eliminate_negation(f.lhs()), eliminate_negation(f.rhs()));
        case Kind::Forall:
            return Formula::forall(f.var(), eliminate_negation(f.body()));
        case Kind::Exists:
            return Formula::exists(f.var(), eliminate_negation(f.body()));
    }
    throw Error("unreachable");
}

}  // namespace wb
