#include "wb/structures.hpp"

#include <cmath>

namespace wb {

std::string FoStructure::describe() const {
    std::string out = "|D|=" + std::to_string(size);
    for (const auto& [sym, tuples] : interp) {
        out += " " + sym + "={";
        bool first_tuple = true;
        for (const auto& t : tuples) {
            if (!first_tuple) out += ",";
            first_tuple = false;
            if (t.size() == 1) {
                out += std::to_string(t[0]);
            } else {
                out += "(";
                for (std::size_t i = 0; i < t.size(); ++i) {
                    if (i) out += " ";
                    out += std::to_string(t[i]);
                }
                out += ")";
            }
        }
        out += "}";
    }
    return out;
}

bool eval_structure(const FoStructure& s, const Formula& f, const std::map<std::string, int>& env) {
    switch (f.kind()) {
        case Kind::Top:
            return true;
        case Kind::Bot:
            return false;
        case Kind::Atom: {
            auto it = s.interp.find(f.pred());
            if (it == s.interp.end()) throw Error("structure lacks predicate '" + f.pred() + "'");
            std::vector<int> tuple;
            for (const auto& a : f.args()) {
                auto ev = env.find(a);
                if (ev == env.end()) throw Error("unbound variable '" + a + "'");
                tuple.push_back(ev->second);
            }
            return it->second.count(tuple) != 0;
        }
        case Kind::Not:
            return !eval_structure(s, f.body(), env);
        case Kind::And:
            return eval_structure(s, f.lhs(), env) && eval_structure(s, f.rhs(), env);
        case Kind::Or:
            return eval_structure(s, f.lhs(), env) || eval_structure(s, f.rhs(), env);
        case Kind::Implies:
            return !eval_structure(s, f.lhs(), env) || eval_structure(s, f.rhs(), env);
        case Kind::Forall: {
            std::map<std::string, int> e = env;
            for (int d = 0; d < s.size; ++d) {
                e[f.var()] = d;
                if (!eval_structure(s, f.body(), e)) return false;
            }
            return true;
        }
        case Kind::Exists: {
            std::map<std::string, int> e = env;
            for (int d = 0; d < s.size; ++d) {
                e[f.var()] = d;
                if (eval_structure(s, f.body(), e)) return true;
            }
            return false;
        }
    }
    throw Error("unreachable");
}

bool eval_closed(const FoStructure& s, const Formula& f) {
    Formula g = f;
    std::vector<std::string> fv = f.free_vars();
    for (auto it = fv.rbegin(); it != fv.rend(); ++it) g = Formula::forall(*it, g);
    return eval_structure(s, g, {});
}

std::vector<FoStructure> enumerate_structures(const Signature& sig, int size) {
    if (size < 1) throw Error("structures need a nonempty domain");
    double log2_total = 0;
    for (const auto& [sym, arity] : sig.preds) log2_total += std::pow(size, arity);
    if (log2_total > 22) throw Error("structure space too large to enumerate");

    // all tuples over the domain, per arity
    auto tuples_of = [&](int arity) {
        std::vector<std::vector<int>> out{{}};
        for (int i = 0; i < arity; ++i) {
            std::vector<std::vector<int>> next;
            for (const auto& t : out)
                for (int d = 0; d < size; ++d) {
                    auto u = t;
                    u.push_back(d);
                    next.push_back(std::move(u));
                }
            out = std::move(next);
        }
        return out;
    };

    std::vector<FoStructure> acc{FoStructure{size, {}}};
    for (const auto& [sym, arity] : sig.preds) {
        auto tuples = tuples_of(arity);
        std::vector<FoStructure> next;
        for (const auto& base : acc) {
            for (std::size_t mask = 0; mask < (std::size_t{1} << tuples.size()); ++mask) {
                FoStructure s = base;
                auto& set = s.interp[sym];
                for (std::size_t i = 0; i < tuples.size(); ++i)
                    if (mask & (std::size_t{1} << i)) set.insert(tuples[i]);
                next.push_back(std::move(s));
            }
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace wb
