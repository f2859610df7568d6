#ifndef WB_SUBST_HPP
#define WB_SUBST_HPP

#include <map>
#include <string>
#include <vector>

#include "wb/formula.hpp"

namespace wb {

// Canonical parameter variable for argument slot i of an assigned formula.
std::string canonical_param(int i);

struct Signature {
    // sorted by symbol, symbols distinct, arities >= 0
    std::vector<std::pair<std::string, int>> preds;

    static Signature of(const Formula& f) { return Signature{f.signature()}; }
    bool empty() const { return preds.empty(); }
    std::size_t size() const { return preds.size(); }
};

// Maps predicate symbols to formulas over the canonical parameters
// x0..x{arity-1}; the free variables of an assigned formula may not exceed
// the symbol's arity.
class Assignment {
public:
    struct Entry {
        int arity;
        Formula body;
    };

    void set(const std::string& pred, int arity, Formula body);
    const Entry* find(const std::string& pred) const;
    const std::map<std::string, Entry>& entries() const { return map_; }
    bool covers(const Formula& f) const;

private:
    std::map<std::string, Entry> map_;
};

// Substitution whose range is {Top, Bot}; total on a declared signature.
using GroundSubstitution = std::map<std::string, bool>;

// All 2^|sig| ground substitutions, enumerated by binary counting: the
// all-false substitution first, with the lexicographically smallest symbol
// as the least-significant bit.
std::vector<GroundSubstitution> ground_substitutions(const Signature& sig);

Assignment to_assignment(const GroundSubstitution& g, const Signature& sig);

// Applies the assignment to every atom, commuting with connectives and
// quantifiers; bound variables of assigned formulas are renamed with a
// deterministic fresh-name counter (v0, v1, ...) when they would capture an
// argument variable. Throws on a predicate symbol the assignment lacks.
Formula apply_assignment(const Assignment& a, const Formula& f);

Formula apply_ground(const GroundSubstitution& g, const Formula& f);

// Capture-avoiding replacement of a free variable by another variable.
Formula substitute_var(const Formula& f, const std::string& from, const std::string& to);

// Classical truth value of a formula whose atoms are all Top or Bot;
// quantified bodies are constant, and nonempty domains are assumed, so
// forall/exists fold to their bodies. Throws on a non-constant atom.
bool constant_fold(const Formula& f);

}  // namespace wb

#endif
