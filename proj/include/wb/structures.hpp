#ifndef WB_STRUCTURES_HPP
#define WB_STRUCTURES_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "wb/formula.hpp"
#include "wb/subst.hpp"

namespace wb {

// Finite classical first-order structure: domain {0..size-1} and a tuple
// set per predicate symbol. Used as the semantic side of the CQC machinery
// (function-free language, no built-in equality).
struct FoStructure {
    int size = 1;
    std::map<std::string, std::set<std::vector<int>>> interp;

    std::string describe() const;
};

// Tarskian satisfaction; free variables are read from `env`.
bool eval_structure(const FoStructure& s, const Formula& f, const std::map<std::string, int>& env);

// Truth of the universal closure of f.
bool eval_closed(const FoStructure& s, const Formula& f);

// All structures over `sig` with domain size exactly `size`, in a stable
// order (tuple sets enumerated by binary counting per symbol). Guarded
// against combinatorial blow-up.
std::vector<FoStructure> enumerate_structures(const Signature& sig, int size);

}  // namespace wb

#endif
