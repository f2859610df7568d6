#ifndef WB_PROVER_HPP
#define WB_PROVER_HPP

#include <map>
#include <optional>
#include <string>

#include "wb/formula.hpp"
#include "wb/kripke_prop.hpp"

namespace wb {

// Raised when the sequent engine declares a formula unprovable but the
// semantic search exhausts its theoretically sufficient bound without a
// countermodel; the sequent verdict stands, and this signals an engine bug.
class InternalInconsistencyError : public Error {
public:
    using Error::Error;
};

struct PropCountermodel {
    PropKripkeModel model;
    int root = 0;
};

struct IpcVerdict {
    bool valid = false;
    std::optional<PropCountermodel> countermodel;
};

struct IpcOptions {
    // Countermodel search covers trees of at most
    // min(2^implication_subformula_count, node_budget) nodes.
    int node_budget = 9;
};

// Provability in intuitionistic propositional logic via a terminating
// root-first contraction-free sequent search (no countermodel).
bool ipc_provable(const Formula& f);

// Dual-engine decision: sequent verdict, plus a finite-tree countermodel
// (first in enumeration order) when invalid.
IpcVerdict decide_ipc(const Formula& f, const IpcOptions& opts = {});

struct CpcVerdict {
    bool valid = false;
    // first falsifying assignment in binary-counting order when invalid
    std::map<std::string, bool> falsifying;
};

CpcVerdict decide_cpc(const Formula& f);

// Classical evaluation of a propositional formula under a total assignment.
bool eval_prop(const Formula& f, const std::map<std::string, bool>& assignment);

}  // namespace wb

#endif
