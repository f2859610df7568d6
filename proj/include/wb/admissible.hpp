#ifndef WB_ADMISSIBLE_HPP
#define WB_ADMISSIBLE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wb/formula.hpp"
#include "wb/structures.hpp"
#include "wb/subst.hpp"

namespace wb {

enum class LogicId { Ipc, Cpc };

// A rule Gamma / Delta: finite premise and conclusion sets, normalized
// (sorted, deduplicated). A rule is admissible when every substitution
// making all premises provable makes some conclusion provable.
struct Rule {
    std::vector<Formula> premises;
    std::vector<Formula> conclusions;

    static Rule make(std::vector<Formula> premises, std::vector<Formula> conclusions);
    Lang lang() const;
    Formula premise_conj() const { return Formula::conj_all(premises); }
    Formula conclusion_disj() const { return Formula::disj_all(conclusions); }
    Signature signature() const;
};

// The Visser rule V_n instance for given components A_1..A_{n+2}, B_1..B_n
// and optional C:
//   premise     (/\ (A_i -> B_i) -> (A_{n+1} \/ A_{n+2})) \/ C
//   conclusion  \/_{j=1..n+2} (/\ (A_i -> B_i) -> A_j) \/ C
// Without C this is the rule V'_n.
Rule visser_rule(int n, const std::vector<Formula>& a, const std::vector<Formula>& b,
                 const std::optional<Formula>& c = std::nullopt);

// Whether /\Gamma -> \/Delta is a theorem of the logic.
bool derivable(const Rule& r, LogicId logic);

enum class Admissibility { Admissible, NotAdmissible, Unknown };

struct VisserStep {
    int n = 0;
    std::vector<Formula> a, b;
    std::optional<Formula> c;
    Formula matched_premise;  // formula in the derived set the schema matched
    Formula conclusion;       // the V_n conclusion added
};

struct AdmissibilityVerdict {
    Admissibility status = Admissibility::Unknown;
    bool passive = false;
    std::vector<VisserStep> trace;       // Admissible via saturation
    std::vector<Formula> derived;        // the saturated set, premise first
    std::optional<Assignment> witness;   // NotAdmissible
    std::optional<FoStructure> refuting_structure;  // cqc-ground refutations
    std::string note;
};

struct RefutationBudget {
    int pool_atoms = 2;     // candidate bodies use at most this many atoms
    int pool_max_size = 2;  // and at most this many AST nodes
};

// Searches assignments of small formulas (including all ground
// substitutions) to the rule's atoms; returns the first substitution, in
// documented deterministic order, whose instance makes every premise
// provable and every conclusion unprovable. Every witness is re-verified
// before being returned.
std::optional<Assignment> refute_admissibility(const Rule& r, LogicId logic,
                                               const RefutationBudget& budget = {});

struct IpcAdmissibilityOptions {
    int saturation_bound = 2;  // largest n for which V_n is matched
    int depth = 3;             // saturation rounds
    RefutationBudget refutation;
};

// Semi-decision for admissibility in IPC: bounded saturation under Visser's
// rules for the positive side, bounded substitution search for the negative
// side, Unknown otherwise. Positive and negative answers are sound
// unconditionally.
AdmissibilityVerdict admissible_ipc(const Rule& r, const IpcAdmissibilityOptions& opts = {});

// Re-runs every step of an Admissible trace through decide_ipc and the V_n
// instantiator; used by tests and the acceptance suite.
bool reverify_ipc_trace(const Rule& r, const AdmissibilityVerdict& v,
                        std::string* why = nullptr);

// Ground unifier of a propositional formula (first in binary-counting
// order), i.e. a classical satisfying assignment; none when unsatisfiable.
std::optional<GroundSubstitution> unifiable_cpc(const Formula& f);

// Exact decision via structural completeness of CPC: passive premises are
// admissible; otherwise admissible iff derivable, with the first refuting
// ground substitution as witness.
AdmissibilityVerdict admissible_cpc(const Rule& r);

// Whether the rule's premise is not unifiable under the supplied oracle.
bool passive_rule(const Rule& r, const std::function<bool(const Formula&)>& unifiable);

// Ground unifier of a function-free first-order formula; complete for
// unifiability by the ground-substitution lemma.
std::optional<GroundSubstitution> unifiable_cqc(const Formula& f);

// The almost-structural-completeness substitution: with x̄ the free
// variables of A,
//   sigma(P(z̄)) = (forall x̄. A) -> P(z̄)   when tau(P) = Top
//   sigma(P(z̄)) = (forall x̄. A) &  P(z̄)   when tau(P) = Bot
// Arities are read from A's signature; symbols of tau beyond A are nullary.
Assignment sigma_construction_cqc(const Formula& A, const GroundSubstitution& tau);

struct ClaimFailure {
    FoStructure structure;
    std::string detail;
};

struct ClaimReport {
    int structures_checked = 0;
    std::vector<ClaimFailure> failures;
    bool ok() const { return failures.empty(); }
};

// Checks, over every classical structure of domain size <= max_domain, the
// equivalence sigma(B) <-> (forall x̄ A -> B) or (forall x̄ A & B) according
// to the ground value of tau(B).
ClaimReport verify_claim_cqc(const Formula& A, const GroundSubstitution& tau, const Formula& B,
                             int max_domain);

// The decidable content of almost structural completeness for CQC:
// Admissible (passive) when the premise has no ground unifier; NotAdmissible
// when a small classical structure refutes premise -> conclusion (witness
// substitution built by sigma_construction_cqc); Unknown otherwise.
AdmissibilityVerdict admissible_cqc_ground(const Rule& r, int model_bound);

}  // namespace wb

#endif
