#ifndef WB_KRIPKE_SET_HPP
#define WB_KRIPKE_SET_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wb/formula.hpp"
#include "wb/set_model.hpp"

namespace wb {

using Env = std::map<std::string, int>;

// First-order Kripke model for the membership language: a finite partial
// order of nodes, a finite domain per node, transition functions between
// comparable nodes, and a membership relation per node. Element ids are
// node-local indices. The structure is plain data; check_coherence reports
// violations of functoriality and atomic persistence rather than the
// constructor enforcing them.
struct SetKripkeModel {
    std::vector<std::string> nodes;
    std::vector<std::vector<bool>> leq;                    // partial order, reflexive
    std::vector<std::vector<std::string>> dom;             // element names per node
    std::map<std::pair<int, int>, std::vector<int>> trans; // for strictly comparable pairs
    std::vector<std::set<std::pair<int, int>>> mem;        // E_v

    int node_count() const { return static_cast<int>(nodes.size()); }
    int node_index(const std::string& name) const;
    int domain_size(int v) const { return static_cast<int>(dom[v].size()); }
    bool member(int v, int a, int b) const { return mem[v].count({a, b}) != 0; }
    // Image of element `e` of node v at node w >= v.
    int transport(int v, int w, int e) const;
    std::vector<int> nodes_above(int v) const;
    std::vector<int> minimal_nodes() const;
    // E_v extension of an element.
    std::set<int> extension(int v, int e) const;
    // Membership depth at a node; throws on cycles.
    int depth_rank(int v, int e) const;

    // Wraps a classical model as a one-node Kripke model.
    static SetKripkeModel one_node(const ClassicalSetModel& m, const std::string& node_name = "v");

    // Fills in transitions for all comparable pairs by composing along
    // covering steps; reports nothing (check_coherence finds conflicts).
    void complete_transitions();
};

struct CoherenceReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Verifies: leq is a partial order; domains are nonempty; transitions are
// total functions with f_vv = id and f_uw = f_vw o f_uv; membership atoms
// persist along transitions.
CoherenceReport check_coherence(const SetKripkeModel& m);

// Intuitionistic first-order forcing; `env` maps variables to elements of
// dom[v] and is transported through the transition functions under
// universal-strength connectives.
bool force_set(const SetKripkeModel& m, int v, const Formula& f, const Env& env = {});

// Tagged disjoint union: no order between components; node names are kept
// when globally distinct and prefixed "k:" otherwise.
SetKripkeModel disjoint_union(const std::vector<SetKripkeModel>& ms);

// Membership formula "f is a function from a to b" over Kuratowski pairs;
// free variables are exactly the three given names.
Formula function_space_formula(const std::string& f, const std::string& a, const std::string& b);

// Whether every quantifier in f is bounded (forall x. x in a -> ..., exists
// x. x in a & ...).
bool is_delta0(const Formula& f);

struct AxiomReport {
    std::string axiom;
    std::string node;
    bool fragment_relative = true;  // graded checks are relative to the finite fragment
    std::vector<std::string> failures;
    std::string note;
    bool passed() const { return failures.empty(); }
};

struct AxiomSpec {
    std::string name;             // extensionality, pair, union, emptyset, separation,
                                  // bounded-separation, replacement, powerset,
                                  // ein-induction, exponentiation, strong-infinity
    std::optional<Formula> phi;   // scheme instance for the scheme axioms
    int n_max = 2;                // strong infinity chain bound
};

// Graded check of one axiom of the figure at node v: universally quantified
// set variables range over elements of membership depth <= rank_bound,
// existential witnesses over depth <= rank_bound + 1, and the remaining
// matrix is evaluated exactly by force_set. Scheme formulas use designated
// variables: z (separation), y/z (replacement), x (ein-induction); their
// other free variables are treated as universally ranged parameters.
AxiomReport check_axiom(const SetKripkeModel& m, const AxiomSpec& axiom, int v, int rank_bound);

// Names accepted by check_axiom.
const std::vector<std::string>& axiom_names();

}  // namespace wb

#endif
