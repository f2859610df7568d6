#ifndef WB_DEJONGH_HPP
#define WB_DEJONGH_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wb/kripke_prop.hpp"
#include "wb/root_extension.hpp"
#include "wb/set_model.hpp"
#include "wb/subst.hpp"

namespace wb {

// A finite rooted tree in which every non-leaf has at least two immediate
// successors, with a monotone valuation and one classical model per leaf.
// Leaf models must have pairwise distinct sizes so that exact cardinality
// sentences distinguish them.
struct SplittingTree {
    std::vector<std::string> nodes;
    std::vector<int> parent;  // -1 at the root (index 0)
    std::map<std::string, std::set<int>> valuation;
    std::map<int, ClassicalSetModel> leaf_models;

    int node_count() const { return static_cast<int>(nodes.size()); }
    bool is_leaf(int v) const;
    std::vector<int> children(int v) const;
    bool descends(int v, int w) const;  // v <= w in the tree order
    // Throws unless the structure satisfies all invariants above.
    void validate() const;

    PropKripkeModel as_prop_model() const;
};

// The set of leaves above each node; distinct nodes have distinct leaf sets.
std::map<int, std::set<int>> leaf_sets(const SplittingTree& t);

// phi_l per leaf: the exact cardinality sentence of the leaf model's size.
// Verified: eval_classical(M_l, phi_k) iff l == k.
std::map<int, Formula> distinguishing_sentences(const SplittingTree& t);

// gamma_v = ~~ \/_{l in E_v} phi_l
Formula gamma(const SplittingTree& t, const std::map<int, Formula>& phis, int v);

// tau(p) = \/_{v in V(p)} gamma_v; an assignment of closed membership
// sentences to the tree's atoms (empty disjunction is false).
Assignment tau(const SplittingTree& t, const std::map<int, Formula>& phis);

// Builds the set-theoretic Kripke model over the tree: leaves carry their
// classical models, internal nodes are built bottom-up by root-extending the
// disjoint union of the children's models. Node names follow the tree.
SetKripkeModel build_tree_model(const SplittingTree& t, const RootExtensionConfig& cfg);

struct TranslationReport {
    std::vector<std::string> failures;
    // matrix[w][p]: whether tau(p) is forced at node w
    std::map<std::string, std::map<std::string, bool>> matrix;
    bool ok() const { return failures.empty(); }
};

// Checks M,w forces tau(p) iff w in V(p) for every node and atom, and, when
// A is supplied, that M,w forces A^tau iff (t,V),w forces A.
TranslationReport verify_translation(const SetKripkeModel& m, const SplittingTree& t,
                                     const Assignment& tr, const std::optional<Formula>& A);

struct DejonghCertificate {
    SplittingTree tree;
    SetKripkeModel model;
    Assignment translation;
    TranslationReport report;
    bool root_refutes = false;  // root does not force A^tau
    bool ok() const { return report.ok() && root_refutes; }
};

// Produces a countermodel certificate for a non-theorem A: a splitting tree
// refuting A (derived from decide_ipc's countermodel, with single-child
// nodes repaired by duplicating subtrees), ordinal leaf models, the
// translation tau, and the verification that the root does not force A^tau.
DejonghCertificate dejongh_counterexample(const Formula& A, const RootExtensionConfig& cfg = {});

// Same, over a supplied tree; validates that the tree's valuation refutes A
// at the root when A is given.
DejonghCertificate dejongh_certificate(const SplittingTree& t, const std::optional<Formula>& A,
                                       const RootExtensionConfig& cfg = {});

}  // namespace wb

#endif
