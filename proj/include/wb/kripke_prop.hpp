#ifndef WB_KRIPKE_PROP_HPP
#define WB_KRIPKE_PROP_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "wb/formula.hpp"

namespace wb {

// Finite propositional Kripke model: a partial order on nodes with a
// monotone valuation. Construction validates both.
class PropKripkeModel {
public:
    PropKripkeModel() = default;

    // `cover` lists covering pairs (lower, upper); the order is the
    // reflexive-transitive closure. Valuation maps nodes to atom lists.
    static PropKripkeModel from_cover(std::vector<std::string> nodes,
                                      const std::vector<std::pair<std::string, std::string>>& cover,
                                      const std::map<std::string, std::vector<std::string>>& valuation);

    // Internal fast path: `leq` must already be a partial order.
    static PropKripkeModel from_order(std::vector<std::string> nodes,
                                      std::vector<std::vector<bool>> leq,
                                      std::vector<std::set<std::string>> valuation);

    std::size_t node_count() const { return nodes_.size(); }
    const std::string& node_name(int v) const { return nodes_.at(v); }
    int node_index(const std::string& name) const;
    bool leq(int v, int w) const { return leq_[v][w]; }
    bool holds_atom(int v, const std::string& atom) const { return valuation_[v].count(atom) != 0; }
    const std::set<std::string>& atoms_at(int v) const { return valuation_[v]; }
    // Minimal nodes (roots of the poset).
    std::vector<int> minimal_nodes() const;
    // Covering pairs, recomputed from the order (for serialization).
    std::vector<std::pair<int, int>> cover_pairs() const;

    PropKripkeModel with_valuation(std::vector<std::set<std::string>> valuation) const;

private:
    std::vector<std::string> nodes_;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::set<std::string>> valuation_;
};

// Intuitionistic forcing at a node; the formula must be propositional.
bool force_prop(const PropKripkeModel& m, int v, const Formula& f);

struct PersistenceViolation {
    Formula formula;
    int v, w;
};

struct PersistenceReport {
    std::vector<PersistenceViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks that forcing of every formula propagates upward; always clean on
// valid models, so this is a regression test of the forcing engine.
PersistenceReport check_persistence(const PropKripkeModel& m, const std::vector<Formula>& fs);

// All rooted trees with at most `max_nodes` nodes, as poset frames (root is
// node 0, order = ancestor <= descendant), up to isomorphism, each exactly
// once; ordered by node count, then by a canonical code.
std::vector<PropKripkeModel> enumerate_finite_trees(int max_nodes);

// All upward-closed node sets of the model's order, as bitmasks over node
// indices, sorted ascending. Requires node_count <= 16.
std::vector<unsigned> up_sets(const PropKripkeModel& m);

}  // namespace wb

#endif
