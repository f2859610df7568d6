#ifndef WB_GENERATORS_HPP
#define WB_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wb/admissible.hpp"
#include "wb/formula.hpp"
#include "wb/kripke_prop.hpp"
#include "wb/kripke_set.hpp"

namespace wb {

// All randomized corpora are driven by an explicit engine so runs are
// reproducible from a seed.
using Rng = std::mt19937_64;

Formula random_prop_formula(Rng& rng, const std::vector<std::string>& atoms, int size,
                            bool allow_constants = true);

// Closed membership-language sentence; quantifier-bound variables feed the
// atoms, so any generated formula is a sentence.
Formula random_set_sentence(Rng& rng, int size);

// Random poset model: a rooted tree order with a random monotone valuation.
PropKripkeModel random_prop_model(Rng& rng, int max_nodes,
                                  const std::vector<std::string>& atoms);

// Random coherent set-theoretic Kripke model on a tree frame: transitions
// are arbitrary functions, memberships persist by construction.
SetKripkeModel random_set_model(Rng& rng, int max_nodes, int max_domain);

Rule random_rule(Rng& rng, const std::vector<std::string>& atoms, int formula_size,
                 int max_premises, int max_conclusions);

struct PropertySuiteResult {
    int cases = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Persistence of propositional forcing on random models/formulas.
PropertySuiteResult persistence_suite_prop(std::uint64_t seed, int cases);
// Persistence of first-order forcing on random coherent set models.
PropertySuiteResult persistence_suite_set(std::uint64_t seed, int cases);
// check_coherence accepts generated models; disjoint unions preserve
// component forcing; generated classical stages validate.
PropertySuiteResult coherence_suite(std::uint64_t seed, int cases);

}  // namespace wb

#endif
