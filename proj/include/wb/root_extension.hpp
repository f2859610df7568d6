#ifndef WB_ROOT_EXTENSION_HPP
#define WB_ROOT_EXTENSION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wb/kripke_set.hpp"
#include "wb/subst.hpp"

namespace wb {

// Raised when a witness construction cannot be carried out (a required set
// is absent at some node, or a rank exceeds the enumerated strata).
class WitnessError : public Error {
public:
    using Error::Error;
};

class WidthCapError : public Error {
public:
    WidthCapError(const std::string& msg, int rank) : Error(msg), rank_reached(rank) {}
    int rank_reached;
};

struct RootExtensionConfig {
    int alpha_max = 2;   // enumerated strata D_r^1 .. D_r^alpha_max
    int width_cap = 64;  // maximum elements per rank stratum
    bool lazy = false;   // witness-only construction: no up-front enumeration
};

// An element of the new root domain: a choice of root members (indices of
// previously constructed elements) and one element per original node,
// coherent along transitions, with membership respected upward.
struct RootElement {
    std::vector<int> root_members;  // sorted element indices, all of smaller rank
    std::vector<int> upper;         // per original node index
    int rank = 1;                   // least stratum containing the element
};

// The extended model M+: the base model plus a new root below every node,
// whose domain carries the stratified root elements. Base nodes keep their
// indices; the root is the last node. The registry index of a root element
// equals its index in the root's domain.
class RootExtension {
public:
    const SetKripkeModel& model() const { return model_; }
    const SetKripkeModel& base() const { return base_; }
    int root() const { return base_.node_count(); }
    const std::vector<RootElement>& elements() const { return elements_; }
    int element_count() const { return static_cast<int>(elements_.size()); }
    const RootExtensionConfig& config() const { return cfg_; }

    // Finds the element with these members and upper values, or—in lazy
    // mode—creates it. Validates the defining clauses; in enumerate mode an
    // absent element means its rank exceeds alpha_max.
    int intern(std::vector<int> root_members, std::vector<int> upper);

    std::optional<int> find(const std::vector<int>& root_members,
                            const std::vector<int>& upper) const;

    // All coherent choice functions of one element per base node.
    const std::vector<std::vector<int>>& upper_families() const { return families_; }

private:
    friend RootExtension extend(const SetKripkeModel&, const RootExtensionConfig&,
                                const std::string&);

    SetKripkeModel base_;
    SetKripkeModel model_;
    RootExtensionConfig cfg_;
    std::vector<RootElement> elements_;
    std::vector<std::vector<int>> families_;

    void validate_element(const std::vector<int>& root_members,
                          const std::vector<int>& upper) const;
    int append(std::vector<int> root_members, std::vector<int> upper);
    void enumerate();
};

// The extended-model construction: new root r <= everything, root elements
// enumerated by rank up to alpha_max (unless lazy), membership y E_r x iff
// y in x(r), transitions f_rv(x) = x(v). The restriction of the result to
// the original frame is bit-identical to m.
RootExtension extend(const SetKripkeModel& m, const RootExtensionConfig& cfg = {},
                     const std::string& root_name = "r");

// Independent re-validation of every enumerated element against the
// defining clauses; used by tests.
std::vector<std::string> validate_extension(const RootExtension& ext);

// --- witnesses -------------------------------------------------------------
// Each returns the registry index of the witnessing element, interning it
// (lazy mode) or locating it among the enumerated elements.

int witness_empty(RootExtension& ext);
int witness_pair(RootExtension& ext, int x, int y);
int witness_union(RootExtension& ext, int x);
// phi's designated variable is `sep_var`; other free variables must be bound
// by `params` (values are registry indices).
int witness_separation(RootExtension& ext, int x, const Formula& phi, const std::string& sep_var,
                       const std::map<std::string, int>& params = {});
int witness_power(RootExtension& ext, int x);
int witness_replacement(RootExtension& ext, int x, const Formula& phi, const std::string& y_var,
                        const std::string& z_var, const std::map<std::string, int>& params = {});
int witness_exponentiation(RootExtension& ext, int a, int b);
// The von Neumann chain 0_r .. n_max_r; each successor is built by pairing
// and union and re-verified to force (n+1) = n ∪ {n}. A bounded
// approximation of the strong infinity witness.
std::vector<int> witness_strong_infinity(RootExtension& ext, int n_max);

struct EinductionReport {
    bool wellfounded = false;
    bool rank_decreasing = false;
    AxiomReport axiom;
    bool ok() const { return wellfounded && rank_decreasing && axiom.passed(); }
};

// Verifies that E_r is well-founded and rank-decreasing on the enumerated
// domain, then checks the membership-induction instance for phi at the root.
EinductionReport check_ein_induction(RootExtension& ext, const Formula& phi, int rank_bound);

struct DemoReport {
    bool ok = false;
    std::vector<std::string> facts;
};

// Disjunction-property demonstration: from m1 refuting phi and m2 refuting
// psi at their roots, the extended disjoint union refutes phi | psi at the
// new root.
DemoReport dp_demo(const SetKripkeModel& m1, const SetKripkeModel& m2, const Formula& phi,
                   const Formula& psi, const RootExtensionConfig& cfg = {});

// Semantic refutation pattern behind the admissibility of V'_n: sigma maps
// the component atoms a1..a{n+2}, b1..bn to sentences; each ms[j-1] must
// force every sigma(a_i) -> sigma(b_i) but not sigma(a_j). The extended
// union then forces every implication at the new root while refuting each
// sigma(a_j) and the disjunction sigma(a_{n+1}) | sigma(a_{n+2}).
DemoReport visser_semantic_demo(const std::vector<SetKripkeModel>& ms, const Assignment& sigma,
                                int n, const RootExtensionConfig& cfg = {});

}  // namespace wb

#endif
