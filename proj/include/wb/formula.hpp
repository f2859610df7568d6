#ifndef WB_FORMULA_HPP
#define WB_FORMULA_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace wb {

// Language of a formula. Prop embeds into both other languages; FirstOrder
// and SetTheory do not mix.
enum class Lang { Prop, FirstOrder, SetTheory };

enum class Kind { Atom, Top, Bot, Not, And, Or, Implies, Forall, Exists };

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Immutable formula AST with value semantics. Atoms apply a predicate symbol
// to variables only; there are no function symbols or constants. The
// set-theoretic language reserves the binary symbols `in` and `eq`.
class Formula {
public:
    Formula() : Formula(top()) {}

    static Formula atom(std::string pred, std::vector<std::string> args = {});
    static Formula in(const std::string& a, const std::string& b) { return atom("in", {a, b}); }
    static Formula eq(const std::string& a, const std::string& b) { return atom("eq", {a, b}); }
    static Formula top();
    static Formula bot();
    static Formula negate(Formula f);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula implies(Formula a, Formula b);
    static Formula iff(Formula a, Formula b);  // sugar: (a->b) & (b->a)
    static Formula forall(std::string var, Formula body);
    static Formula exists(std::string var, Formula body);

    // Left-associative folds; empty conjunction is Top, empty disjunction Bot.
    static Formula conj_all(const std::vector<Formula>& fs);
    static Formula disj_all(const std::vector<Formula>& fs);

    Kind kind() const { return node_->kind; }
    // Derived language: set atoms force SetTheory, other non-nullary atoms
    // force FirstOrder, a quantifier alone reads as FirstOrder (it remains
    // combinable with set-theoretic material), else Prop.
    Lang lang() const;
    bool has_fo_atoms() const { return node_->has_fo_atom; }
    bool has_set_atoms() const { return node_->has_set_atom; }
    bool has_quantifiers() const { return node_->has_quant; }

    const std::string& pred() const { return node_->name; }               // Atom
    const std::vector<std::string>& args() const { return node_->args; }  // Atom
    const std::string& var() const { return node_->name; }                // Forall/Exists

    const Formula& lhs() const { return node_->children[0]; }
    const Formula& rhs() const { return node_->children[1]; }
    const Formula& body() const { return node_->children[0]; }  // Not/Forall/Exists

    bool is_atom() const { return kind() == Kind::Atom; }
    bool is_quantifier() const { return kind() == Kind::Forall || kind() == Kind::Exists; }
    bool is_binary() const {
        return kind() == Kind::And || kind() == Kind::Or || kind() == Kind::Implies;
    }

    // Free variables, sorted lexicographically.
    const std::vector<std::string>& free_vars() const { return node_->fv; }
    // Predicate signature (symbol, arity), sorted by symbol.
    const std::vector<std::pair<std::string, int>>& signature() const { return node_->sig; }

    std::size_t hash() const { return node_->hash; }
    std::size_t size() const { return node_->size; }  // number of AST nodes

    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
    // Total structural order; used to normalize formula sets.
    friend int compare(const Formula& a, const Formula& b);
    friend bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

private:
    struct Node {
        Kind kind;
        bool has_fo_atom = false;
        bool has_set_atom = false;
        bool has_quant = false;
        std::string name;               // predicate or bound variable
        std::vector<std::string> args;  // atom arguments
        std::vector<Formula> children;
        std::vector<std::string> fv;
        std::vector<std::pair<std::string, int>> sig;
        std::size_t hash = 0;
        std::size_t size = 1;
    };

    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Formula make(Node n);

    std::shared_ptr<const Node> node_;
};

struct FormulaLess {
    bool operator()(const Formula& a, const Formula& b) const { return compare(a, b) < 0; }
};

// Number of distinct Implies/Not subformulas; drives the countermodel
// search bound in the IPC decision procedure.
std::size_t implication_subformula_count(const Formula& f);

// Rewrites every Not(x) into Implies(x, Bot). Provers work on the image.
Formula eliminate_negation(const Formula& f);

}  // namespace wb

#endif
