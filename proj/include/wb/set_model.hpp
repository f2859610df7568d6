#ifndef WB_SET_MODEL_HPP
#define WB_SET_MODEL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wb/formula.hpp"

namespace wb {

// Finite classical model of the membership language: elements with a
// membership digraph. Intended to be extensional and well-founded;
// validate_classical reports violations of either.
class ClassicalSetModel {
public:
    ClassicalSetModel() = default;
    ClassicalSetModel(std::vector<std::string> names, std::vector<std::set<int>> members);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int e) const { return names_.at(e); }
    const std::set<int>& members(int e) const { return members_.at(e); }
    bool mem(int a, int b) const { return members_[b].count(a) != 0; }

    std::optional<int> find_by_extension(const std::set<int>& ext) const;
    std::optional<int> find_empty() const { return find_by_extension({}); }
    std::optional<int> find_pair(int a, int b) const { return find_by_extension({a, b}); }
    std::optional<int> find_union(int a) const;
    std::optional<int> find_power(int a) const;

    // Membership depth: 0 for elements with no members, else 1 + max over
    // members. Throws on a membership cycle.
    int rank(int e) const;

private:
    std::vector<std::string> names_;
    std::vector<std::set<int>> members_;
};

struct ClassicalValidation {
    std::vector<std::string> extensionality_violations;
    std::vector<std::string> wellfoundedness_violations;
    bool ok() const {
        return extensionality_violations.empty() && wellfoundedness_violations.empty();
    }
};

ClassicalValidation validate_classical(const ClassicalSetModel& m);

// The cumulative hierarchy stage V_n as an extensional digraph, n <= 4.
ClassicalSetModel vrank_model(int n);

// The von Neumann ordinal n as a transitive set: i E j iff i < j. Gives an
// extensional well-founded model of any size n >= 1 (n <= 12).
ClassicalSetModel ordinal_model(int n);

// Tarskian satisfaction of a membership-language formula; quantifiers range
// over the whole domain.
bool eval_classical(const ClassicalSetModel& m, const Formula& f,
                    const std::map<std::string, int>& env = {});

// E_n: "there are at least n elements" (exists x1..xn, pairwise distinct);
// exact variant E_n & ~E_{n+1}.
Formula cardinality_sentence(int n, bool exact);

}  // namespace wb

#endif
