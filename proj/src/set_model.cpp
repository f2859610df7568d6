#include "wb/set_model.hpp"

#include <algorithm>

namespace wb {

ClassicalSetModel::ClassicalSetModel(std::vector<std::string> names,
                                     std::vector<std::set<int>> members)
    : names_(std::move(names)), members_(std::move(members)) {
    if (names_.size() != members_.size()) throw Error("element/membership size mismatch");
    for (const auto& ms : members_)
        for (int e : ms)
            if (e < 0 || e >= size()) throw Error("membership references unknown element");
}

std::optional<int> ClassicalSetModel::find_by_extension(const std::set<int>& ext) const {
    for (int e = 0; e < size(); ++e)
        if (members_[e] == ext) return e;
    return std::nullopt;
}

std::optional<int> ClassicalSetModel::find_union(int a) const {
    std::set<int> ext;
    for (int m : members_[a]) ext.insert(members_[m].begin(), members_[m].end());
    return find_by_extension(ext);
}

std::optional<int> ClassicalSetModel::find_power(int a) const {
    std::set<int> ext;
    for (int e = 0; e < size(); ++e)
        if (std::includes(members_[a].begin(), members_[a].end(), members_[e].begin(),
                          members_[e].end()))
            ext.insert(e);
    return find_by_extension(ext);
}

int ClassicalSetModel::rank(int e) const {
    std::vector<int> state(size(), 0);  // 0 unvisited, 1 in progress, 2 done
    std::vector<int> memo(size(), 0);
    auto rec = [&](auto&& self, int x) -> int {
        if (state[x] == 1) throw Error("membership cycle at '" + names_[x] + "'");
        if (state[x] == 2) return memo[x];
        state[x] = 1;
        int r = 0;
        for (int m : members_[x]) r = std::max(r, self(self, m) + 1);
        state[x] = 2;
        memo[x] = r;
        return r;
    };
    return rec(rec, e);
}

ClassicalValidation validate_classical(const ClassicalSetModel& m) {
    ClassicalValidation report;
    for (int a = 0; a < m.size(); ++a)
        for (int b = a + 1; b < m.size(); ++b)
            if (m.members(a) == m.members(b))
                report.extensionality_violations.push_back("'" + m.name(a) + "' and '" + m.name(b) +
                                                           "' have the same members");
    // cycle detection by iterative removal of member-free elements
    std::vector<std::set<int>> remaining;
    for (int e = 0; e < m.size(); ++e) remaining.push_back(m.members(e));
    std::vector<bool> removed(m.size(), false);
    bool progress = true;
    while (progress) {
        progress = false;
        for (int e = 0; e < m.size(); ++e) {
            if (removed[e] || !remaining[e].empty()) continue;
            removed[e] = true;
            progress = true;
            for (auto& ms : remaining) ms.erase(e);
        }
    }
    for (int e = 0; e < m.size(); ++e)
        if (!removed[e])
            report.wellfoundedness_violations.push_back("'" + m.name(e) +
                                                        "' lies on a membership cycle");
    return report;
}

ClassicalSetModel vrank_model(int n) {
    if (n < 0 || n > 4) throw Error("vrank_model supports 0 <= n <= 4");
    std::vector<std::set<int>> members;
    for (int stage = 1; stage <= n; ++stage) {
        std::size_t prev = members.size();
        // subsets of the previous stage's elements, by ascending bitmask
        for (std::size_t mask = 0; mask < (std::size_t{1} << prev); ++mask) {
            std::set<int> ext;
            for (std::size_t i = 0; i < prev; ++i)
                if (mask & (std::size_t{1} << i)) ext.insert(static_cast<int>(i));
            bool exists = false;
            for (const auto& ms : members)
                if (ms == ext) {
                    exists = true;
                    break;
                }
            if (!exists) members.push_back(std::move(ext));
        }
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < members.size(); ++i) names.push_back("s" + std::to_string(i));
    return ClassicalSetModel(std::move(names), std::move(members));
}

ClassicalSetModel ordinal_model(int n) {
    if (n < 1 || n > 12) throw Error("ordinal_model supports 1 <= n <= 12");
    std::vector<std::string> names;
    std::vector<std::set<int>> members(n);
    for (int i = 0; i < n; ++i) {
        names.push_back("o" + std::to_string(i));
        for (int j = 0; j < i; ++j) members[i].insert(j);
    }
    return ClassicalSetModel(std::move(names), std::move(members));
}

bool eval_classical(const ClassicalSetModel& m, const Formula& f,
                    const std::map<std::string, int>& env) {
    if (f.has_fo_atoms())
        throw Error("eval_classical handles membership-language formulas");
    switch (f.kind()) {
        case Kind::Top:
            return true;
        case Kind::Bot:
            return false;
        case Kind::Atom: {
            if (f.args().size() != 2) throw Error("eval_classical: atom '" + f.pred() + "' is not a membership atom");
            auto lookup = [&](const std::string& v) {
                auto it = env.find(v);
                if (it == env.end()) throw Error("unbound variable '" + v + "'");
                return it->second;
            };
            int a = lookup(f.args()[0]);
            int b = lookup(f.args()[1]);
            return f.pred() == "in" ? m.mem(a, b) : a == b;
        }
        case Kind::Not:
            return !eval_classical(m, f.body(), env);
        case Kind::And:
            return eval_classical(m, f.lhs(), env) && eval_classical(m, f.rhs(), env);
        case Kind::Or:
            return eval_classical(m, f.lhs(), env) || eval_classical(m, f.rhs(), env);
        case Kind::Implies:
            return !eval_classical(m, f.lhs(), env) || eval_classical(m, f.rhs(), env);
        case Kind::Forall: {
            std::map<std::string, int> e = env;
            for (int d = 0; d < m.size(); ++d) {
                e[f.var()] = d;
                if (!eval_classical(m, f.body(), e)) return false;
            }
            return true;
        }
        case Kind::Exists: {
            std::map<std::string, int> e = env;
            for (int d = 0; d < m.size(); ++d) {
                e[f.var()] = d;
                if (eval_classical(m, f.body(), e)) return true;
            }
            return false;
        }
    }
    throw Error("unreachable");
}

Formula cardinality_sentence(int n, bool exact) {
    if (n < 1) throw Error("cardinality_sentence requires n >= 1");
    auto at_least = [](int k) {
        std::vector<std::string> vars;
        for (int i = 1; i <= k; ++i) vars.push_back("x" + std::to_string(i));
        std::vector<Formula> distinct;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                distinct.push_back(Formula::negate(Formula::eq(vars[i], vars[j])));
        Formula body = Formula::conj_all(distinct);
        for (auto it = vars.rbegin(); it != vars.rend(); ++it)
            body = Formula::exists(*it, body);
        return body;
    };
    Formula e_n = at_least(n);
    if (!exact) return e_n;
    return Formula::conj(e_n, Formula::negate(at_least(n + 1)));
}

}  // namespace wb
