#include "wb/generators.hpp"

#include <algorithm>

#include "wb/root_extension.hpp"
#include "wb/set_model.hpp"
#include "wb/syntax.hpp"

namespace wb {

namespace {

int pick(Rng& rng, int lo, int hi) {  // inclusive bounds
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

Formula random_prop_formula(Rng& rng, const std::vector<std::string>& atoms, int size,
                            bool allow_constants) {
    if (size <= 1) {
        int leaves = static_cast<int>(atoms.size()) + (allow_constants ? 2 : 0);
        int c = pick(rng, 0, leaves - 1);
        if (c < static_cast<int>(atoms.size())) return Formula::atom(atoms[c]);
        return c == static_cast<int>(atoms.size()) ? Formula::top() : Formula::bot();
    }
    int op = pick(rng, 0, 3);
    if (op == 0 || size < 3)
        return Formula::negate(random_prop_formula(rng, atoms, size - 1, allow_constants));
    int left = pick(rng, 1, size - 2);
    Formula a = random_prop_formula(rng, atoms, left, allow_constants);
    Formula b = random_prop_formula(rng, atoms, size - 1 - left, allow_constants);
    switch (op) {
        case 1:
            return Formula::conj(std::move(a), std::move(b));
        case 2:
            return Formula::disj(std::move(a), std::move(b));
        default:
            return Formula::implies(std::move(a), std::move(b));
    }
}

namespace {

Formula random_set_rec(Rng& rng, int size, std::vector<std::string>& scope, int& next_var) {
    if (scope.size() < 2 || size <= 2) {
        // need enough bound variables for an atom; otherwise quantify
        if (scope.size() >= 2 && size <= 2) {
            const std::string& a = scope[pick(rng, 0, static_cast<int>(scope.size()) - 1)];
            const std::string& b = scope[pick(rng, 0, static_cast<int>(scope.size()) - 1)];
            return pick(rng, 0, 1) ? Formula::in(a, b) : Formula::eq(a, b);
        }
        if (size <= 1) return pick(rng, 0, 1) ? Formula::top() : Formula::bot();
        std::string var = "q" + std::to_string(next_var++);
        scope.push_back(var);
        Formula body = random_set_rec(rng, size - 1, scope, next_var);
        scope.pop_back();
        return pick(rng, 0, 1) ? Formula::forall(var, std::move(body))
                               : Formula::exists(var, std::move(body));
    }
    switch (pick(rng, 0, 5)) {
        case 0: {
            std::string var = "q" + std::to_string(next_var++);
            scope.push_back(var);
            Formula body = random_set_rec(rng, size - 1, scope, next_var);
            scope.pop_back();
            return Formula::forall(var, std::move(body));
        }
        case 1: {
            std::string var = "q" + std::to_string(next_var++);
            scope.push_back(var);
            Formula body = random_set_rec(rng, size - 1, scope, next_var);
            scope.pop_back();
            return Formula::exists(var, std::move(body));
        }
        case 2:
            return Formula::negate(random_set_rec(rng, size - 1, scope, next_var));
        default: {
            int left = pick(rng, 1, std::max(1, size - 2));
            Formula a = random_set_rec(rng, left, scope, next_var);
            Formula b = random_set_rec(rng, size - 1 - left, scope, next_var);
            int op = pick(rng, 0, 2);
            if (op == 0) return Formula::conj(std::move(a), std::move(b));
            if (op == 1) return Formula::disj(std::move(a), std::move(b));
            return Formula::implies(std::move(a), std::move(b));
        }
    }
}

}  // namespace

Formula random_set_sentence(Rng& rng, int size) {
    std::vector<std::string> scope;
    int next_var = 0;
    return random_set_rec(rng, std::max(size, 3), scope, next_var);
}

PropKripkeModel random_prop_model(Rng& rng, int max_nodes,
                                  const std::vector<std::string>& atoms) {
    int n = pick(rng, 1, max_nodes);
    std::vector<int> parent(n, -1);
    for (int v = 1; v < n; ++v) parent[v] = pick(rng, 0, v - 1);
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int v = 0; v < n; ++v)
        for (int u = v; u != -1; u = parent[u]) leq[u][v] = true;
    std::vector<std::set<std::string>> val(n);
    for (const auto& atom : atoms)
        for (int v = 0; v < n; ++v) {
            if (val[v].count(atom)) continue;
            if (pick(rng, 0, 2) == 0)
                for (int w = 0; w < n; ++w)
                    if (leq[v][w]) val[w].insert(atom);
        }
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back("n" + std::to_string(v));
    return PropKripkeModel::from_order(std::move(names), std::move(leq), std::move(val));
}

SetKripkeModel random_set_model(Rng& rng, int max_nodes, int max_domain) {
    int n = pick(rng, 1, max_nodes);
    std::vector<int> parent(n, -1);
    for (int v = 1; v < n; ++v) parent[v] = pick(rng, 0, v - 1);

    SetKripkeModel m;
    for (int v = 0; v < n; ++v) m.nodes.push_back("n" + std::to_string(v));
    m.leq.assign(n, std::vector<bool>(n, false));
    for (int v = 0; v < n; ++v)
        for (int u = v; u != -1; u = parent[u]) m.leq[u][v] = true;
    m.dom.resize(n);
    m.mem.resize(n);
    for (int v = 0; v < n; ++v) {
        int size = pick(rng, 1, max_domain);
        for (int e = 0; e < size; ++e) m.dom[v].push_back("e" + std::to_string(e));
    }
    // root memberships at minimal nodes; children inherit via the transition
    // image plus random additions
    for (int v = 0; v < n; ++v) {
        if (parent[v] == -1) {
            int size = m.domain_size(v);
            for (int a = 0; a < size; ++a)
                for (int b = 0; b < size; ++b)
                    if (pick(rng, 0, 3) == 0) m.mem[v].insert({a, b});
        }
    }
    for (int v = 1; v < n; ++v) {
        int p = parent[v];
        std::vector<int> f;
        for (int e = 0; e < m.domain_size(p); ++e) f.push_back(pick(rng, 0, m.domain_size(v) - 1));
        for (const auto& [a, b] : m.mem[p]) m.mem[v].insert({f[a], f[b]});
        int size = m.domain_size(v);
        for (int a = 0; a < size; ++a)
            for (int b = 0; b < size; ++b)
                if (pick(rng, 0, 4) == 0) m.mem[v].insert({a, b});
        m.trans[{p, v}] = std::move(f);
    }
    // push memberships upward to restore persistence after random additions
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 1; v < n; ++v) {
            int p = parent[v];
            const auto& f = m.trans.at({p, v});
            for (const auto& [a, b] : m.mem[p])
                if (m.mem[v].insert({f[a], f[b]}).second) changed = true;
        }
    }
    m.complete_transitions();
    return m;
}

Rule random_rule(Rng& rng, const std::vector<std::string>& atoms, int formula_size,
                 int max_premises, int max_conclusions) {
    std::vector<Formula> prem, concl;
    int np = pick(rng, 1, max_premises);
    int nc = pick(rng, 1, max_conclusions);
    for (int i = 0; i < np; ++i)
        prem.push_back(random_prop_formula(rng, atoms, pick(rng, 1, formula_size)));
    for (int i = 0; i < nc; ++i)
        concl.push_back(random_prop_formula(rng, atoms, pick(rng, 1, formula_size)));
    return Rule::make(std::move(prem), std::move(concl));
}

PropertySuiteResult persistence_suite_prop(std::uint64_t seed, int cases) {
    Rng rng(seed);
    PropertySuiteResult result;
    std::vector<std::string> atoms{"p", "q", "r"};
    for (int i = 0; i < cases; ++i) {
        PropKripkeModel m = random_prop_model(rng, 5, atoms);
        std::vector<Formula> fs;
        for (int k = 0; k < 3; ++k) fs.push_back(random_prop_formula(rng, atoms, pick(rng, 1, 9)));
        auto report = check_persistence(m, fs);
        ++result.cases;
        for (const auto& v : report.violations)
            result.violations.push_back("case " + std::to_string(i) + ": persistence of '" +
                                        render_formula(v.formula) + "' fails " +
                                        m.node_name(v.v) + " -> " + m.node_name(v.w));
    }
    return result;
}

PropertySuiteResult persistence_suite_set(std::uint64_t seed, int cases) {
    Rng rng(seed);
    PropertySuiteResult result;
    for (int i = 0; i < cases; ++i) {
        SetKripkeModel m = random_set_model(rng, 4, 3);
        Formula f = random_set_sentence(rng, pick(rng, 3, 9));
        ++result.cases;
        for (int v = 0; v < m.node_count(); ++v) {
            if (!force_set(m, v, f)) continue;
            for (int w = 0; w < m.node_count(); ++w)
                if (v != w && m.leq[v][w] && !force_set(m, w, f))
                    result.violations.push_back("case " + std::to_string(i) + ": '" +
                                                render_formula(f) + "' forced at " + m.nodes[v] +
                                                " but not at " + m.nodes[w]);
        }
    }
    return result;
}

PropertySuiteResult coherence_suite(std::uint64_t seed, int cases) {
    Rng rng(seed);
    PropertySuiteResult result;
    for (int i = 0; i < cases; ++i) {
        ++result.cases;
        SetKripkeModel a = random_set_model(rng, 3, 3);
        SetKripkeModel b = random_set_model(rng, 3, 3);
        auto ra = check_coherence(a);
        auto rb = check_coherence(b);
        for (const auto& v : ra.violations)
            result.violations.push_back("case " + std::to_string(i) + " (a): " + v);
        for (const auto& v : rb.violations)
            result.violations.push_back("case " + std::to_string(i) + " (b): " + v);
        if (!ra.ok() || !rb.ok()) continue;

        SetKripkeModel u = disjoint_union({a, b});
        auto ru = check_coherence(u);
        for (const auto& v : ru.violations)
            result.violations.push_back("case " + std::to_string(i) + " (union): " + v);
        Formula f = random_set_sentence(rng, pick(rng, 3, 8));
        auto mins_a = a.minimal_nodes();
        for (int v : mins_a) {
            bool inner = force_set(a, v, f);
            bool outer = force_set(u, v, f);  // component a keeps its node indices
            if (inner != outer)
                result.violations.push_back("case " + std::to_string(i) +
                                            ": disjoint union changes forcing of '" +
                                            render_formula(f) + "'");
        }
    }
    return result;
}

}  // namespace wb
