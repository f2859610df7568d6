#include "wb/kripke_prop.hpp"

#include <algorithm>

namespace wb {

int PropKripkeModel::node_index(const std::string& name) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i] == name) return static_cast<int>(i);
    throw Error("unknown node '" + name + "'");
}

PropKripkeModel PropKripkeModel::from_cover(
    std::vector<std::string> nodes, const std::vector<std::pair<std::string, std::string>>& cover,
    const std::map<std::string, std::vector<std::string>>& valuation) {
    std::size_t n = nodes.size();
    if (n == 0) throw Error("model needs at least one node");
    {
        auto sorted = nodes;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error("duplicate node name");
    }
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
    auto index = [&](const std::string& name) {
        for (std::size_t i = 0; i < n; ++i)
            if (nodes[i] == name) return static_cast<int>(i);
        throw Error("cover mentions unknown node '" + name + "'");
    };
    for (const auto& [lo, hi] : cover) leq[index(lo)][index(hi)] = true;
    // Warshall closure
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (leq[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (leq[k][j]) leq[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && leq[i][j] && leq[j][i])
                throw Error("order is not antisymmetric: '" + nodes[i] + "' and '" + nodes[j] + "'");

    std::vector<std::set<std::string>> val(n);
    for (const auto& [node, atoms] : valuation) {
        int v = index(node);
        val[v].insert(atoms.begin(), atoms.end());
    }
    return from_order(std::move(nodes), std::move(leq), std::move(val));
}

PropKripkeModel PropKripkeModel::from_order(std::vector<std::string> nodes,
                                            std::vector<std::vector<bool>> leq,
                                            std::vector<std::set<std::string>> valuation) {
    std::size_t n = nodes.size();
    if (valuation.size() < n) valuation.resize(n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w)
            if (leq[v][w])
                for (const auto& p : valuation[v])
                    if (!valuation[w].count(p))
                        throw Error("valuation not monotone: '" + p + "' holds at '" + nodes[v] +
                                    "' but not at '" + nodes[w] + "'");
    PropKripkeModel m;
    m.nodes_ = std::move(nodes);
    m.leq_ = std::move(leq);
    m.valuation_ = std::move(valuation);
    return m;
}

std::vector<int> PropKripkeModel::minimal_nodes() const {
    std::vector<int> out;
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
        bool minimal = true;
        for (std::size_t u = 0; u < nodes_.size(); ++u)
            if (u != v && leq_[u][v]) minimal = false;
        if (minimal) out.push_back(static_cast<int>(v));
    }
    return out;
}

std::vector<std::pair<int, int>> PropKripkeModel::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    std::size_t n = nodes_.size();
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w) {
            if (v == w || !leq_[v][w]) continue;
            bool covering = true;
            for (std::size_t u = 0; u < n; ++u)
                if (u != v && u != w && leq_[v][u] && leq_[u][w]) covering = false;
            if (covering) out.emplace_back(static_cast<int>(v), static_cast<int>(w));
        }
    return out;
}

PropKripkeModel PropKripkeModel::with_valuation(std::vector<std::set<std::string>> valuation) const {
    return from_order(nodes_, leq_, std::move(valuation));
}

bool force_prop(const PropKripkeModel& m, int v, const Formula& f) {
    if (v < 0 || v >= static_cast<int>(m.node_count())) throw Error("unknown node index");
    if (f.lang() != Lang::Prop) throw Error("force_prop requires a propositional formula");
    switch (f.kind()) {
        case Kind::Atom:
            return m.holds_atom(v, f.pred());
        case Kind::Top:
            return true;
        case Kind::Bot:
            return false;
        case Kind::And:
            return force_prop(m, v, f.lhs()) && force_prop(m, v, f.rhs());
        case Kind::Or:
            return force_prop(m, v, f.lhs()) || force_prop(m, v, f.rhs());
        case Kind::Implies:
            for (int w = 0; w < static_cast<int>(m.node_count()); ++w)
                if (m.leq(v, w) && force_prop(m, w, f.lhs()) && !force_prop(m, w, f.rhs()))
                    return false;
            return true;
        case Kind::Not:
            for (int w = 0; w < static_cast<int>(m.node_count()); ++w)
                if (m.leq(v, w) && force_prop(m, w, f.body())) return false;
            return true;
        default:
            throw Error("force_prop: quantifier in propositional formula");
    }
}

PersistenceReport check_persistence(const PropKripkeModel& m, const std::vector<Formula>& fs) {
    PersistenceReport report;
    int n = static_cast<int>(m.node_count());
    for (const auto& f : fs)
        for (int v = 0; v < n; ++v) {
            if (!force_prop(m, v, f)) continue;
            for (int w = 0; w < n; ++w)
                if (m.leq(v, w) && !force_prop(m, w, f))
                    report.violations.push_back({f, v, w});
        }
    return report;
}

namespace {

struct TreeShape {
    std::vector<int> children;  // indices into the shape pool
    int size = 1;
    std::string code;  // canonical parenthesis code
};

// Pool of all rooted tree shapes up to `max_nodes`, built by size; children
// are chosen as a non-decreasing sequence of pool indices so that every
// multiset occurs exactly once.
class TreePool {
public:
    explicit TreePool(int max_nodes) {
        by_size_.resize(max_nodes + 1);
        shapes_.push_back(TreeShape{{}, 1, "()"});
        by_size_[1].push_back(0);
        for (int n = 2; n <= max_nodes; ++n) {
            std::vector<int> chosen;
            build(n - 1, 0, chosen, n);
            std::sort(by_size_[n].begin(), by_size_[n].end(),
                      [&](int a, int b) { return shapes_[a].code < shapes_[b].code; });
        }
    }

    const std::vector<TreeShape>& shapes() const { return shapes_; }
    const std::vector<std::vector<int>>& by_size() const { return by_size_; }

private:
    std::vector<TreeShape> shapes_;
    std::vector<std::vector<int>> by_size_;

    void build(int remaining, int min_index, std::vector<int>& chosen, int total) {
        if (remaining == 0) {
            TreeShape s;
            s.children = chosen;
            s.size = total;
            s.code = "(";
            std::vector<std::string> codes;
            for (int c : chosen) codes.push_back(shapes_[c].code);
            std::sort(codes.begin(), codes.end());
            for (const auto& c : codes) s.code += c;
            s.code += ")";
            shapes_.push_back(std::move(s));
            by_size_[total].push_back(static_cast<int>(shapes_.size()) - 1);
            return;
        }
        for (int i = min_index; i < static_cast<int>(shapes_.size()); ++i) {
            if (shapes_[i].size > remaining) continue;
            chosen.push_back(i);
            build(remaining - shapes_[i].size, i, chosen, total);
            chosen.pop_back();
        }
    }
};

}  // namespace

std::vector<PropKripkeModel> enumerate_finite_trees(int max_nodes) {
    if (max_nodes < 1) throw Error("enumerate_finite_trees requires max_nodes >= 1");
    TreePool pool(max_nodes);
    std::vector<PropKripkeModel> out;
    for (int n = 1; n <= max_nodes; ++n) {
        for (int idx : pool.by_size()[n]) {
            // materialize with a preorder numbering; parent[i] < i
            std::vector<int> parent{-1};
            int next = 1;
            std::vector<std::pair<int, int>> todo{{idx, 0}};
            while (!todo.empty()) {
                auto [s, node] = todo.back();
                todo.pop_back();
                for (int c : pool.shapes()[s].children) {
                    parent.push_back(node);
                    todo.emplace_back(c, next);
                    ++next;
                }
            }
            std::size_t cnt = parent.size();
            std::vector<std::vector<bool>> leq(cnt, std::vector<bool>(cnt, false));
            for (std::size_t v = 0; v < cnt; ++v) {
                int u = static_cast<int>(v);
                while (u != -1) {
                    leq[u][v] = true;
                    u = parent[u];
                }
            }
            std::vector<std::string> names;
            for (std::size_t v = 0; v < cnt; ++v) names.push_back("n" + std::to_string(v));
            out.push_back(PropKripkeModel::from_order(std::move(names), std::move(leq), {}));
        }
    }
    return out;
}

std::vector<unsigned> up_sets(const PropKripkeModel& m) {
    std::size_t n = m.node_count();
    if (n > 16) throw Error("up_sets supports at most 16 nodes");
    std::vector<unsigned> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool closed = true;
        for (std::size_t v = 0; v < n && closed; ++v)
            if (mask & (1u << v))
                for (std::size_t w = 0; w < n; ++w)
                    if (m.leq(static_cast<int>(v), static_cast<int>(w)) && !(mask & (1u << w))) {
                        closed = false;
                        break;
                    }
        if (closed) out.push_back(mask);
    }
    return out;
}

}  // namespace wb
