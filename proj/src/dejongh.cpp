// The finite-splitting-tree translation.
//
// Leaf models with pairwise distinct sizes play the role of the jointly
// inconsistent sentences phi^s: the exact cardinality sentence of each leaf
// holds in that leaf and fails in every other. gamma_v = ~~(\/ phi_l over
// leaves above v) is then forced exactly at the nodes >= v, and tau(p) is
// the disjunction of gamma_v over v in V(p).

#include "wb/dejongh.hpp"

#include <algorithm>

#include "wb/prover.hpp"
#include "wb/syntax.hpp"

namespace wb {

bool SplittingTree::is_leaf(int v) const { return children(v).empty(); }

std::vector<int> SplittingTree::children(int v) const {
    std::vector<int> out;
    for (int w = 0; w < node_count(); ++w)
        if (parent[w] == v) out.push_back(w);
    return out;
}

bool SplittingTree::descends(int v, int w) const {
    int u = w;
    while (u != -1) {
        if (u == v) return true;
        u = parent[u];
    }
    return false;
}

void SplittingTree::validate() const {
    if (node_count() == 0) throw Error("splitting tree is empty");
    if (parent.size() != nodes.size()) throw Error("splitting tree: parent array size mismatch");
    if (parent[0] != -1) throw Error("splitting tree: node 0 must be the root");
    for (int v = 1; v < node_count(); ++v)
        if (parent[v] < 0 || parent[v] >= node_count() || !descends(0, v))
            throw Error("splitting tree: node '" + nodes[v] + "' is not attached to the root");
    for (int v = 0; v < node_count(); ++v) {
        auto cs = children(v);
        if (cs.size() == 1)
            throw Error("splitting tree: node '" + nodes[v] + "' has exactly one immediate successor");
    }
    for (const auto& [atom, set] : valuation)
        for (int v : set) {
            if (v < 0 || v >= node_count()) throw Error("valuation references unknown node");
            for (int w = 0; w < node_count(); ++w)
                if (descends(v, w) && !set.count(w))
                    throw Error("valuation of '" + atom + "' is not an up-set");
        }
    std::set<int> sizes;
    for (int v = 0; v < node_count(); ++v) {
        if (is_leaf(v)) {
            auto it = leaf_models.find(v);
            if (it == leaf_models.end())
                throw Error("leaf '" + nodes[v] + "' has no classical model");
            if (it->second.size() == 0) throw Error("leaf models must be nonempty");
            if (!sizes.insert(it->second.size()).second)
                throw Error("leaf models must have pairwise distinct sizes");
        } else if (leaf_models.count(v)) {
            throw Error("internal node '" + nodes[v] + "' carries a leaf model");
        }
    }
}

PropKripkeModel SplittingTree::as_prop_model() const {
    int n = node_count();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (descends(v, w)) leq[v][w] = true;
    std::vector<std::set<std::string>> val(n);
    for (const auto& [atom, set] : valuation)
        for (int v : set) val[v].insert(atom);
    return PropKripkeModel::from_order(nodes, std::move(leq), std::move(val));
}

std::map<int, std::set<int>> leaf_sets(const SplittingTree& t) {
    t.validate();
    std::map<int, std::set<int>> out;
    for (int v = 0; v < t.node_count(); ++v) {
        std::set<int> set;
        for (int l = 0; l < t.node_count(); ++l)
            if (t.is_leaf(l) && t.descends(v, l)) set.insert(l);
        out[v] = std::move(set);
    }
    for (int v = 0; v < t.node_count(); ++v)
        for (int w = v + 1; w < t.node_count(); ++w)
            if (out[v] == out[w])
                throw Error("leaf sets are not injective");  // unreachable on valid trees
    return out;
}

std::map<int, Formula> distinguishing_sentences(const SplittingTree& t) {
    t.validate();
    std::map<int, Formula> out;
    for (const auto& [leaf, model] : t.leaf_models)
        out.emplace(leaf, cardinality_sentence(model.size(), true));
    for (const auto& [l, model_l] : t.leaf_models)
        for (const auto& [k, phi_k] : out) {
            bool holds = eval_classical(model_l, phi_k);
            if (holds != (l == k))
                throw Error("distinguishing matrix failure between leaves '" + t.nodes[l] +
                            "' and '" + t.nodes[k] + "'");
        }
    return out;
}

Formula gamma(const SplittingTree& t, const std::map<int, Formula>& phis, int v) {
    if (v < 0 || v >= t.node_count()) throw Error("gamma: unknown node");
    std::vector<Formula> disjuncts;
    for (int l = 0; l < t.node_count(); ++l)
        if (t.is_leaf(l) && t.descends(v, l)) disjuncts.push_back(phis.at(l));
    return Formula::negate(Formula::negate(Formula::disj_all(disjuncts)));
}

Assignment tau(const SplittingTree& t, const std::map<int, Formula>& phis) {
    Assignment out;
    for (const auto& [atom, set] : t.valuation) {
        std::vector<Formula> gammas;
        for (int v = 0; v < t.node_count(); ++v)
            if (set.count(v)) gammas.push_back(gamma(t, phis, v));
        out.set(atom, 0, Formula::disj_all(gammas));
    }
    return out;
}

namespace {

SetKripkeModel build_subtree(const SplittingTree& t, int v, const RootExtensionConfig& cfg) {
    if (t.is_leaf(v)) return SetKripkeModel::one_node(t.leaf_models.at(v), t.nodes[v]);
    std::vector<SetKripkeModel> parts;
    for (int c : t.children(v)) parts.push_back(build_subtree(t, c, cfg));
    return extend(disjoint_union(parts), cfg, t.nodes[v]).model();
}

}  // namespace

SetKripkeModel build_tree_model(const SplittingTree& t, const RootExtensionConfig& cfg) {
    t.validate();
    SetKripkeModel m = build_subtree(t, 0, cfg);
    if (m.node_count() != t.node_count()) throw Error("built model frame differs from the tree");
    return m;
}

TranslationReport verify_translation(const SetKripkeModel& m, const SplittingTree& t,
                                     const Assignment& tr, const std::optional<Formula>& A) {
    TranslationReport report;
    PropKripkeModel prop = t.as_prop_model();
    for (const auto& [atom, entry] : tr.entries()) {
        for (int v = 0; v < t.node_count(); ++v) {
            int mv = m.node_index(t.nodes[v]);
            bool forced = force_set(m, mv, entry.body);
            bool expected = t.valuation.count(atom) && t.valuation.at(atom).count(v);
            report.matrix[t.nodes[v]][atom] = forced;
            if (forced != expected)
                report.failures.push_back("tau(" + atom + ") at '" + t.nodes[v] + "': forced=" +
                                          (forced ? "yes" : "no") + ", valuation=" +
                                          (expected ? "yes" : "no"));
        }
    }
    if (A) {
        if (A->lang() != Lang::Prop) throw Error("verify_translation: A must be propositional");
        Formula translated = apply_assignment(tr, *A);
        for (int v = 0; v < t.node_count(); ++v) {
            int mv = m.node_index(t.nodes[v]);
            bool set_side = force_set(m, mv, translated);
            bool prop_side = force_prop(prop, v, *A);
            if (set_side != prop_side)
                report.failures.push_back("A^tau at '" + t.nodes[v] + "': set model says " +
                                          (set_side ? "forced" : "not forced") +
                                          ", propositional model says " +
                                          (prop_side ? "forced" : "not forced"));
        }
    }
    return report;
}

namespace {

// Rooted tree with valuation, used while repairing countermodels into
// splitting shape.
struct RawTree {
    std::vector<int> parent;
    std::vector<std::set<std::string>> val;

    std::vector<int> children(int v) const {
        std::vector<int> out;
        for (std::size_t w = 0; w < parent.size(); ++w)
            if (parent[w] == v) out.push_back(static_cast<int>(w));
        return out;
    }

    int copy_subtree(int src, int new_parent) {
        int idx = static_cast<int>(parent.size());
        parent.push_back(new_parent);
        val.push_back(val[src]);
        for (int c : children(src))
            if (c != idx) copy_subtree(c, idx);
        return idx;
    }
};

RawTree from_countermodel(const PropKripkeModel& m, int root) {
    int n = static_cast<int>(m.node_count());
    RawTree t;
    t.parent.assign(n, -1);
    t.val.resize(n);
    for (int v = 0; v < n; ++v) {
        t.val[v] = m.atoms_at(v);
        // parent = the maximal strict lower bound (tree order)
        int best = -1;
        for (int u = 0; u < n; ++u) {
            if (u == v || !m.leq(u, v)) continue;
            if (best == -1 || m.leq(best, u)) best = u;
        }
        t.parent[v] = best;
    }
    if (t.parent[root] != -1) throw Error("countermodel is not rooted at the expected node");
    return t;
}

}  // namespace

DejonghCertificate dejongh_certificate(const SplittingTree& t, const std::optional<Formula>& A,
                                       const RootExtensionConfig& cfg) {
    DejonghCertificate cert;
    cert.tree = t;
    cert.tree.validate();
    if (A && force_prop(cert.tree.as_prop_model(), 0, *A))
        throw Error("the tree's valuation does not refute A at the root");
    auto phis = distinguishing_sentences(cert.tree);
    cert.translation = tau(cert.tree, phis);
    cert.model = build_tree_model(cert.tree, cfg);
    cert.report = verify_translation(cert.model, cert.tree, cert.translation, A);
    if (A) {
        Formula translated = apply_assignment(cert.translation, *A);
        cert.root_refutes = !force_set(cert.model, cert.model.node_index(cert.tree.nodes[0]),
                                       translated);
    } else {
        cert.root_refutes = true;
    }
    return cert;
}

DejonghCertificate dejongh_counterexample(const Formula& A, const RootExtensionConfig& cfg) {
    if (A.lang() != Lang::Prop) throw Error("dejongh_counterexample requires a propositional formula");
    IpcVerdict verdict = decide_ipc(A);
    if (verdict.valid) throw Error("no countermodel exists: the formula is an IPC theorem");

    RawTree raw = from_countermodel(verdict.countermodel->model, verdict.countermodel->root);
    // repair single-child nodes by duplicating the child subtree
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < raw.parent.size(); ++v) {
            auto cs = raw.children(static_cast<int>(v));
            if (cs.size() == 1) {
                raw.copy_subtree(cs[0], static_cast<int>(v));
                changed = true;
                break;
            }
        }
    }

    SplittingTree tree;
    for (std::size_t v = 0; v < raw.parent.size(); ++v) {
        tree.nodes.push_back("t" + std::to_string(v));
        tree.parent.push_back(raw.parent[v]);
    }
    for (std::size_t v = 0; v < raw.parent.size(); ++v)
        for (const auto& atom : raw.val[v]) tree.valuation[atom].insert(static_cast<int>(v));
    int next_size = 1;
    for (int v = 0; v < tree.node_count(); ++v)
        if (tree.children(v).empty()) tree.leaf_models.emplace(v, ordinal_model(next_size++));
    tree.validate();

    // the repaired tree must still refute A at the root
    if (force_prop(tree.as_prop_model(), 0, A))
        throw Error("internal: branch duplication changed the root theory");
    return dejongh_certificate(tree, A, cfg);
}

}  // namespace wb
