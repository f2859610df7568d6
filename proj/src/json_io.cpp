#include "wb/json_io.hpp"

#include <fstream>

#include "wb/syntax.hpp"

namespace wb {

Json prop_model_to_json(const PropKripkeModel& m) {
    Json j;
    j["nodes"] = Json::array();
    for (std::size_t v = 0; v < m.node_count(); ++v) j["nodes"].push_back(m.node_name(v));
    j["cover"] = Json::array();
    for (auto [lo, hi] : m.cover_pairs())
        j["cover"].push_back(Json::array({m.node_name(lo), m.node_name(hi)}));
    j["valuation"] = Json::object();
    for (std::size_t v = 0; v < m.node_count(); ++v)
        if (!m.atoms_at(v).empty())
            j["valuation"][m.node_name(v)] = m.atoms_at(v);
    return j;
}

PropKripkeModel prop_model_from_json(const Json& j) {
    std::vector<std::string> nodes = j.at("nodes").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> cover;
    if (j.contains("cover"))
        for (const auto& pair : j.at("cover"))
            cover.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
    std::map<std::string, std::vector<std::string>> valuation;
    if (j.contains("valuation"))
        for (auto it = j.at("valuation").begin(); it != j.at("valuation").end(); ++it)
            valuation[it.key()] = it.value().get<std::vector<std::string>>();
    return PropKripkeModel::from_cover(std::move(nodes), cover, valuation);
}

Json set_model_to_json(const SetKripkeModel& m) {
    Json j;
    j["nodes"] = m.nodes;
    j["cover"] = Json::array();
    int n = m.node_count();
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) {
            if (v == w || !m.leq[v][w]) continue;
            bool covering = true;
            for (int u = 0; u < n && covering; ++u)
                if (u != v && u != w && m.leq[v][u] && m.leq[u][w]) covering = false;
            if (covering) j["cover"].push_back(Json::array({m.nodes[v], m.nodes[w]}));
        }
    j["domains"] = Json::object();
    for (int v = 0; v < n; ++v) j["domains"][m.nodes[v]] = m.dom[v];
    j["transitions"] = Json::object();
    for (const auto& [vw, f] : m.trans) {
        auto [v, w] = vw;
        Json map = Json::object();
        for (int e = 0; e < static_cast<int>(f.size()); ++e)
            map[m.dom[v][e]] = m.dom[w][f[e]];
        j["transitions"][m.nodes[v] + "->" + m.nodes[w]] = std::move(map);
    }
    j["membership"] = Json::object();
    for (int v = 0; v < n; ++v) {
        Json pairs = Json::array();
        for (const auto& [a, b] : m.mem[v])
            pairs.push_back(Json::array({m.dom[v][a], m.dom[v][b]}));
        j["membership"][m.nodes[v]] = std::move(pairs);
    }
    return j;
}

SetKripkeModel set_model_from_json(const Json& j) {
    SetKripkeModel m;
    m.nodes = j.at("nodes").get<std::vector<std::string>>();
    int n = m.node_count();
    m.leq.assign(n, std::vector<bool>(n, false));
    for (int v = 0; v < n; ++v) m.leq[v][v] = true;
    if (j.contains("cover"))
        for (const auto& pair : j.at("cover"))
            m.leq[m.node_index(pair.at(0).get<std::string>())]
                 [m.node_index(pair.at(1).get<std::string>())] = true;
    for (int k = 0; k < n; ++k)
        for (int v = 0; v < n; ++v)
            if (m.leq[v][k])
                for (int w = 0; w < n; ++w)
                    if (m.leq[k][w]) m.leq[v][w] = true;

    m.dom.resize(n);
    for (int v = 0; v < n; ++v) {
        const std::string& name = m.nodes[v];
        if (!j.at("domains").contains(name)) throw Error("domains misses node '" + name + "'");
        m.dom[v] = j.at("domains").at(name).get<std::vector<std::string>>();
    }
    auto elem_index = [&](int v, const std::string& e) {
        for (int i = 0; i < m.domain_size(v); ++i)
            if (m.dom[v][i] == e) return i;
        throw Error("unknown element '" + e + "' at node '" + m.nodes[v] + "'");
    };
    m.mem.resize(n);
    if (j.contains("membership"))
        for (int v = 0; v < n; ++v)
            if (j.at("membership").contains(m.nodes[v]))
                for (const auto& pair : j.at("membership").at(m.nodes[v]))
                    m.mem[v].insert({elem_index(v, pair.at(0).get<std::string>()),
                                     elem_index(v, pair.at(1).get<std::string>())});
    if (j.contains("transitions"))
        for (auto it = j.at("transitions").begin(); it != j.at("transitions").end(); ++it) {
            const std::string& key = it.key();
            auto arrow = key.find("->");
            if (arrow == std::string::npos) throw Error("bad transition key '" + key + "'");
            int v = m.node_index(key.substr(0, arrow));
            int w = m.node_index(key.substr(arrow + 2));
            std::vector<int> f(m.domain_size(v), -1);
            for (auto e = it.value().begin(); e != it.value().end(); ++e)
                f[elem_index(v, e.key())] = elem_index(w, e.value().get<std::string>());
            for (int i = 0; i < m.domain_size(v); ++i)
                if (f[i] < 0) throw Error("transition '" + key + "' misses element '" + m.dom[v][i] + "'");
            m.trans[{v, w}] = std::move(f);
        }
    m.complete_transitions();
    return m;
}

Json extension_to_json(const RootExtension& ext) {
    Json j = set_model_to_json(ext.model());
    Json elems = Json::array();
    const auto& dom_r = ext.model().dom[ext.root()];
    for (int i = 0; i < ext.element_count(); ++i) {
        const RootElement& x = ext.elements()[i];
        Json e;
        e["id"] = dom_r[i];
        e["rank"] = x.rank;
        Json members = Json::array();
        for (int y : x.root_members) members.push_back(dom_r[y]);
        e["root_members"] = std::move(members);
        Json upper = Json::object();
        for (int v = 0; v < ext.base().node_count(); ++v)
            upper[ext.base().nodes[v]] = ext.base().dom[v][x.upper[v]];
        e["upper"] = std::move(upper);
        elems.push_back(std::move(e));
    }
    j["root"] = ext.model().nodes[ext.root()];
    j["root_elements"] = std::move(elems);
    return j;
}

Json rule_to_json(const Rule& r) {
    Json j;
    j["premises"] = Json::array();
    for (const auto& f : r.premises) j["premises"].push_back(render_formula(f));
    j["conclusions"] = Json::array();
    for (const auto& f : r.conclusions) j["conclusions"].push_back(render_formula(f));
    return j;
}

Rule rule_from_json(const Json& j, Lang lang) {
    std::vector<Formula> prem, concl;
    for (const auto& s : j.at("premises")) prem.push_back(parse_formula(s.get<std::string>(), lang));
    for (const auto& s : j.at("conclusions"))
        concl.push_back(parse_formula(s.get<std::string>(), lang));
    return Rule::make(std::move(prem), std::move(concl));
}

Json tree_to_json(const SplittingTree& t) {
    Json j;
    j["nodes"] = t.nodes;
    j["cover"] = Json::array();
    for (int v = 1; v < t.node_count(); ++v)
        j["cover"].push_back(Json::array({t.nodes[t.parent[v]], t.nodes[v]}));
    j["valuation"] = Json::object();
    for (const auto& [atom, set] : t.valuation) {
        Json nodes = Json::array();
        for (int v : set) nodes.push_back(t.nodes[v]);
        j["valuation"][atom] = std::move(nodes);
    }
    j["leaves"] = Json::object();
    for (const auto& [leaf, model] : t.leaf_models)
        j["leaves"][t.nodes[leaf]] = Json{{"size", model.size()}};
    return j;
}

SplittingTree tree_from_json(const Json& j) {
    SplittingTree t;
    t.nodes = j.at("nodes").get<std::vector<std::string>>();
    int n = t.node_count();
    auto index = [&](const std::string& name) {
        for (int v = 0; v < n; ++v)
            if (t.nodes[v] == name) return v;
        throw Error("unknown tree node '" + name + "'");
    };
    t.parent.assign(n, -1);
    if (j.contains("cover"))
        for (const auto& pair : j.at("cover")) {
            int lo = index(pair.at(0).get<std::string>());
            int hi = index(pair.at(1).get<std::string>());
            if (t.parent[hi] != -1) throw Error("tree node '" + t.nodes[hi] + "' has two parents");
            t.parent[hi] = lo;
        }
    for (int v = 1; v < n; ++v)
        if (t.parent[v] == -1) throw Error("tree is not connected at '" + t.nodes[v] + "'");
    if (j.contains("valuation"))
        for (auto it = j.at("valuation").begin(); it != j.at("valuation").end(); ++it)
            for (const auto& node : it.value())
                t.valuation[it.key()].insert(index(node.get<std::string>()));
    if (j.contains("leaves"))
        for (auto it = j.at("leaves").begin(); it != j.at("leaves").end(); ++it) {
            int leaf = index(it.key());
            const Json& spec = it.value();
            if (spec.contains("vrank"))
                t.leaf_models.emplace(leaf, vrank_model(spec.at("vrank").get<int>()));
            else if (spec.contains("ordinal"))
                t.leaf_models.emplace(leaf, ordinal_model(spec.at("ordinal").get<int>()));
            else
                throw Error("leaf '" + it.key() + "' needs \"vrank\" or \"ordinal\"");
        }
    t.validate();
    return t;
}

Json ipc_verdict_to_json(const IpcVerdict& v) {
    Json j;
    j["verdict"] = v.valid ? "valid" : "countermodel";
    if (!v.valid && v.countermodel) {
        j["model"] = prop_model_to_json(v.countermodel->model);
        j["root"] = v.countermodel->model.node_name(v.countermodel->root);
    }
    return j;
}

Json cpc_verdict_to_json(const CpcVerdict& v) {
    Json j;
    j["verdict"] = v.valid ? "valid" : "falsifiable";
    if (!v.valid) j["assignment"] = v.falsifying;
    return j;
}

Json admissibility_to_json(const AdmissibilityVerdict& v) {
    Json j;
    switch (v.status) {
        case Admissibility::Admissible:
            j["verdict"] = "admissible";
            break;
        case Admissibility::NotAdmissible:
            j["verdict"] = "not_admissible";
            break;
        case Admissibility::Unknown:
            j["verdict"] = "unknown";
            break;
    }
    j["passive"] = v.passive;
    if (!v.note.empty()) j["note"] = v.note;
    if (!v.trace.empty()) {
        Json steps = Json::array();
        for (const auto& s : v.trace) {
            Json step;
            step["n"] = s.n;
            step["matched_premise"] = render_formula(s.matched_premise);
            step["conclusion"] = render_formula(s.conclusion);
            Json a = Json::array(), b = Json::array();
            for (const auto& f : s.a) a.push_back(render_formula(f));
            for (const auto& f : s.b) b.push_back(render_formula(f));
            step["a"] = std::move(a);
            step["b"] = std::move(b);
            if (s.c) step["c"] = render_formula(*s.c);
            steps.push_back(std::move(step));
        }
        j["trace"] = std::move(steps);
    }
    if (v.witness) {
        Json w = Json::object();
        for (const auto& [sym, entry] : v.witness->entries())
            w[sym] = render_formula(entry.body);
        j["witness"] = std::move(w);
    }
    if (v.refuting_structure) j["refuting_structure"] = v.refuting_structure->describe();
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

}  // namespace wb
