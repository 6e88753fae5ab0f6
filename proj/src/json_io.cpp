#include "splitword/json_io.hpp"

namespace splitword {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.vertex_count()}, {"edges", edges}, {"names", g.names()}};
}

json word_to_json(const Word& w, const Graph& g) {
    json out = json::array();
    for (int letter : w.letters) out.push_back(g.name(letter));
    return out;
}

json labelling_to_json(const Labelling& lab, const SplitPartition& p, const Graph& g) {
    json out = json::object();
    for (size_t i = 0; i < p.clique.size(); ++i) out[g.name(p.clique[i])] = lab.labels[i];
    return out;
}

json witness_to_json(const Witness& w, const Graph& g) {
    json vertices = json::array();
    for (int v : w.vertices) vertices.push_back(g.name(v));
    json out{{"family", family_name(w.spec.family)}, {"vertices", vertices}};
    if (family_is_parametric(w.spec.family)) out["k"] = w.spec.k;
    return out;
}

json classification_to_json(const Classification& c, const Graph& g) {
    json out;
    out["graph"] = graph_to_json(g);
    out["is_split"] = c.is_split;
    if (c.partition) {
        json clique = json::array(), indep = json::array();
        for (int v : c.partition->clique) clique.push_back(g.name(v));
        for (int v : c.partition->independent) indep.push_back(g.name(v));
        out["partition"] = {{"clique", clique}, {"independent", indep}};
    } else {
        out["partition"] = nullptr;
    }
    out["word_representable"] =
        c.word_representable ? json(*c.word_representable) : json(nullptr);
    out["labelling"] =
        c.labelling ? labelling_to_json(*c.labelling, *c.partition, g) : json(nullptr);
    out["rep_number"] = c.rep_number ? json(*c.rep_number) : json(nullptr);
    out["witness"] = c.witness ? witness_to_json(*c.witness, g) : json(nullptr);
    out["non_wr_witness"] =
        c.non_wr_witness ? witness_to_json(*c.non_wr_witness, g) : json(nullptr);
    out["comparability"] = c.comparability ? json(*c.comparability) : json(nullptr);
    out["permutation_graph"] =
        c.permutation_graph ? json(*c.permutation_graph) : json(nullptr);
    out["word"] = c.word ? word_to_json(*c.word, g) : json(nullptr);
    out["perm_word"] = c.perm_word ? word_to_json(*c.perm_word, g) : json(nullptr);
    return out;
}

json trace_to_json(const ConstructionTrace& t, const Graph& g) {
    json a_side = json::object(), b_side = json::object();
    for (const auto& e : t.ab.a_side) a_side[g.name(e.vertex)] = {e.m, e.n};
    for (const auto& e : t.ab.b_side) b_side[g.name(e.vertex)] = {e.l, e.r};
    json isolated = json::array();
    for (int v : t.ab.isolated) isolated.push_back(g.name(v));
    return json{{"p1", word_to_json(t.p1, g)},
                {"p2", word_to_json(t.p2, g)},
                {"p3", word_to_json(t.p3, g)},
                {"d", t.d},
                {"A", a_side},
                {"B", b_side},
                {"isolated", isolated},
                {"word", word_to_json(t.w, g)}};
}

json verify_report_to_json(const VerifyReport& r, const Graph& g) {
    json violations = json::array();
    for (const auto& pc : r.pairs) {
        if (pc.edge == pc.alternating) continue;
        violations.push_back({{"u", g.name(pc.u)},
                              {"v", g.name(pc.v)},
                              {"edge", pc.edge},
                              {"alternating", pc.alternating},
                              {"pattern", word_to_json(pc.pattern, g)}});
    }
    return json{{"represents", r.ok}, {"violations", violations}};
}

}  // namespace splitword
