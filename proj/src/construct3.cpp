#include "splitword/construct3.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitword {

namespace {

void insert_after(std::vector<int>& word, int anchor, int letter) {
    auto it = std::find(word.begin(), word.end(), anchor);
    word.insert(it + 1, letter);
}

void insert_before(std::vector<int>& word, int anchor, int letter) {
    auto it = std::find(word.begin(), word.end(), anchor);
    word.insert(it, letter);
}

}  // namespace

ConstructionTrace build_three_uniform_word(const Graph& g, const SplitPartition& p,
                                           const Labelling& lab) {
    auto check = check_wr_conditions(g, p, lab);
    if (!check.ok)
        throw std::invalid_argument("construction needs a labelling satisfying the "
                                    "word-representability conditions: " +
                                    check.violation->message);

    ConstructionTrace t;
    t.labelling = lab;
    t.ab = ab_partition(g, p, lab);

    const int k = static_cast<int>(p.clique.size());
    std::vector<int> vertex_of_label(k + 1, -1);
    for (int i = 0; i < k; ++i) vertex_of_label[lab.labels[i]] = p.clique[i];

    std::vector<int> p1, p2, p3;
    for (int label = 1; label <= k; ++label) {
        p1.push_back(vertex_of_label[label]);
        p2.push_back(vertex_of_label[label]);
        p3.push_back(vertex_of_label[label]);
    }

    auto co_entry = [&](int vertex) -> const ABPartition::CoEntry* {
        for (const auto& e : t.ab.a_side)
            if (e.vertex == vertex) return &e;
        return nullptr;
    };
    auto interval_entry = [&](int vertex) -> const ABPartition::IntervalEntry* {
        for (const auto& e : t.ab.b_side)
            if (e.vertex == vertex) return &e;
        return nullptr;
    };

    int d = 1;
    for (int a : p.independent) {
        if (const auto* e = co_entry(a)) {
            if (e->m > d) d = e->m;
            insert_after(p1, vertex_of_label[e->m], a);
            insert_before(p2, vertex_of_label[e->n], a);
        } else if (const auto* e = interval_entry(a)) {
            insert_before(p1, vertex_of_label[e->l], a);
            insert_after(p2, vertex_of_label[e->r], a);
        }
        // isolated vertices are padded in at the end
    }
    t.d = d;

    std::vector<int> a_letters, b_letters;
    for (const auto& e : t.ab.a_side) a_letters.push_back(e.vertex);
    for (const auto& e : t.ab.b_side) b_letters.push_back(e.vertex);

    if (!a_letters.empty()) {
        Word block = reversed(restrict_to(Word(p1), a_letters));
        auto it = std::find(p3.begin(), p3.end(), vertex_of_label[d]);
        p3.insert(it + 1, block.letters.begin(), block.letters.end());
    }

    std::vector<int> w;
    std::vector<int> b_rev = reversed(restrict_to(Word(p1), b_letters)).letters;
    for (int v : t.ab.isolated) {
        w.push_back(v);
        w.push_back(v);
    }
    w.insert(w.end(), p1.begin(), p1.end());
    w.insert(w.end(), b_rev.begin(), b_rev.end());
    w.insert(w.end(), p2.begin(), p2.end());
    w.insert(w.end(), p3.begin(), p3.end());
    for (int v : t.ab.isolated) w.push_back(v);

    t.p1 = Word(std::move(p1));
    t.p2 = Word(std::move(p2));
    t.p3 = Word(std::move(p3));
    t.w = Word(std::move(w));
    return t;
}

VerifyReport verify_construction(const ConstructionTrace& t, const Graph& g) {
    VerifyReport report;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            PairCheck pc;
            pc.u = u;
            pc.v = v;
            pc.edge = g.has_edge(u, v);
            pc.pattern = restrict_to(t.w, {u, v});
            pc.alternating = alternates(t.w, u, v);
            if (pc.edge != pc.alternating) report.ok = false;
            report.pairs.push_back(std::move(pc));
        }
    }
    return report;
}

}  // namespace splitword
