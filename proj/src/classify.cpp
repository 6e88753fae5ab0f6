#include "splitword/classify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "splitword/construct3.hpp"

namespace splitword {

namespace {

// largest independent set of a split graph: all of I, plus one clique vertex
// when some clique vertex sees none of I
int split_independence_number(const Graph& g, const SplitPartition& p) {
    for (int c : p.clique) {
        bool clear = true;
        for (int v : g.neighbors(c))
            if (std::binary_search(p.independent.begin(), p.independent.end(), v)) {
                clear = false;
                break;
            }
        if (clear) return static_cast<int>(p.independent.size()) + 1;
    }
    return static_cast<int>(p.independent.size());
}

// Lexicographically least subset of host vertices inducing a copy of the
// pattern. Subsets grow in ascending id order; a branch dies as soon as the
// chosen part no longer embeds into the pattern as an induced subgraph, or
// draws more from the host's clique (independent) side than any induced copy
// of the pattern could hold.
struct InducedCopySearch {
    const Graph& host;
    const Graph& pattern;
    int n, h;
    int clique_budget, independent_budget;
    const std::vector<char>& host_clique_side;
    std::vector<int> chosen;
    int from_clique = 0, from_independent = 0;

    InducedCopySearch(const Graph& host_, const Graph& pattern_, int clique_budget_,
                      int independent_budget_, const std::vector<char>& host_clique_side_)
        : host(host_),
          pattern(pattern_),
          n(host_.vertex_count()),
          h(pattern_.vertex_count()),
          clique_budget(clique_budget_),
          independent_budget(independent_budget_),
          host_clique_side(host_clique_side_) {}

    bool run(int start) {
        if (static_cast<int>(chosen.size()) == h)
            return is_isomorphic(induced_subgraph(host, chosen).graph, pattern);
        for (int v = start; v <= n - (h - static_cast<int>(chosen.size())); ++v) {
            bool on_clique_side = host_clique_side[v];
            int& count = on_clique_side ? from_clique : from_independent;
            int budget = on_clique_side ? clique_budget : independent_budget;
            if (count + 1 > budget) continue;
            chosen.push_back(v);
            ++count;
            if (has_induced_embedding(induced_subgraph(host, chosen).graph, pattern) &&
                run(v + 1))
                return true;
            --count;
            chosen.pop_back();
        }
        return false;
    }
};

Word identity_permutation(const Graph& g) {
    std::vector<int> letters(g.vertex_count());
    std::iota(letters.begin(), letters.end(), 0);
    return Word(std::move(letters));
}

ComparabilityVerdict split_comparability_impl(const Graph& g, const SplitPartition& p) {
    ComparabilityVerdict verdict;
    verdict.obstruction = detect_induced(g, comparability_obstructions());
    verdict.labelling = find_comparability_labelling(g, p);
    bool free_of_obstructions = !verdict.obstruction.has_value();
    bool labelled = verdict.labelling.has_value();
    if (free_of_obstructions != labelled)
        throw std::logic_error(
            "comparability cross-check disagrees: obstruction scan says " +
            std::string(free_of_obstructions ? "comparability" : "not comparability") +
            ", labelling search says " + std::string(labelled ? "comparability" : "not comparability"));
    verdict.comparability = labelled;
    return verdict;
}

}  // namespace

std::optional<Witness> detect_induced(const Graph& g, const std::vector<FamilySpec>& members) {
    const int n = g.vertex_count();
    // capacity bounds from the host's split structure; without one the scan
    // stays exact, just unpruned
    auto host_partition = find_split_partition(g);
    std::vector<char> clique_side(n, 0);
    int host_clique = n, host_independent = n;
    if (host_partition) {
        for (int v : host_partition->clique) clique_side[v] = 1;
        host_clique = static_cast<int>(host_partition->clique.size());
        host_independent = split_independence_number(g, *host_partition);
    } else {
        std::fill(clique_side.begin(), clique_side.end(), 1);
    }

    for (const auto& spec : members) {
        if (spec_vertex_count(spec) > n) continue;
        FamilyGraph fam = generate(spec);
        const int h = fam.graph.vertex_count();
        int clique_budget = h, independent_budget = h;
        if (host_partition) {
            // host clique vertices land on a clique of the pattern, host
            // independent vertices on an independent set of it
            int pattern_clique = static_cast<int>(fam.partition.clique.size());
            int pattern_independent = split_independence_number(fam.graph, fam.partition);
            if (pattern_clique > host_clique || pattern_independent > host_independent)
                continue;  // no induced copy can fit
            clique_budget = pattern_clique;
            independent_budget = pattern_independent;
        }
        InducedCopySearch search(g, fam.graph, clique_budget, independent_budget, clique_side);
        if (search.run(0)) return Witness{spec, search.chosen};
    }
    return std::nullopt;
}

Classification representation_number(const Graph& g) {
    Classification c;
    auto p = find_split_partition(g);
    if (!p) return c;
    c.is_split = true;
    c.partition = *p;

    auto lab = find_wr_labelling(g, *p);
    const int n = g.vertex_count();
    auto comp = split_comparability_impl(g, *p);
    c.comparability = comp.comparability;
    c.permutation_graph = !detect_induced(g, b_family()).has_value();

    if (!lab) {
        c.word_representable = false;
        c.non_wr_witness = detect_induced(g, c_family_non_c3(std::max(5, n)));
        return c;
    }
    c.word_representable = true;
    c.labelling = *lab;

    ConstructionTrace trace = build_three_uniform_word(g, *p, *lab);
    if (!represents(trace.w, g))
        throw std::logic_error("3-uniform construction failed to represent its input");
    c.word = trace.w;

    if (g.is_complete()) {
        c.rep_number = 1;
        c.perm_word = identity_permutation(g);
    } else if (auto wit = detect_induced(g, c3_members(std::max(5, n)))) {
        c.rep_number = 3;
        c.witness = std::move(wit);
    } else {
        c.rep_number = 2;
    }
    return c;
}

ComparabilityVerdict split_comparability(const Graph& g) {
    auto p = find_split_partition(g);
    if (!p) throw std::invalid_argument("split_comparability expects a split graph");
    return split_comparability_impl(g, *p);
}

bool split_permutation(const Graph& g) {
    if (!find_split_partition(g)) throw std::invalid_argument("split_permutation expects a split graph");
    return !detect_induced(g, b_family()).has_value();
}

bool comparability_rep3(const Graph& g) {
    auto verdict = split_comparability(g);  // also validates splitness
    if (!verdict.comparability)
        throw std::invalid_argument("comparability_rep3 expects a split comparability graph");
    bool has_rep3_witness =
        detect_induced(g, {{Family::F0, 0}, {Family::F1, 5}}).has_value();
    auto cls = representation_number(g);
    bool rep3 = cls.rep_number.has_value() && *cls.rep_number == 3;
    if (has_rep3_witness != rep3)
        throw std::logic_error("rep-3 witness scan disagrees with the representation number");
    return has_rep3_witness;
}

}  // namespace splitword
