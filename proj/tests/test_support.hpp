#ifndef SPLITWORD_TEST_SUPPORT_HPP
#define SPLITWORD_TEST_SUPPORT_HPP

// Test-only helpers: small graph builders, independent brute-force oracles,
// and the graph pools the property suites run on. Everything here stays
// independent of the implementation paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "splitword/graph.hpp"
#include "splitword/labelling.hpp"

namespace testsupport {

using splitword::Graph;
using splitword::SplitPartition;

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph::from_edges(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return make_graph(n, edges);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return make_graph(n, edges);
}

inline Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return make_graph(leaves + 1, edges);
}

// Plain subset scan: does g contain an induced copy of pattern? Independent
// of the production detection path except for the isomorphism primitive.
inline std::optional<std::vector<int>> subset_scan_induced(const Graph& g, const Graph& pattern) {
    const int n = g.vertex_count(), h = pattern.vertex_count();
    if (h > n) return std::nullopt;
    std::vector<int> subset(h);
    std::iota(subset.begin(), subset.end(), 0);
    for (;;) {
        if (splitword::is_isomorphic(splitword::induced_subgraph(g, subset).graph, pattern))
            return subset;
        // next h-combination of {0..n-1} in lex order
        int i = h - 1;
        while (i >= 0 && subset[i] == n - h + i) --i;
        if (i < 0) return std::nullopt;
        ++subset[i];
        for (int j = i + 1; j < h; ++j) subset[j] = subset[j - 1] + 1;
    }
}

// Split-graph oracle by forbidden induced subgraphs: no 2K2, C4 or C5.
inline bool forbidden_scan_says_split(const Graph& g) {
    Graph two_k2 = make_graph(4, {{0, 1}, {2, 3}});
    Graph c4 = cycle_graph(4);
    Graph c5 = cycle_graph(5);
    if (subset_scan_induced(g, two_k2)) return false;
    if (subset_scan_induced(g, c4)) return false;
    if (g.vertex_count() >= 5 && subset_scan_induced(g, c5)) return false;
    return true;
}

// Exhaustive labelling scan over all k! label vectors; returns the
// lexicographically least passing vector, if any.
template <typename CheckFn>
inline std::optional<splitword::Labelling> scan_labellings(const Graph& g, const SplitPartition& p,
                                                           CheckFn&& passes) {
    const int k = static_cast<int>(p.clique.size());
    std::vector<int> labels(k);
    std::iota(labels.begin(), labels.end(), 1);
    std::optional<splitword::Labelling> best;
    do {
        splitword::Labelling lab{labels};
        if (passes(g, p, lab)) {
            if (!best || lab.labels < best->labels) best = lab;
        }
    } while (std::next_permutation(labels.begin(), labels.end()));
    return best;
}

inline std::optional<splitword::Labelling> scan_wr_labellings(const Graph& g,
                                                              const SplitPartition& p) {
    return scan_labellings(g, p, [](const Graph& g_, const SplitPartition& p_, const auto& lab) {
        return splitword::check_wr_conditions(g_, p_, lab).ok;
    });
}

inline std::optional<splitword::Labelling> scan_comparability_labellings(const Graph& g,
                                                                         const SplitPartition& p) {
    return scan_labellings(g, p, [](const Graph& g_, const SplitPartition& p_, const auto& lab) {
        return splitword::check_comparability_conditions(g_, p_, lab).ok;
    });
}

// Random split graphs: a clique of size 1..max_clique plus independent
// vertices with random proper-subset neighborhoods (possibly empty, so the
// isolated-vertex path gets exercised too).
class RandomSplitGraphs {
public:
    explicit RandomSplitGraphs(uint32_t seed) : rng_(seed) {}

    Graph next(int min_n, int max_n, int max_clique) {
        std::uniform_int_distribution<int> nd(min_n, max_n);
        int n = nd(rng_);
        std::uniform_int_distribution<int> kd(1, std::min(max_clique, n));
        int kc = kd(rng_);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < kc; ++u)
            for (int v = u + 1; v < kc; ++v) edges.emplace_back(u, v);
        std::uniform_int_distribution<int> coin(0, 1);
        std::uniform_int_distribution<int> pick(0, kc - 1);
        for (int a = kc; a < n; ++a) {
            std::vector<char> in(kc, 0);
            int cnt = 0;
            for (int c = 0; c < kc; ++c)
                if (coin(rng_)) {
                    in[c] = 1;
                    ++cnt;
                }
            if (cnt == kc) in[pick(rng_)] = 0;  // keep the neighborhood proper
            for (int c = 0; c < kc; ++c)
                if (in[c]) edges.emplace_back(c, a);
        }
        return make_graph(n, edges);
    }

private:
    std::mt19937 rng_;
};

// Every split graph on at most max_n vertices, enumerated as a clique of size
// kc plus a multiset of proper-subset neighborhoods, one representative per
// orbit under clique relabelling. Each split graph appears (up to
// isomorphism) at least once.
inline std::vector<Graph> enumerate_split_graphs(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        for (int kc = 1; kc <= n; ++kc) {
            const int t = n - kc;
            const uint32_t limit = (1u << kc) - 1;  // proper subsets only: 0 .. limit-1
            std::vector<uint32_t> masks(t, 0);

            std::vector<std::vector<int>> perms;
            {
                std::vector<int> perm(kc);
                std::iota(perm.begin(), perm.end(), 0);
                do perms.push_back(perm);
                while (std::next_permutation(perm.begin(), perm.end()));
            }
            auto remap = [&](uint32_t mask, const std::vector<int>& perm) {
                uint32_t res = 0;
                for (int b = 0; b < kc; ++b)
                    if (mask & (1u << b)) res |= 1u << perm[b];
                return res;
            };
            auto canonical = [&]() {
                for (const auto& perm : perms) {
                    std::vector<uint32_t> mapped(masks.size());
                    for (size_t i = 0; i < masks.size(); ++i) mapped[i] = remap(masks[i], perm);
                    std::sort(mapped.begin(), mapped.end());
                    if (mapped < masks) return false;
                }
                return true;
            };
            auto emit = [&]() {
                std::vector<std::pair<int, int>> edges;
                for (int u = 0; u < kc; ++u)
                    for (int v = u + 1; v < kc; ++v) edges.emplace_back(u, v);
                for (int i = 0; i < t; ++i)
                    for (int b = 0; b < kc; ++b)
                        if (masks[i] & (1u << b)) edges.emplace_back(b, kc + i);
                out.push_back(make_graph(n, edges));
            };

            // non-decreasing mask sequences
            std::function<void(int, uint32_t)> rec = [&](int i, uint32_t from) {
                if (i == t) {
                    if (canonical()) emit();
                    return;
                }
                for (uint32_t mask = from; mask < limit; ++mask) {
                    masks[i] = mask;
                    rec(i + 1, mask);
                }
            };
            if (t == 0) {
                emit();
            } else if (limit > 0) {
                rec(0, 0);
            }
        }
    }
    return out;
}

}  // namespace testsupport

#endif
