#include "splitword/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace splitword {

namespace {

// Backtracking search for a k-uniform representing word. Per pair we track
// the last letter seen and whether the restriction is still strictly
// alternating; an edge pair must stay alternating and count-balanced, a
// non-edge pair must have broken alternation by the time both letters are
// used up.
struct UniformSearch {
    const Graph& g;
    int n, k;
    std::vector<int> rem;
    std::vector<int> last;          // pair -> last letter placed (-1 none)
    std::vector<char> alternating;  // pair -> restriction still alternates
    std::vector<char> edge;
    std::vector<int> word;
    std::vector<int> undo_last;     // flat undo buffers, depth * n + y
    std::vector<char> undo_alt;

    UniformSearch(const Graph& g_, int k_) : g(g_), n(g_.vertex_count()), k(k_) {
        rem.assign(n, k);
        last.assign(n * n, -1);
        alternating.assign(n * n, 1);
        edge.assign(n * n, 0);
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u)) edge[u * n + v] = 1;
        word.reserve(n * k);
        undo_last.assign(static_cast<size_t>(n) * n * k, 0);
        undo_alt.assign(static_cast<size_t>(n) * n * k, 0);
    }

    int pair_index(int x, int y) const { return (x < y ? x * n + y : y * n + x); }

    bool dfs() {
        const int depth = static_cast<int>(word.size());
        if (depth == n * k) return true;
        for (int x = 0; x < n; ++x) {
            if (depth == 0 && x != 0) break;  // rotation symmetry: start with vertex 0
            if (rem[x] == 0) continue;

            bool viable = true;
            for (int y = 0; y < n && viable; ++y) {
                if (y == x) continue;
                int idx = pair_index(x, y);
                if (edge[idx]) {
                    // the suffix must keep alternating x and y
                    if (last[idx] == x || rem[y] > rem[x]) viable = false;
                }
            }
            if (!viable) continue;

            // commit
            word.push_back(x);
            --rem[x];
            int* ul = undo_last.data() + static_cast<size_t>(depth) * n;
            char* ua = undo_alt.data() + static_cast<size_t>(depth) * n;
            for (int y = 0; y < n; ++y) {
                if (y == x) continue;
                int idx = pair_index(x, y);
                ul[y] = last[idx];
                ua[y] = alternating[idx];
                if (last[idx] == x) alternating[idx] = 0;
                last[idx] = x;
            }

            bool dead = false;
            if (rem[x] == 0) {
                // with x used up and the restriction ending in x, a still
                // alternating non-edge pair can only be broken by a future
                // y-y repeat, which needs two spare occurrences of y
                for (int y = 0; y < n; ++y) {
                    if (y == x) continue;
                    int idx = pair_index(x, y);
                    if (!edge[idx] && rem[y] <= 1 && alternating[idx]) {
                        dead = true;
                        break;
                    }
                }
            }
            if (!dead && dfs()) return true;

            // undo
            for (int y = 0; y < n; ++y) {
                if (y == x) continue;
                int idx = pair_index(x, y);
                last[idx] = ul[y];
                alternating[idx] = ua[y];
            }
            ++rem[x];
            word.pop_back();
        }
        return false;
    }
};

std::vector<int> order_of(const std::vector<int>& perm) {
    std::vector<int> ord(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) ord[perm[i]] = static_cast<int>(i);
    return ord;
}

// The edge orientation induced by a base permutation must be transitively
// closed, otherwise no tuple starting from it can represent the graph.
bool orientation_transitive(const Graph& g, const std::vector<int>& ord) {
    const int n = g.vertex_count();
    for (int x = 0; x < n; ++x)
        for (int y : g.neighbors(x)) {
            if (ord[x] >= ord[y]) continue;
            for (int z : g.neighbors(y)) {
                if (z == x || ord[y] >= ord[z]) continue;
                if (!g.has_edge(x, z)) return false;
            }
        }
    return true;
}

// Lexicographically least topological order of the digraph given as an
// out-neighbor matrix, or nullopt on a cycle.
std::optional<std::vector<int>> lex_topological_order(int n, const std::vector<char>& arc) {
    std::vector<int> indeg(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (arc[u * n + v]) ++indeg[v];
    std::vector<char> taken(n, 0);
    std::vector<int> out;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!taken[v] && indeg[v] == 0) {
                pick = v;
                break;
            }
        if (pick < 0) return std::nullopt;
        taken[pick] = 1;
        out.push_back(pick);
        for (int v = 0; v < n; ++v)
            if (arc[pick * n + v]) --indeg[v];
    }
    return out;
}

// Enumerates linear extensions of a digraph in lexicographic order, calling
// visit(extension) until it returns true.
bool for_each_linear_extension(int n, const std::vector<char>& arc,
                               const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> indeg(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (arc[u * n + v]) ++indeg[v];
    std::vector<int> prefix;
    std::vector<char> taken(n, 0);

    std::function<bool()> rec = [&]() -> bool {
        if (static_cast<int>(prefix.size()) == n) return visit(prefix);
        for (int v = 0; v < n; ++v) {
            if (taken[v] || indeg[v] != 0) continue;
            taken[v] = 1;
            prefix.push_back(v);
            for (int w = 0; w < n; ++w)
                if (arc[v * n + w]) --indeg[w];
            if (rec()) return true;
            for (int w = 0; w < n; ++w)
                if (arc[v * n + w]) ++indeg[w];
            prefix.pop_back();
            taken[v] = 0;
        }
        return false;
    };
    return rec();
}

Word concat_permutations(const std::vector<std::vector<int>>& perms) {
    std::vector<int> letters;
    for (const auto& p : perms) letters.insert(letters.end(), p.begin(), p.end());
    return Word(std::move(letters));
}

}  // namespace

std::optional<UniformRepresentation> min_uniform_representation(const Graph& g, int k_max) {
    if (k_max < 1 || k_max > 3)
        throw std::invalid_argument("uniform search supports 1 <= k_max <= 3");
    const int n = g.vertex_count();
    if (n == 0) return UniformRepresentation{1, Word{}};

    if (g.is_complete()) {
        std::vector<int> letters(n);
        std::iota(letters.begin(), letters.end(), 0);
        return UniformRepresentation{1, Word(std::move(letters))};
    }
    for (int k = 2; k <= k_max; ++k) {
        UniformSearch search(g, k);
        if (search.dfs()) return UniformRepresentation{k, Word(std::move(search.word))};
    }
    return std::nullopt;
}

std::optional<UniformRepresentation> min_permutational_representation(const Graph& g, int k_max) {
    if (k_max < 1 || k_max > 3)
        throw std::invalid_argument("permutational search supports 1 <= k_max <= 3");
    const int n = g.vertex_count();
    if (n > 8) throw std::invalid_argument("permutational search supports at most 8 vertices");
    if (n == 0) return UniformRepresentation{1, Word{}};

    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    if (g.is_complete()) return UniformRepresentation{1, Word(base)};
    if (k_max < 2) return std::nullopt;

    // k = 2: the partner permutation is forced on every pair, a tournament
    // that works iff it is acyclic.
    std::vector<int> q1 = base;
    do {
        auto ord = order_of(q1);
        if (!orientation_transitive(g, ord)) continue;
        std::vector<char> arc(n * n, 0);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                bool before = ord[u] < ord[v];
                if (g.has_edge(u, v) ? before : !before) arc[u * n + v] = 1;
            }
        if (auto q2 = lex_topological_order(n, arc)) {
            Word w = concat_permutations({q1, *q2});
            if (represents(w, g)) return UniformRepresentation{2, std::move(w)};
        }
    } while (std::next_permutation(q1.begin(), q1.end()));
    if (k_max < 3) return std::nullopt;

    // k = 3: middle permutation ranges over linear extensions of the oriented
    // edges; the third is forced on edges and on the non-edges still agreeing
    // with the base order.
    q1 = base;
    do {
        auto ord1 = order_of(q1);
        if (!orientation_transitive(g, ord1)) continue;
        std::vector<char> edge_arc(n * n, 0);
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u))
                if (ord1[u] < ord1[v]) edge_arc[u * n + v] = 1;

        std::optional<Word> found;
        for_each_linear_extension(n, edge_arc, [&](const std::vector<int>& q2) {
            auto ord2 = order_of(q2);
            std::vector<char> arc = edge_arc;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    bool agree = (ord1[u] < ord1[v]) == (ord2[u] < ord2[v]);
                    if (!agree) continue;
                    // q3 must break this pair by opposing the base order
                    if (ord1[u] < ord1[v])
                        arc[v * n + u] = 1;
                    else
                        arc[u * n + v] = 1;
                }
            auto q3 = lex_topological_order(n, arc);
            if (!q3) return false;
            Word w = concat_permutations({q1, q2, *q3});
            if (!represents(w, g)) return false;
            found = std::move(w);
            return true;
        });
        if (found) return UniformRepresentation{3, std::move(*found)};
    } while (std::next_permutation(q1.begin(), q1.end()));
    return std::nullopt;
}

Word apex_perm_extension(const Word& perm_word, int apex) {
    std::vector<int> alphabet = perm_word.alphabet();
    if (std::binary_search(alphabet.begin(), alphabet.end(), apex))
        throw std::invalid_argument("apex vertex already occurs in the word");
    const size_t n = alphabet.size();
    if (n == 0 || perm_word.size() % n != 0)
        throw std::invalid_argument("word is not a concatenation of permutations");
    const size_t blocks = perm_word.size() / n;
    std::vector<int> out;
    out.reserve(perm_word.size() + blocks);
    for (size_t b = 0; b < blocks; ++b) {
        std::vector<int> block(perm_word.letters.begin() + b * n,
                               perm_word.letters.begin() + (b + 1) * n);
        std::vector<int> sorted = block;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != alphabet)
            throw std::invalid_argument("word is not a concatenation of permutations");
        out.push_back(apex);
        out.insert(out.end(), block.begin(), block.end());
    }
    return Word(std::move(out));
}

}  // namespace splitword
