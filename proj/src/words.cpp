#include "splitword/words.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace splitword {

std::vector<int> Word::alphabet() const {
    std::vector<int> a = letters;
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

Word restrict_to(const Word& w, const std::vector<int>& keep) {
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out;
    for (int x : w.letters)
        if (std::binary_search(sorted.begin(), sorted.end(), x)) out.push_back(x);
    return Word(std::move(out));
}

bool alternates(const Word& w, int x, int y) {
    if (x == y) throw std::invalid_argument("alternation needs two distinct letters");
    int last = -1;
    for (int c : w.letters) {
        if (c != x && c != y) continue;
        if (c == last) return false;
        last = c;
    }
    return true;
}

bool is_k_uniform(const Word& w, int k) {
    if (k < 1) throw std::invalid_argument("uniformity must be at least 1");
    std::map<int, int> count;
    for (int c : w.letters) ++count[c];
    for (auto [_, c] : count)
        if (c != k) return false;
    return true;
}

Word reversed(const Word& w) {
    return Word(std::vector<int>(w.letters.rbegin(), w.letters.rend()));
}

bool is_subword(const Word& u, const Word& w) {
    size_t i = 0;
    for (int c : w.letters) {
        if (i < u.letters.size() && u.letters[i] == c) ++i;
    }
    return i == u.letters.size();
}

Graph graph_of_word(const Word& w, int n) {
    std::vector<int> a = w.alphabet();
    bool dense = static_cast<int>(a.size()) == n;
    for (int i = 0; dense && i < n; ++i) dense = (a[i] == i);
    if (!dense) throw std::invalid_argument("word alphabet must be exactly {0..n-1}");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (alternates(w, u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

bool represents(const Word& w, const Graph& g) {
    Graph built = graph_of_word(w, g.vertex_count());
    return built == g;
}

std::string word_to_string(const Word& w, const Graph& g) {
    std::ostringstream out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out << ' ';
        out << g.name(w.letters[i]);
    }
    return out.str();
}

}  // namespace splitword
