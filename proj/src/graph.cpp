#include "splitword/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace splitword {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::string> names) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) continue;
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.edge_count_ = static_cast<int>(seen.size());
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    if (names.empty()) {
        names.reserve(n);
        for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    } else if (static_cast<int>(names.size()) != n) {
        throw std::invalid_argument("name vector size mismatch");
    }
    g.names_ = std::move(names);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_complete() const {
    return 2 * edge_count_ == n_ * (n_ - 1);
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

Graph parse_graph(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    std::unordered_map<std::string, int> ids;
    std::vector<std::string> names;
    int header_n = -1;

    auto id_of = [&](const std::string& token) {
        auto it = ids.find(token);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(names.size());
        ids.emplace(token, id);
        names.push_back(token);
        return id;
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // blank line
        if (a[0] == '#') {
            // "# n <count>" fixes the vertex count; other '#' lines are comments
            std::string key;
            long count = 0;
            std::istringstream hs(line.substr(1));
            if (hs >> key && key == "n") {
                if (!(hs >> count) || count < 0)
                    throw ParseError(lineno, "bad vertex count header");
                header_n = std::max<long>(header_n, count);
            }
            continue;
        }
        if (!(ls >> b)) throw ParseError(lineno, "expected two tokens, got one");
        if (ls >> extra) throw ParseError(lineno, "expected two tokens, got more");
        if (a == b) throw ParseError(lineno, "self-loop '" + a + " " + b + "'");
        int u = id_of(a);  // sequenced: first token gets the smaller fresh id
        int v = id_of(b);
        edges.emplace_back(u, v);
    }
    int n = static_cast<int>(names.size());
    if (header_n > n) {
        std::set<std::string> taken(names.begin(), names.end());
        while (static_cast<int>(names.size()) < header_n) {
            std::string candidate = std::to_string(names.size());
            while (taken.count(candidate)) candidate = "_" + candidate;
            taken.insert(candidate);
            names.push_back(candidate);
        }
        n = header_n;
    }
    return Graph::from_edges(n, edges, std::move(names));
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << g.name(u) << " " << g.name(v) << "\n";
    return out.str();
}

namespace {

// Lexicographically least m-subset that is a clique with independent
// complement. Vertices are scanned in id order, include-first, so the first
// complete solution is the least one. Skipped vertices land in I, which lets
// adjacency among them kill a branch early.
struct CliqueSearch {
    const Graph& g;
    int n, m;
    std::vector<int> chosen;
    std::vector<char> in_clique;
    std::vector<char> excluded;
    const std::vector<char>& eligible;

    CliqueSearch(const Graph& g_, int m_, const std::vector<char>& eligible_)
        : g(g_), n(g_.vertex_count()), m(m_), in_clique(n, 0), excluded(n, 0), eligible(eligible_) {}

    bool run(int pos) {
        if (static_cast<int>(chosen.size()) == m) {
            // everything from pos on joins I; no edge may stay inside I
            for (int v = pos; v < n; ++v)
                for (int w : g.neighbors(v))
                    if (w < v && !in_clique[w]) return false;
            return true;
        }
        if (n - pos < m - static_cast<int>(chosen.size())) return false;

        int v = pos;
        if (eligible[v] && adjacent_to_chosen(v)) {
            chosen.push_back(v);
            in_clique[v] = 1;
            if (run(pos + 1)) return true;
            chosen.pop_back();
            in_clique[v] = 0;
        }
        if (independent_ok(v)) {
            excluded[v] = 1;
            bool found = run(pos + 1);
            excluded[v] = 0;
            if (found) return true;
        }
        return false;
    }

    bool adjacent_to_chosen(int v) const {
        for (int u : chosen)
            if (!g.has_edge(u, v)) return false;
        return true;
    }

    bool independent_ok(int v) const {
        for (int w : g.neighbors(v))
            if (w < v && excluded[w]) return false;
        return true;
    }
};

}  // namespace

std::optional<SplitPartition> find_split_partition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<long> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<long> sorted = deg;
    std::sort(sorted.rbegin(), sorted.rend());

    int m = 0;
    for (int i = 1; i <= n; ++i)
        if (sorted[i - 1] >= i - 1) m = i;
    long lhs = 0, rhs = static_cast<long>(m) * (m - 1);
    for (int i = 0; i < n; ++i) {
        if (i < m)
            lhs += sorted[i];
        else
            rhs += sorted[i];
    }
    if (lhs != rhs) return std::nullopt;

    std::vector<char> eligible(n, 0);
    for (int v = 0; v < n; ++v) eligible[v] = (deg[v] >= m - 1);
    CliqueSearch search(g, m, eligible);
    if (!search.run(0)) return std::nullopt;  // unreachable for split inputs

    SplitPartition p;
    p.clique = search.chosen;
    for (int v = 0; v < n; ++v)
        if (!search.in_clique[v]) p.independent.push_back(v);
    return normalize_partition(g, std::move(p));
}

SplitPartition normalize_partition(const Graph& g, SplitPartition p) {
    std::sort(p.clique.begin(), p.clique.end());
    std::sort(p.independent.begin(), p.independent.end());

    std::vector<char> covered(g.vertex_count(), 0);
    for (int v : p.clique) {
        if (v < 0 || v >= g.vertex_count() || covered[v])
            throw std::invalid_argument("partition does not partition V");
        covered[v] = 1;
    }
    for (int v : p.independent) {
        if (v < 0 || v >= g.vertex_count() || covered[v])
            throw std::invalid_argument("partition does not partition V");
        covered[v] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!covered[v]) throw std::invalid_argument("partition does not cover V");
    for (size_t i = 0; i < p.clique.size(); ++i)
        for (size_t j = i + 1; j < p.clique.size(); ++j)
            if (!g.has_edge(p.clique[i], p.clique[j]))
                throw std::invalid_argument("clique side is not a clique");
    for (size_t i = 0; i < p.independent.size(); ++i)
        for (size_t j = i + 1; j < p.independent.size(); ++j)
            if (g.has_edge(p.independent[i], p.independent[j]))
                throw std::invalid_argument("independent side is not independent");

    for (;;) {
        int move = -1;
        for (int v : p.independent) {
            bool all = true;
            for (int u : p.clique)
                if (!g.has_edge(u, v)) {
                    all = false;
                    break;
                }
            if (all) {
                move = v;
                break;
            }
        }
        if (move < 0) break;
        p.independent.erase(std::find(p.independent.begin(), p.independent.end(), move));
        p.clique.insert(std::upper_bound(p.clique.begin(), p.clique.end(), move), move);
    }
    return p;
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced set not contained in V");
    std::vector<int> pos(g.vertex_count(), -1);
    for (size_t i = 0; i < s.size(); ++i) pos[s[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> names;
    names.reserve(s.size());
    for (int v : s) names.push_back(g.name(v));
    for (int v : s)
        for (int w : g.neighbors(v))
            if (v < w && pos[w] >= 0) edges.emplace_back(pos[v], pos[w]);
    return {Graph::from_edges(static_cast<int>(s.size()), edges, std::move(names)), std::move(s)};
}

namespace {

struct EmbedSearch {
    int np, nh;
    std::vector<uint64_t> prow, hrow;  // adjacency bitmask rows
    std::vector<int> pdeg, hdeg;
    std::vector<int> order;   // pattern vertices, connectivity-first
    std::vector<int> image;   // pattern vertex -> host vertex
    uint64_t used = 0;

    bool run(size_t idx) {
        if (idx == order.size()) return true;
        int p = order[idx];
        for (int h = 0; h < nh; ++h) {
            if (used & (1ULL << h)) continue;
            if (hdeg[h] < pdeg[p]) continue;
            bool ok = true;
            for (size_t j = 0; j < idx && ok; ++j) {
                int q = order[j];
                bool pe = (prow[p] >> q) & 1;
                bool he = (hrow[h] >> image[q]) & 1;
                if (pe != he) ok = false;
            }
            if (!ok) continue;
            image[p] = h;
            used |= 1ULL << h;
            if (run(idx + 1)) return true;
            used &= ~(1ULL << h);
        }
        return false;
    }
};

}  // namespace

bool has_induced_embedding(const Graph& pattern, const Graph& host) {
    const int np = pattern.vertex_count(), nh = host.vertex_count();
    if (np > nh) return false;
    if (nh > 64) throw std::invalid_argument("host graph too large for embedding search");
    if (np == 0) return true;

    EmbedSearch s;
    s.np = np;
    s.nh = nh;
    s.prow.assign(np, 0);
    s.hrow.assign(nh, 0);
    s.pdeg.resize(np);
    s.hdeg.resize(nh);
    for (int v = 0; v < np; ++v) {
        s.pdeg[v] = pattern.degree(v);
        for (int w : pattern.neighbors(v)) s.prow[v] |= 1ULL << w;
    }
    for (int v = 0; v < nh; ++v) {
        s.hdeg[v] = host.degree(v);
        for (int w : host.neighbors(v)) s.hrow[v] |= 1ULL << w;
    }

    // Place high-degree vertices first, then greedily those most connected to
    // the already-ordered ones.
    std::vector<char> placed(np, 0);
    for (int step = 0; step < np; ++step) {
        int best = -1, best_conn = -1, best_deg = -1;
        for (int v = 0; v < np; ++v) {
            if (placed[v]) continue;
            int conn = 0;
            for (int u = 0; u < np; ++u)
                if (placed[u] && ((s.prow[v] >> u) & 1)) ++conn;
            if (conn > best_conn || (conn == best_conn && s.pdeg[v] > best_deg)) {
                best = v;
                best_conn = conn;
                best_deg = s.pdeg[v];
            }
        }
        placed[best] = 1;
        s.order.push_back(best);
    }
    s.image.assign(np, -1);
    return s.run(0);
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.vertex_count(); ++v) dg.push_back(g.degree(v));
    for (int v = 0; v < h.vertex_count(); ++v) dh.push_back(h.degree(v));
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return has_induced_embedding(g, h);
}

}  // namespace splitword
