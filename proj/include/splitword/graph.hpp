#ifndef SPLITWORD_GRAPH_HPP
#define SPLITWORD_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace splitword {

// Simple undirected graph on dense vertex ids 0..n-1, adjacency kept as
// sorted neighbor lists. Every vertex carries an external name (default:
// the decimal id) so that the text formats stay readable. Instances are
// immutable after construction.
class Graph {
public:
    Graph() = default;

    // Builds a graph from an edge list. Duplicate edges collapse; self-loops
    // and out-of-range endpoints throw std::invalid_argument. When names are
    // given they must have size n.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::vector<std::string> names = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    const std::string& name(int v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }

    // All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool is_complete() const;

    // Equality compares vertex count and edge sets; names are I/O decoration.
    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> names_;
};

// A split partition: C a clique, I an independent set, C ∪ I = V. Both sides
// sorted by vertex id. C is kept inclusion-maximal (no independent vertex is
// adjacent to all of C) by normalize_partition.
struct SplitPartition {
    std::vector<int> clique;
    std::vector<int> independent;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Parses the edge-list format: one "u v" token pair per line, an optional
// "# n <count>" header fixing a minimum vertex count, other '#' lines are
// comments. Vertex names are arbitrary tokens, mapped to dense ids in first
// appearance order. Self-loops and malformed lines throw ParseError with the
// offending line number.
Graph parse_graph(const std::string& text);

// Inverse of parse_graph: "# n <count>" header plus one named edge per line.
std::string write_edge_list(const Graph& g);

// Split recognition via the degree-sequence splittance test, followed by
// extraction of the lexicographically least maximum clique whose complement
// is independent. Returns std::nullopt exactly when g is not a split graph.
std::optional<SplitPartition> find_split_partition(const Graph& g);

// While some independent vertex is adjacent to all of C, moves the least such
// vertex into C. Throws std::invalid_argument when p is not a valid clique /
// independent-set bipartition of V(g).
SplitPartition normalize_partition(const Graph& g, SplitPartition p);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices;  // vertices[i] = original id of new vertex i
};

// Induced subgraph on s (sorted, deduplicated); names carried over.
InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> s);

// Exact induced embedding test: an injective map pattern -> host preserving
// both edges and non-edges. Backtracking with degree pruning; meant for
// desk-scale graphs (host at most 64 vertices).
bool has_induced_embedding(const Graph& pattern, const Graph& host);

// Edge-preserving bijection test, backtracking over degree-compatible
// assignments. Intended for graphs up to a dozen or so vertices.
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace splitword

#endif
