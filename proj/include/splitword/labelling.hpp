#ifndef SPLITWORD_LABELLING_HPP
#define SPLITWORD_LABELLING_HPP

#include <optional>
#include <string>
#include <vector>

#include "splitword/graph.hpp"

namespace splitword {

// A bijection from the clique vertices onto {1..k}. labels[i] is the label of
// partition.clique[i].
struct Labelling {
    std::vector<int> labels;

    bool operator==(const Labelling& other) const = default;
};

int label_of(const SplitPartition& p, const Labelling& lab, int vertex);

// How a labelled independent neighborhood sits inside {1..k}:
//   Interval    — N(a) = [lo, hi], lo <= hi
//   CoInterval  — N(a) = [1, lo] ∪ [hi, k], both parts nonempty, gap between
//   Invalid     — neither form
// Prefixes [1, r] and suffixes [l, k] count as Interval; the co-interval
// reading is reserved for neighborhoods with an actual gap, which keeps the
// A/B split of the construction unambiguous.
enum class ShapeKind { Interval, CoInterval, Invalid };

struct NeighborhoodShape {
    ShapeKind kind = ShapeKind::Invalid;
    int lo = 0;  // Interval: l     CoInterval: m
    int hi = 0;  // Interval: r     CoInterval: n
};

// Shape of the labelled neighborhood of independent vertex a. Throws when a
// is not on the independent side or has an empty neighborhood (isolated
// vertices are handled upstream).
NeighborhoodShape shape_of(const Graph& g, const SplitPartition& p, const Labelling& lab, int a);

struct ConditionViolation {
    int condition = 0;          // which numbered condition failed
    std::vector<int> vertices;  // the offending vertex or pair
    std::string message;
};

struct ConditionCheck {
    bool ok = true;
    std::optional<ConditionViolation> violation;
};

// Word-representability conditions for a labelled split partition:
//  (1) every non-isolated independent vertex has Interval or CoInterval shape
//  (2) co-interval [1,m]∪[n,k] against interval [l,r]: l > m or r < n
//  (3) two co-intervals: m' < n and m < n'
// Returns the first violation in deterministic order.
ConditionCheck check_wr_conditions(const Graph& g, const SplitPartition& p, const Labelling& lab);

// Transitive-orientability conditions; intervals are restricted to prefixes
// [1,r] with r < k and suffixes [l,k] with l > 1:
//  (1) every shape is a prefix, a suffix, or a co-interval
//  (2) prefix [1,r] against suffix [l,k]: r < l
//  (3) co-interval against prefix [1,r]: r < n
//  (4) co-interval against suffix [l,k]: m < l
//  (5) two co-intervals: m < n' and m' < n
ConditionCheck check_comparability_conditions(const Graph& g, const SplitPartition& p,
                                              const Labelling& lab);

// Exact backtracking search for a labelling passing check_wr_conditions.
// Clique vertices are labelled in id order, trying labels ascending, with a
// partial assignment pruned as soon as some neighborhood can no longer extend
// to a legal shape; the first hit is the lexicographically least label
// vector. Returns std::nullopt when no labelling exists.
std::optional<Labelling> find_wr_labelling(const Graph& g, const SplitPartition& p);

// Same search against the comparability conditions.
std::optional<Labelling> find_comparability_labelling(const Graph& g, const SplitPartition& p);

// The A/B split of the independent side under a valid labelling: A holds the
// co-interval vertices with their (m, n), B the interval vertices with their
// (l, r); isolated vertices are listed separately. Throws when the labelling
// does not pass check_wr_conditions.
struct ABPartition {
    struct CoEntry {
        int vertex;
        int m, n;
    };
    struct IntervalEntry {
        int vertex;
        int l, r;
    };
    std::vector<CoEntry> a_side;
    std::vector<IntervalEntry> b_side;
    std::vector<int> isolated;
};

ABPartition ab_partition(const Graph& g, const SplitPartition& p, const Labelling& lab);

}  // namespace splitword

#endif
