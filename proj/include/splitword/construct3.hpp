#ifndef SPLITWORD_CONSTRUCT3_HPP
#define SPLITWORD_CONSTRUCT3_HPP

#include <vector>

#include "splitword/graph.hpp"
#include "splitword/labelling.hpp"
#include "splitword/words.hpp"

namespace splitword {

// Trace of the 3-uniform construction. Writing the clique vertices by their
// labels 1..k:
//   p1, p2 start as 1 2 .. k; a co-interval vertex a with N(a)=[1,m]∪[n,k]
//   is inserted after m in p1 and before n in p2; an interval vertex with
//   N(a)=[l,r] is inserted before l in p1 and after r in p2. d is the largest
//   co-interval m (at least 1), and p3 is 1..k with the reversal of p1's
//   A-letters spliced in right after d. The output is
//       w = p1 · (p1 restricted to B, reversed) · p2 · p3,
//   with every isolated independent vertex v padded in as a v·v prefix and a
//   v suffix.
struct ConstructionTrace {
    Word p1;
    Word p2;
    Word p3;
    int d = 1;
    Word w;
    ABPartition ab;
    Labelling labelling;
};

// Runs the construction for a labelled word-representable split graph.
// Throws std::invalid_argument when the labelling fails the
// word-representability conditions. The result is 3-uniform over V and
// represents g.
ConstructionTrace build_three_uniform_word(const Graph& g, const SplitPartition& p,
                                           const Labelling& lab);

// Per-pair audit of a trace against the input graph: each vertex pair with
// its restriction pattern and whether alternation matches adjacency.
struct PairCheck {
    int u, v;
    bool edge;
    bool alternating;
    Word pattern;
};

struct VerifyReport {
    bool ok = true;
    std::vector<PairCheck> pairs;  // all pairs, mismatches flagged
};

VerifyReport verify_construction(const ConstructionTrace& t, const Graph& g);

}  // namespace splitword

#endif
