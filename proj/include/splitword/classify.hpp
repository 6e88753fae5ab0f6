#ifndef SPLITWORD_CLASSIFY_HPP
#define SPLITWORD_CLASSIFY_HPP

#include <optional>
#include <vector>

#include "splitword/families.hpp"
#include "splitword/graph.hpp"
#include "splitword/labelling.hpp"
#include "splitword/words.hpp"

namespace splitword {

struct Witness {
    FamilySpec spec;
    std::vector<int> vertices;  // host vertex ids, sorted
};

// Searches g for an induced copy of a catalog member. Members are tried in
// list order (skipping those too large to fit); for the first member that
// occurs, the lexicographically least hosting vertex subset is returned.
std::optional<Witness> detect_induced(const Graph& g, const std::vector<FamilySpec>& members);

// The full verdict record. Fields that the pipeline could not define stay
// empty: everything but is_split when the input is not split, rep_number and
// the words when it is not word-representable.
struct Classification {
    bool is_split = false;
    std::optional<SplitPartition> partition;
    std::optional<bool> word_representable;
    std::optional<Labelling> labelling;
    std::optional<int> rep_number;  // 1, 2 or 3
    std::optional<Witness> witness;         // rep_number == 3 certificate
    std::optional<Witness> non_wr_witness;  // informative only, no completeness claim
    std::optional<bool> comparability;
    std::optional<bool> permutation_graph;
    std::optional<Word> word;       // verified 3-uniform certificate of R <= 3
    std::optional<Word> perm_word;  // single permutation, present iff rep_number == 1
};

// The pipeline: split recognition, labelling search, the 3-uniform
// construction, and the catalog scan deciding between 2 and 3.
Classification representation_number(const Graph& g);

struct ComparabilityVerdict {
    bool comparability = false;
    std::optional<Witness> obstruction;  // an induced B1/B2/B3 when not comparability
    std::optional<Labelling> labelling;  // a passing labelling when comparability
};

// Decides split comparability two independent ways — B1/B2/B3-freeness and
// the labelling search — and insists they agree (std::logic_error otherwise).
// Throws std::invalid_argument when g is not split.
ComparabilityVerdict split_comparability(const Graph& g);

// True iff g (split) contains none of B1..B4 induced.
bool split_permutation(const Graph& g);

// For a split comparability graph: true iff g contains F0 or F1(5) induced,
// which is asserted to coincide with rep_number == 3.
bool comparability_rep3(const Graph& g);

}  // namespace splitword

#endif
