#ifndef SPLITWORD_ORACLE_HPP
#define SPLITWORD_ORACLE_HPP

#include <optional>

#include "splitword/graph.hpp"
#include "splitword/words.hpp"

namespace splitword {

struct UniformRepresentation {
    int k;
    Word word;
};

// Smallest k <= k_max such that some k-uniform word represents g, together
// with one such word, found by exhaustive backtracking over letter
// placements. The first letter is pinned to vertex 0 (rotating a uniform word
// preserves the represented graph, so this loses nothing). Returns
// std::nullopt when no representation exists within the bound. Meant for
// graphs up to about nine vertices; k_max is capped at 3.
std::optional<UniformRepresentation> min_uniform_representation(const Graph& g, int k_max);

// Smallest k <= k_max such that a concatenation of k permutations of V
// represents g. Searches base permutations in lexicographic order; a base is
// viable only when the edge orientation it induces is transitively closed.
// Small graphs only (at most 8 vertices); k_max capped at 3.
std::optional<UniformRepresentation> min_permutational_representation(const Graph& g, int k_max);

// Interleaves a fresh all-adjacent vertex in front of each permutation block:
// q1 q2 .. qk becomes  apex q1 apex q2 .. apex qk. Validates that perm_word is
// a concatenation of permutations of its alphabet and that apex is fresh.
Word apex_perm_extension(const Word& perm_word, int apex);

}  // namespace splitword

#endif
