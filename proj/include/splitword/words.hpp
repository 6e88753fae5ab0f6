#ifndef SPLITWORD_WORDS_HPP
#define SPLITWORD_WORDS_HPP

#include <vector>

#include "splitword/graph.hpp"

namespace splitword {

// A finite word over vertex ids. The semantic payload is the alternation
// relation it induces: two letters x, y alternate when the restriction of the
// word to {x, y} reads xyxy... or yxyx... (any length; empty and one-letter
// restrictions alternate vacuously).
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> letters_) : letters(std::move(letters_)) {}

    std::size_t size() const { return letters.size(); }
    std::vector<int> alphabet() const;  // sorted distinct letters

    bool operator==(const Word& other) const = default;
};

// Subword of w consisting of exactly the occurrences of letters in keep.
Word restrict_to(const Word& w, const std::vector<int>& keep);

// Strict alternation of x and y in w. Throws std::invalid_argument when x == y.
bool alternates(const Word& w, int x, int y);

bool is_k_uniform(const Word& w, int k);

Word reversed(const Word& w);

// Subsequence test: u occurs in w as a (not necessarily contiguous) subword.
bool is_subword(const Word& u, const Word& w);

// Graph on vertices 0..n-1 whose edges are exactly the alternating pairs.
// The alphabet of w must be exactly {0..n-1}; otherwise edge semantics would
// be undefined and the call throws.
Graph graph_of_word(const Word& w, int n);

// True iff graph_of_word(w, |V(g)|) equals g edge-for-edge. Throws on
// alphabet mismatch.
bool represents(const Word& w, const Graph& g);

// Space-separated external vertex names.
std::string word_to_string(const Word& w, const Graph& g);

}  // namespace splitword

#endif
