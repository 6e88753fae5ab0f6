#include <doctest.h>

#include <random>

#include "splitword/words.hpp"
#include "test_support.hpp"

using namespace splitword;
using namespace testsupport;

namespace {

// letters by example: a=0, b=1, c=2
Word w_from(const std::string& s) {
    std::vector<int> letters;
    for (char ch : s) {
        if (ch >= 'a' && ch <= 'z')
            letters.push_back(ch - 'a');
        else
            letters.push_back(10 + (ch - '0'));  // digits land above the letters
    }
    return Word(std::move(letters));
}

Word random_word(std::mt19937& rng, int alphabet, int len) {
    std::uniform_int_distribution<int> d(0, alphabet - 1);
    std::vector<int> letters(len);
    for (auto& x : letters) x = d(rng);
    return Word(std::move(letters));
}

}  // namespace

TEST_CASE("restriction keeps exactly the chosen letters in order") {
    CHECK(restrict_to(w_from("acabbccb"), {0, 1}) == w_from("aabbb"));
    CHECK(restrict_to(w_from("acabbccb"), {}) == Word{});
    CHECK(restrict_to(w_from("abab"), {0, 1}) == w_from("abab"));

    SUBCASE("restricting to the own alphabet is the identity") {
        std::mt19937 rng(5);
        for (int i = 0; i < 50; ++i) {
            Word w = random_word(rng, 5, 12);
            CHECK(restrict_to(w, w.alphabet()) == w);
        }
    }
    SUBCASE("nested restrictions compose by intersection") {
        std::mt19937 rng(6);
        for (int i = 0; i < 50; ++i) {
            Word w = random_word(rng, 6, 14);
            std::vector<int> a = {0, 1, 2, 3}, b = {2, 3, 4, 5}, both = {2, 3};
            CHECK(restrict_to(restrict_to(w, a), b) == restrict_to(w, both));
        }
    }
}

TEST_CASE("alternation") {
    CHECK(alternates(w_from("abab"), 0, 1));
    CHECK(!alternates(w_from("aabccb"), 0, 1));
    CHECK(!alternates(w_from("aabccb"), 2, 1));  // restriction bccb
    CHECK(alternates(w_from("acbacb"), 0, 2));   // restriction acac
    CHECK_THROWS_AS(alternates(w_from("ab"), 1, 1), std::invalid_argument);

    SUBCASE("restriction drawn from the 3-uniform trace") {
        // C = {1,2,3} labelled in order, one co-interval vertex a with
        // N(a) = {1,3}; the construction yields 1a2312a31a23, and a against 2
        // reads a22aa2
        Word w = w_from("1a2312a31a23");
        Word pat = restrict_to(w, {0, 12});
        CHECK(pat == w_from("a22aa2"));
        CHECK(!alternates(w, 0, 12));
        CHECK(alternates(w, 0, 11));  // a and 1 do alternate
    }
    SUBCASE("empty and single-letter restrictions alternate vacuously") {
        CHECK(alternates(w_from("ccc"), 0, 1));
        CHECK(alternates(w_from("cacc"), 0, 1));
    }
    SUBCASE("symmetric in the two letters and stable under reversal") {
        std::mt19937 rng(7);
        for (int i = 0; i < 100; ++i) {
            Word w = random_word(rng, 4, 10);
            CHECK(alternates(w, 0, 1) == alternates(w, 1, 0));
            CHECK(alternates(w, 0, 1) == alternates(reversed(w), 0, 1));
            CHECK(alternates(w, 2, 3) == alternates(reversed(w), 3, 2));
        }
    }
}

TEST_CASE("uniformity") {
    CHECK(is_k_uniform(w_from("abab"), 2));
    CHECK(is_k_uniform(w_from("aabccb"), 2));
    CHECK(!is_k_uniform(w_from("abb"), 1));
    CHECK(is_k_uniform(Word{}, 3));  // no letters, vacuously uniform
    CHECK_THROWS_AS(is_k_uniform(w_from("ab"), 0), std::invalid_argument);
}

TEST_CASE("reversal") {
    CHECK(reversed(w_from("abc")) == w_from("cba"));
    CHECK(reversed(Word{}) == Word{});
    std::mt19937 rng(8);
    for (int i = 0; i < 50; ++i) {
        Word w = random_word(rng, 5, 9);
        CHECK(reversed(reversed(w)) == w);
    }
}

TEST_CASE("subword relation") {
    CHECK(is_subword(w_from("aabccb"), w_from("acabbccb")));
    CHECK(is_subword(Word{}, w_from("abc")));
    CHECK(!is_subword(w_from("ba"), w_from("aab")));
}

TEST_CASE("graph of a word") {
    SUBCASE("pairwise alternation scan") {
        // 121323: 1,2 alternate; 2,3 alternate; 1,3 do not
        Word w(std::vector<int>{0, 1, 0, 2, 1, 2});
        Graph g = graph_of_word(w, 3);
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(1, 2));
        CHECK(!g.has_edge(0, 2));
    }
    SUBCASE("a single permutation gives the complete graph") {
        Word w(std::vector<int>{3, 0, 2, 1});
        CHECK(graph_of_word(w, 4) == complete_graph(4));
    }
    SUBCASE("doubled blocks give the empty graph") {
        Word w(std::vector<int>{0, 0, 1, 1, 2, 2});
        CHECK(graph_of_word(w, 3) == make_graph(3, {}));
    }
    SUBCASE("alphabet must be exactly the vertex set") {
        CHECK_THROWS_AS(graph_of_word(w_from("aab"), 3), std::invalid_argument);
        CHECK_THROWS_AS(graph_of_word(w_from("abcd"), 3), std::invalid_argument);
    }
}

TEST_CASE("word represents graph") {
    CHECK(represents(Word(std::vector<int>{0, 1, 0, 1}), complete_graph(2)));
    CHECK(!represents(Word(std::vector<int>{0, 0, 1, 1}), complete_graph(2)));

    SUBCASE("trace output for a tiny split graph") {
        // C = {1,2} labelled in order, one interval vertex a with N(a) = {1}:
        // the construction yields a12a1a212
        Graph g = make_graph(3, {{0, 1}, {0, 2}});  // 1=0, 2=1, a=2
        Word w(std::vector<int>{2, 0, 1, 2, 0, 2, 1, 0, 1});
        CHECK(represents(w, g));
        CHECK(is_k_uniform(w, 3));
    }
}
