#ifndef SPLITWORD_FAMILIES_HPP
#define SPLITWORD_FAMILIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitword/graph.hpp"

namespace splitword {

// The named split graphs of the catalogs: the permutation-graph obstructions
// B1..B4 and the circle-graph obstructions (suns, the M graphs, F0, F1, F2).
enum class Family {
    B1,
    B2,
    B3,
    B4,
    OddSunCenter,  // odd k-sun plus a clique center, k >= 3 odd
    K1JoinTent,    // 3-sun (tent) joined with an all-adjacent vertex
    EvenSun,       // even k-sun, k >= 4 even
    M2,            // k >= 4 even
    M3,            // k == 3 or k >= 4 even
    M4,
    M5,
    F0,            // B4 joined with an all-adjacent vertex
    F1,            // k >= 5 odd
    F2,            // k >= 5 odd
};

struct FamilySpec {
    Family family;
    int k = 0;  // 0 for the non-parametric members

    bool operator==(const FamilySpec& other) const = default;
};

std::string family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
bool family_is_parametric(Family f);

// Human-readable label, e.g. "even_sun(6)" or "B4".
std::string spec_label(const FamilySpec& spec);

// Throws std::invalid_argument when k violates the family's parity or bounds.
void validate_spec(const FamilySpec& spec);

// Number of vertices generate(spec) will produce, without building it.
int spec_vertex_count(const FamilySpec& spec);

struct FamilyGraph {
    FamilySpec spec;
    Graph graph;
    SplitPartition partition;  // the canonical clique/independent split
};

// Builds the named graph with paper-style vertex names (c1.., a1.., b1.., c, 0)
// and its canonical split partition.
FamilyGraph generate(const FamilySpec& spec);

// The word-representable circle obstructions: F0, the even k-suns, and the
// F1/F2 chains, every parameter up to max_k. Containing one of these is
// exactly what pushes the representation number of a word-representable split
// graph to three.
std::vector<FamilySpec> c3_members(int max_k);

// B1..B4: the split permutation-graph obstructions.
std::vector<FamilySpec> b_family();

// B1..B3: the split comparability obstructions.
std::vector<FamilySpec> comparability_obstructions();

// Every catalogued circle obstruction with parameters up to max_k.
std::vector<FamilySpec> c_family(int max_k);

// The circle obstructions that are themselves non-word-representable
// (the complement of c3_members within c_family).
std::vector<FamilySpec> c_family_non_c3(int max_k);

}  // namespace splitword

#endif
