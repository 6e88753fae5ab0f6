#include "splitword/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitword {

std::string family_name(Family f) {
    switch (f) {
        case Family::B1: return "B1";
        case Family::B2: return "B2";
        case Family::B3: return "B3";
        case Family::B4: return "B4";
        case Family::OddSunCenter: return "odd_sun_center";
        case Family::K1JoinTent: return "K1_join_tent";
        case Family::EvenSun: return "even_sun";
        case Family::M2: return "M2";
        case Family::M3: return "M3";
        case Family::M4: return "M4";
        case Family::M5: return "M5";
        case Family::F0: return "F0";
        case Family::F1: return "F1";
        case Family::F2: return "F2";
    }
    throw std::logic_error("unknown family");
}

std::optional<Family> family_from_name(std::string_view name) {
    static const std::pair<std::string_view, Family> table[] = {
        {"B1", Family::B1},
        {"B2", Family::B2},
        {"B3", Family::B3},
        {"B4", Family::B4},
        {"odd_sun_center", Family::OddSunCenter},
        {"K1_join_tent", Family::K1JoinTent},
        {"even_sun", Family::EvenSun},
        {"M2", Family::M2},
        {"M3", Family::M3},
        {"M4", Family::M4},
        {"M5", Family::M5},
        {"F0", Family::F0},
        {"F1", Family::F1},
        {"F2", Family::F2},
    };
    for (auto [n, f] : table)
        if (n == name) return f;
    return std::nullopt;
}

bool family_is_parametric(Family f) {
    switch (f) {
        case Family::OddSunCenter:
        case Family::EvenSun:
        case Family::M2:
        case Family::M3:
        case Family::F1:
        case Family::F2:
            return true;
        default:
            return false;
    }
}

std::string spec_label(const FamilySpec& spec) {
    std::string s = family_name(spec.family);
    if (family_is_parametric(spec.family)) s += "(" + std::to_string(spec.k) + ")";
    return s;
}

void validate_spec(const FamilySpec& spec) {
    const int k = spec.k;
    auto fail = [&](const char* what) {
        throw std::invalid_argument(spec_label(spec) + ": " + what);
    };
    switch (spec.family) {
        case Family::OddSunCenter:
            if (k < 3 || k % 2 == 0) fail("parameter must be odd and at least 3");
            break;
        case Family::EvenSun:
            if (k < 4 || k % 2 != 0) fail("parameter must be even and at least 4");
            break;
        case Family::M2:
            if (k < 4 || k % 2 != 0) fail("parameter must be even and at least 4");
            break;
        case Family::M3:
            if (!(k == 3 || (k >= 4 && k % 2 == 0))) fail("parameter must be 3 or even and at least 4");
            break;
        case Family::F1:
        case Family::F2:
            if (k < 5 || k % 2 == 0) fail("parameter must be odd and at least 5");
            break;
        default:
            if (k != 0) fail("family takes no parameter");
            break;
    }
}

int spec_vertex_count(const FamilySpec& spec) {
    validate_spec(spec);
    const int k = spec.k;
    switch (spec.family) {
        case Family::B1:
        case Family::B2: return 6;
        case Family::B3:
        case Family::B4:
        case Family::K1JoinTent: return 7;
        case Family::OddSunCenter: return 2 * k + 1;
        case Family::EvenSun:
        case Family::M2:
        case Family::F2: return 2 * k;
        case Family::M3: return k == 3 ? 7 : 2 * k + 1;
        case Family::M4: return 10;
        case Family::M5: return 9;
        case Family::F0: return 8;
        case Family::F1: return 2 * k - 1;
    }
    throw std::logic_error("unknown family");
}

namespace {

struct IndependentVertex {
    std::string name;
    std::vector<int> clique_neighbors;  // indices into the clique name list
};

FamilyGraph assemble(const FamilySpec& spec, const std::vector<std::string>& clique,
                     const std::vector<IndependentVertex>& indep) {
    const int kc = static_cast<int>(clique.size());
    std::vector<std::string> names = clique;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < kc; ++i)
        for (int j = i + 1; j < kc; ++j) edges.emplace_back(i, j);
    for (const auto& iv : indep) {
        int id = static_cast<int>(names.size());
        names.push_back(iv.name);
        for (int c : iv.clique_neighbors) edges.emplace_back(c, id);
    }
    FamilyGraph out{spec,
                    Graph::from_edges(static_cast<int>(names.size()), edges, names),
                    {}};
    for (int i = 0; i < kc; ++i) out.partition.clique.push_back(i);
    for (int i = kc; i < static_cast<int>(names.size()); ++i) out.partition.independent.push_back(i);
    return out;
}

std::vector<std::string> clique_names(int k, int from = 1) {
    std::vector<std::string> names;
    for (int i = from; i < from + k; ++i) names.push_back("c" + std::to_string(i));
    return names;
}

}  // namespace

FamilyGraph generate(const FamilySpec& spec) {
    validate_spec(spec);
    const int k = spec.k;
    switch (spec.family) {
        case Family::B1:
            // triangle with one pendant on each corner (the net)
            return assemble(spec, clique_names(3),
                            {{"a1", {0}}, {"a2", {1}}, {"a3", {2}}});
        case Family::B2:
            // 3-sun (tent): triangle, one independent vertex per corner pair
            return assemble(spec, clique_names(3),
                            {{"a1", {0, 1}}, {"a2", {0, 2}}, {"a3", {1, 2}}});
        case Family::B3:
            // triangle with pendants on c1 and c2 plus pair vertices {c1,c3}, {c2,c3}
            return assemble(spec, clique_names(3),
                            {{"a1", {0}}, {"a2", {1}}, {"a3", {0, 2}}, {"a4", {1, 2}}});
        case Family::B4:
            // K4 with pair vertices {c2,c3}, {c3,c4}, {c1,c4}
            return assemble(spec, clique_names(4),
                            {{"a1", {1, 2}}, {"a2", {2, 3}}, {"a3", {0, 3}}});
        case Family::OddSunCenter: {
            // clique {c, c1..ck}, each a_i on consecutive rim pair, none sees c
            std::vector<std::string> clique = {"c"};
            for (const auto& n : clique_names(k)) clique.push_back(n);
            std::vector<IndependentVertex> indep;
            for (int i = 1; i <= k - 1; ++i)
                indep.push_back({"a" + std::to_string(i), {i, i + 1}});
            indep.push_back({"a" + std::to_string(k), {1, k}});
            return assemble(spec, clique, indep);
        }
        case Family::K1JoinTent:
            // tent plus an all-adjacent vertex "0" (inside the clique side)
            return assemble(spec, {"c1", "c2", "c3", "0"},
                            {{"a1", {0, 1, 3}}, {"a2", {0, 2, 3}}, {"a3", {1, 2, 3}}});
        case Family::EvenSun: {
            std::vector<IndependentVertex> indep;
            for (int i = 1; i <= k - 1; ++i)
                indep.push_back({"a" + std::to_string(i), {i - 1, i}});
            indep.push_back({"a" + std::to_string(k), {0, k - 1}});
            return assemble(spec, clique_names(k), indep);
        }
        case Family::M2: {
            // N(b1) = {c1..c(k-2), ck}, N(b2) = {c2..ck}, a_i on consecutive pairs
            std::vector<IndependentVertex> indep;
            IndependentVertex b1{"b1", {}};
            for (int i = 0; i <= k - 3; ++i) b1.clique_neighbors.push_back(i);
            b1.clique_neighbors.push_back(k - 1);
            IndependentVertex b2{"b2", {}};
            for (int i = 1; i <= k - 1; ++i) b2.clique_neighbors.push_back(i);
            indep.push_back(b1);
            indep.push_back(b2);
            for (int i = 1; i <= k - 2; ++i)
                indep.push_back({"a" + std::to_string(i), {i - 1, i}});
            return assemble(spec, clique_names(k), indep);
        }
        case Family::M3: {
            if (k == 3) {
                // the net joined with an all-adjacent vertex "0"
                return assemble(spec, {"c1", "c2", "c3", "0"},
                                {{"a1", {0, 3}}, {"a2", {1, 3}}, {"a3", {2, 3}}});
            }
            // clique c1..c(k+1); N(b) = {c2..c(k-1), c(k+1)}, a_i on consecutive pairs
            std::vector<IndependentVertex> indep;
            IndependentVertex b{"b", {}};
            for (int i = 1; i <= k - 2; ++i) b.clique_neighbors.push_back(i);
            b.clique_neighbors.push_back(k);
            indep.push_back(b);
            for (int i = 1; i <= k - 1; ++i)
                indep.push_back({"a" + std::to_string(i), {i - 1, i}});
            return assemble(spec, clique_names(k + 1), indep);
        }
        case Family::M4:
            return assemble(spec, clique_names(6),
                            {{"a1", {0, 1}}, {"a2", {2, 3}}, {"a3", {4, 5}}, {"a4", {1, 3, 5}}});
        case Family::M5:
            return assemble(spec, clique_names(5),
                            {{"a1", {0, 1}},
                             {"a2", {2, 3}},
                             {"a3", {0, 3, 4}},
                             {"a4", {0, 1, 2, 3}}});
        case Family::F0:
            // B4 joined with an all-adjacent vertex "0" (clique side)
            return assemble(spec, {"c1", "c2", "c3", "c4", "0"},
                            {{"a1", {1, 2, 4}}, {"a2", {2, 3, 4}}, {"a3", {0, 3, 4}}});
        case Family::F1: {
            // clique c1..c(k-1); two long intervals b1, b2 plus the a-chain
            std::vector<IndependentVertex> indep;
            IndependentVertex b1{"b1", {}}, b2{"b2", {}};
            for (int i = 0; i <= k - 3; ++i) b1.clique_neighbors.push_back(i);
            for (int i = 1; i <= k - 2; ++i) b2.clique_neighbors.push_back(i);
            indep.push_back(b1);
            indep.push_back(b2);
            for (int i = 1; i <= k - 2; ++i)
                indep.push_back({"a" + std::to_string(i), {i - 1, i}});
            return assemble(spec, clique_names(k - 1), indep);
        }
        case Family::F2: {
            // clique c1..ck; N(b) = {c2..c(k-1)} plus the a-chain
            std::vector<IndependentVertex> indep;
            IndependentVertex b{"b", {}};
            for (int i = 1; i <= k - 2; ++i) b.clique_neighbors.push_back(i);
            indep.push_back(b);
            for (int i = 1; i <= k - 1; ++i)
                indep.push_back({"a" + std::to_string(i), {i - 1, i}});
            return assemble(spec, clique_names(k), indep);
        }
    }
    throw std::logic_error("unknown family");
}

std::vector<FamilySpec> c3_members(int max_k) {
    if (max_k < 5) throw std::invalid_argument("c3_members needs max_k >= 5");
    std::vector<FamilySpec> out{{Family::F0, 0}};
    for (int k = 4; k <= max_k; k += 2) out.push_back({Family::EvenSun, k});
    for (int k = 5; k <= max_k; k += 2) {
        out.push_back({Family::F1, k});
        out.push_back({Family::F2, k});
    }
    return out;
}

std::vector<FamilySpec> b_family() {
    return {{Family::B1, 0}, {Family::B2, 0}, {Family::B3, 0}, {Family::B4, 0}};
}

std::vector<FamilySpec> comparability_obstructions() {
    return {{Family::B1, 0}, {Family::B2, 0}, {Family::B3, 0}};
}

std::vector<FamilySpec> c_family_non_c3(int max_k) {
    std::vector<FamilySpec> out;
    for (int k = 3; k <= max_k; k += 2) out.push_back({Family::OddSunCenter, k});
    out.push_back({Family::K1JoinTent, 0});
    for (int k = 4; k <= max_k; k += 2) out.push_back({Family::M2, k});
    out.push_back({Family::M3, 3});
    for (int k = 4; k <= max_k; k += 2) out.push_back({Family::M3, k});
    out.push_back({Family::M4, 0});
    out.push_back({Family::M5, 0});
    return out;
}

std::vector<FamilySpec> c_family(int max_k) {
    std::vector<FamilySpec> out = c_family_non_c3(max_k);
    auto c3 = c3_members(std::max(5, max_k));
    out.insert(out.end(), c3.begin(), c3.end());
    return out;
}

}  // namespace splitword
