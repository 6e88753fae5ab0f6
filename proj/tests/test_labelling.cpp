#include <doctest.h>

#include "splitword/families.hpp"
#include "splitword/labelling.hpp"
#include "test_support.hpp"

using namespace splitword;
using namespace testsupport;

namespace {

// clique c1..ck as ids 0..k-1, independents appended with the given
// neighborhoods (indices into the clique)
struct Fixture {
    Graph g;
    SplitPartition p;
};

Fixture split_fixture(int k, const std::vector<std::vector<int>>& neighborhoods) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    SplitPartition p;
    for (int u = 0; u < k; ++u) p.clique.push_back(u);
    int next = k;
    for (const auto& nb : neighborhoods) {
        for (int c : nb) edges.emplace_back(c, next);
        p.independent.push_back(next++);
    }
    return {Graph::from_edges(next, edges), p};
}

Labelling identity_labelling(int k) {
    Labelling lab;
    for (int i = 1; i <= k; ++i) lab.labels.push_back(i);
    return lab;
}

int vertex_named(const Graph& g, const std::string& name) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.name(v) == name) return v;
    REQUIRE(false);
    return -1;
}

// the labelling from the comparability discussion of F1(5):
// c1 -> 3, c2 -> 4, c3 -> 1, c4 -> 2
Labelling f15_reference_labelling(const FamilyGraph& fam) {
    Labelling lab;
    lab.labels.assign(4, 0);
    const int reference[] = {3, 4, 1, 2};
    for (size_t i = 0; i < fam.partition.clique.size(); ++i) {
        const std::string& nm = fam.graph.name(fam.partition.clique[i]);
        int index = nm[1] - '1';
        lab.labels[i] = reference[index];
    }
    return lab;
}

}  // namespace

TEST_CASE("neighborhood shapes") {
    auto fx = split_fixture(5, {{1, 2, 3}, {0, 3, 4}, {0, 2}});
    Labelling lab = identity_labelling(5);

    NeighborhoodShape s1 = shape_of(fx.g, fx.p, lab, 5);
    CHECK(s1.kind == ShapeKind::Interval);
    CHECK(s1.lo == 2);
    CHECK(s1.hi == 4);

    NeighborhoodShape s2 = shape_of(fx.g, fx.p, lab, 6);
    CHECK(s2.kind == ShapeKind::CoInterval);
    CHECK(s2.lo == 1);
    CHECK(s2.hi == 4);

    NeighborhoodShape s3 = shape_of(fx.g, fx.p, lab, 7);
    CHECK(s3.kind == ShapeKind::Invalid);

    SUBCASE("prefixes and suffixes classify as intervals") {
        auto fx2 = split_fixture(4, {{0, 1}, {2, 3}});
        NeighborhoodShape pre = shape_of(fx2.g, fx2.p, identity_labelling(4), 4);
        CHECK(pre.kind == ShapeKind::Interval);
        CHECK(pre.lo == 1);
        NeighborhoodShape suf = shape_of(fx2.g, fx2.p, identity_labelling(4), 5);
        CHECK(suf.kind == ShapeKind::Interval);
        CHECK(suf.hi == 4);
    }
    SUBCASE("clique vertices and isolated vertices are rejected") {
        CHECK_THROWS_AS(shape_of(fx.g, fx.p, lab, 0), std::invalid_argument);
        auto fx3 = split_fixture(2, {{}});
        CHECK_THROWS_AS(shape_of(fx3.g, fx3.p, identity_labelling(2), 2), std::invalid_argument);
    }
}

TEST_CASE("word-representability conditions") {
    SUBCASE("even 4-sun under the rim-order labelling passes") {
        FamilyGraph fam = generate({Family::EvenSun, 4});
        auto check = check_wr_conditions(fam.graph, fam.partition, identity_labelling(4));
        CHECK(check.ok);
    }
    SUBCASE("the reference labelling of F1(5) passes") {
        FamilyGraph fam = generate({Family::F1, 5});
        auto check = check_wr_conditions(fam.graph, fam.partition, f15_reference_labelling(fam));
        CHECK(check.ok);
    }
    SUBCASE("a gap neighborhood that is no co-interval violates the shape condition") {
        auto fx = split_fixture(4, {{0, 2}});
        auto check = check_wr_conditions(fx.g, fx.p, identity_labelling(4));
        CHECK(!check.ok);
        REQUIRE(check.violation);
        CHECK(check.violation->condition == 1);
        CHECK(check.violation->vertices == std::vector<int>{4});
    }
    SUBCASE("an interval spanning a co-interval gap is reported as a pair violation") {
        // co-interval [1,2] ∪ [5,5] against interval [2,5]: the interval starts
        // inside the prefix and ends inside the suffix
        auto fx = split_fixture(5, {{0, 1, 4}, {1, 2, 3, 4}});
        auto check = check_wr_conditions(fx.g, fx.p, identity_labelling(5));
        CHECK(!check.ok);
        REQUIRE(check.violation);
        CHECK(check.violation->condition == 2);
        CHECK(check.violation->vertices == std::vector<int>{5, 6});
    }
    SUBCASE("an interval clear of the gap is fine") {
        auto fx = split_fixture(4, {{0, 3}, {1, 2}});
        CHECK(check_wr_conditions(fx.g, fx.p, identity_labelling(4)).ok);
    }
    SUBCASE("nested co-intervals are reported") {
        // [1,4] ∪ [6,6] against [1,1] ∪ [4,6]: the first prefix reaches into
        // the second suffix (m = 4, n' = 4)
        auto fx = split_fixture(6, {{0, 1, 2, 3, 5}, {0, 3, 4, 5}});
        auto check = check_wr_conditions(fx.g, fx.p, identity_labelling(6));
        CHECK(!check.ok);
        REQUIRE(check.violation);
        CHECK(check.violation->condition == 3);
    }
}

TEST_CASE("comparability conditions") {
    SUBCASE("the reference labelling of F1(5) satisfies the stricter conditions") {
        FamilyGraph fam = generate({Family::F1, 5});
        Labelling lab = f15_reference_labelling(fam);
        auto check = check_comparability_conditions(fam.graph, fam.partition, lab);
        CHECK(check.ok);

        // shapes pinned: N(a1)=[3,4], N(a2)=[1,1]∪[4,4], N(a3)=[1,2],
        // N(b1)=[1,1]∪[3,4], N(b2)=[1,2]∪[4,4]
        auto shape_for = [&](const char* nm) {
            return shape_of(fam.graph, fam.partition, lab, vertex_named(fam.graph, nm));
        };
        NeighborhoodShape a1 = shape_for("a1");
        CHECK(a1.kind == ShapeKind::Interval);
        CHECK(a1.lo == 3);
        CHECK(a1.hi == 4);
        NeighborhoodShape a2 = shape_for("a2");
        CHECK(a2.kind == ShapeKind::CoInterval);
        CHECK(a2.lo == 1);
        CHECK(a2.hi == 4);
        NeighborhoodShape a3 = shape_for("a3");
        CHECK(a3.kind == ShapeKind::Interval);
        CHECK(a3.lo == 1);
        CHECK(a3.hi == 2);
        NeighborhoodShape b1 = shape_for("b1");
        CHECK(b1.kind == ShapeKind::CoInterval);
        CHECK(b1.lo == 1);
        CHECK(b1.hi == 3);
        NeighborhoodShape b2 = shape_for("b2");
        CHECK(b2.kind == ShapeKind::CoInterval);
        CHECK(b2.lo == 2);
        CHECK(b2.hi == 4);
    }
    SUBCASE("vacuously true without independent vertices") {
        auto fx = split_fixture(2, {});
        CHECK(check_comparability_conditions(fx.g, fx.p, identity_labelling(2)).ok);
    }
    SUBCASE("a strict middle interval violates the shape condition") {
        auto fx = split_fixture(4, {{1, 2}});
        auto check = check_comparability_conditions(fx.g, fx.p, identity_labelling(4));
        CHECK(!check.ok);
        REQUIRE(check.violation);
        CHECK(check.violation->condition == 1);
    }
    SUBCASE("overlapping prefix and suffix violate the separation condition") {
        auto fx = split_fixture(4, {{0, 1, 2}, {1, 2, 3}});
        auto check = check_comparability_conditions(fx.g, fx.p, identity_labelling(4));
        CHECK(!check.ok);
        REQUIRE(check.violation);
        CHECK(check.violation->condition == 2);
    }
}

TEST_CASE("labelling search verdicts on the catalog") {
    CHECK(find_wr_labelling(generate({Family::EvenSun, 4}).graph,
                            generate({Family::EvenSun, 4}).partition)
              .has_value());
    {
        FamilyGraph fam = generate({Family::OddSunCenter, 3});
        CHECK(!find_wr_labelling(fam.graph, fam.partition).has_value());
    }
    {
        FamilyGraph fam = generate({Family::K1JoinTent, 0});
        CHECK(!find_wr_labelling(fam.graph, fam.partition).has_value());
    }
    {
        FamilyGraph fam = generate({Family::F0, 0});
        CHECK(find_comparability_labelling(fam.graph, fam.partition).has_value());
    }
    {
        FamilyGraph fam = generate({Family::EvenSun, 4});
        CHECK(!find_comparability_labelling(fam.graph, fam.partition).has_value());
    }
    {
        FamilyGraph fam = generate({Family::B4, 0});
        CHECK(find_comparability_labelling(fam.graph, fam.partition).has_value());
    }
}

TEST_CASE("search agrees with the exhaustive labelling scan") {
    auto compare_on = [](const Graph& g, const SplitPartition& p) {
        auto found = find_wr_labelling(g, p);
        auto scanned = scan_wr_labellings(g, p);
        CHECK(found.has_value() == scanned.has_value());
        if (found && scanned) {
            CHECK(found->labels == scanned->labels);  // lexicographically least
            CHECK(check_wr_conditions(g, p, *found).ok);
        }
        auto found_comp = find_comparability_labelling(g, p);
        auto scanned_comp = scan_comparability_labellings(g, p);
        CHECK(found_comp.has_value() == scanned_comp.has_value());
        if (found_comp && scanned_comp) CHECK(found_comp->labels == scanned_comp->labels);
    };

    SUBCASE("every enumerated split graph with a small clique side") {
        for (const Graph& g : enumerate_split_graphs(8)) {
            auto p = find_split_partition(g);
            REQUIRE(p);
            if (p->clique.size() > 5) continue;
            compare_on(g, *p);
        }
    }
    SUBCASE("random graphs on nine vertices") {
        RandomSplitGraphs gen(31337);
        int checked = 0;
        while (checked < 120) {
            Graph g = gen.next(9, 9, 5);
            auto p = find_split_partition(g);
            REQUIRE(p);
            if (p->clique.size() > 5) continue;
            ++checked;
            compare_on(g, *p);
        }
    }
}

TEST_CASE("comparability labellings also satisfy the word-representability conditions") {
    RandomSplitGraphs gen(4242);
    int seen = 0;
    while (seen < 60) {
        Graph g = gen.next(2, 9, 6);
        auto p = find_split_partition(g);
        REQUIRE(p);
        auto lab = find_comparability_labelling(g, *p);
        if (!lab) continue;
        ++seen;
        CHECK(check_wr_conditions(g, *p, *lab).ok);
    }
}

TEST_CASE("A/B partition of the independent side") {
    SUBCASE("the F1(5) reference labelling splits into three co-intervals and two intervals") {
        FamilyGraph fam = generate({Family::F1, 5});
        ABPartition ab = ab_partition(fam.graph, fam.partition, f15_reference_labelling(fam));
        std::vector<std::string> a_names, b_names;
        for (const auto& e : ab.a_side) a_names.push_back(fam.graph.name(e.vertex));
        for (const auto& e : ab.b_side) b_names.push_back(fam.graph.name(e.vertex));
        CHECK(a_names == std::vector<std::string>{"b1", "b2", "a2"});
        CHECK(b_names == std::vector<std::string>{"a1", "a3"});
        CHECK(ab.isolated.empty());
    }
    SUBCASE("single interval vertex") {
        auto fx = split_fixture(2, {{0}});
        ABPartition ab = ab_partition(fx.g, fx.p, identity_labelling(2));
        CHECK(ab.a_side.empty());
        REQUIRE(ab.b_side.size() == 1);
        CHECK(ab.b_side[0].l == 1);
        CHECK(ab.b_side[0].r == 1);
    }
    SUBCASE("single co-interval vertex") {
        auto fx = split_fixture(3, {{0, 2}});
        ABPartition ab = ab_partition(fx.g, fx.p, identity_labelling(3));
        CHECK(ab.b_side.empty());
        REQUIRE(ab.a_side.size() == 1);
        CHECK(ab.a_side[0].m == 1);
        CHECK(ab.a_side[0].n == 3);
    }
    SUBCASE("rejected when the conditions fail") {
        auto fx = split_fixture(4, {{0, 2}});
        CHECK_THROWS_AS(ab_partition(fx.g, fx.p, identity_labelling(4)), std::invalid_argument);
    }
    SUBCASE("co-interval prefixes end before the suffixes start, across the whole pool") {
        RandomSplitGraphs gen(777);
        int seen = 0;
        while (seen < 80) {
            Graph g = gen.next(2, 10, 6);
            auto p = find_split_partition(g);
            auto lab = find_wr_labelling(g, *p);
            if (!lab) continue;
            ++seen;
            ABPartition ab = ab_partition(g, *p, *lab);
            if (ab.a_side.empty()) continue;
            int max_m = 0, min_n = 1 << 20;
            for (const auto& e : ab.a_side) {
                max_m = std::max(max_m, e.m);
                min_n = std::min(min_n, e.n);
            }
            CHECK(max_m < min_n);
        }
    }
}
