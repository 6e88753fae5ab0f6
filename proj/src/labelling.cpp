#include "splitword/labelling.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

namespace splitword {

namespace {

int clique_index(const SplitPartition& p, int vertex) {
    auto it = std::lower_bound(p.clique.begin(), p.clique.end(), vertex);
    if (it == p.clique.end() || *it != vertex) return -1;
    return static_cast<int>(it - p.clique.begin());
}

bool on_independent_side(const SplitPartition& p, int vertex) {
    return std::binary_search(p.independent.begin(), p.independent.end(), vertex);
}

uint64_t label_span(int l, int r) {
    // bitmask of labels l..r (bit j-1 <=> label j)
    uint64_t width = static_cast<uint64_t>(r - l + 1);
    uint64_t bits = (width >= 64) ? ~0ULL : ((1ULL << width) - 1);
    return bits << (l - 1);
}

NeighborhoodShape classify_labels(uint64_t mask, int k) {
    if (mask == 0) return {ShapeKind::Invalid, 0, 0};
    int lo = std::countr_zero(mask) + 1;
    int hi = 64 - std::countl_zero(mask);
    if (mask == label_span(lo, hi)) return {ShapeKind::Interval, lo, hi};
    if (lo == 1 && hi == k) {
        // candidate co-interval: prefix run [1, m], suffix run [n, k]
        int m = std::countr_zero(~mask);
        uint64_t full = (k >= 64) ? ~0ULL : ((1ULL << k) - 1);
        uint64_t missing = ~mask & full;
        int n = (63 - std::countl_zero(missing)) + 2;
        if (mask == (label_span(1, m) | label_span(n, k))) return {ShapeKind::CoInterval, m, n};
    }
    return {ShapeKind::Invalid, 0, 0};
}

uint64_t neighbor_label_mask(const Graph& g, const SplitPartition& p, const Labelling& lab,
                             int a) {
    uint64_t mask = 0;
    for (int u : g.neighbors(a)) {
        int idx = clique_index(p, u);
        if (idx < 0) throw std::invalid_argument("independent vertex with neighbor outside C");
        mask |= 1ULL << (lab.labels[idx] - 1);
    }
    return mask;
}

struct ShapedVertex {
    int vertex;
    NeighborhoodShape shape;
};

std::vector<ShapedVertex> shapes_of_independents(const Graph& g, const SplitPartition& p,
                                                 const Labelling& lab) {
    std::vector<ShapedVertex> out;
    for (int a : p.independent) {
        if (g.degree(a) == 0) continue;
        out.push_back({a, shape_of(g, p, lab, a)});
    }
    return out;
}

ConditionViolation make_violation(int condition, std::vector<int> vertices, std::string msg) {
    return {condition, std::move(vertices), std::move(msg)};
}

}  // namespace

int label_of(const SplitPartition& p, const Labelling& lab, int vertex) {
    int idx = clique_index(p, vertex);
    if (idx < 0) throw std::invalid_argument("vertex not on the clique side");
    return lab.labels[idx];
}

NeighborhoodShape shape_of(const Graph& g, const SplitPartition& p, const Labelling& lab, int a) {
    if (!on_independent_side(p, a))
        throw std::invalid_argument("shape_of expects an independent vertex");
    if (g.degree(a) == 0)
        throw std::invalid_argument("shape_of expects a nonempty neighborhood");
    int k = static_cast<int>(p.clique.size());
    return classify_labels(neighbor_label_mask(g, p, lab, a), k);
}

ConditionCheck check_wr_conditions(const Graph& g, const SplitPartition& p, const Labelling& lab) {
    auto shaped = shapes_of_independents(g, p, lab);
    for (const auto& s : shaped) {
        if (s.shape.kind == ShapeKind::Invalid) {
            std::ostringstream msg;
            msg << "N(" << g.name(s.vertex) << ") is neither an interval nor a co-interval";
            return {false, make_violation(1, {s.vertex}, msg.str())};
        }
    }
    for (const auto& a : shaped) {
        if (a.shape.kind != ShapeKind::CoInterval) continue;
        for (const auto& b : shaped) {
            if (b.shape.kind != ShapeKind::Interval) continue;
            if (b.shape.lo > a.shape.lo || b.shape.hi < a.shape.hi) continue;
            std::ostringstream msg;
            msg << "interval N(" << g.name(b.vertex) << ") spans the gap of co-interval N("
                << g.name(a.vertex) << ")";
            return {false, make_violation(2, {a.vertex, b.vertex}, msg.str())};
        }
    }
    for (size_t i = 0; i < shaped.size(); ++i) {
        if (shaped[i].shape.kind != ShapeKind::CoInterval) continue;
        for (size_t j = i + 1; j < shaped.size(); ++j) {
            if (shaped[j].shape.kind != ShapeKind::CoInterval) continue;
            const auto& a = shaped[i];
            const auto& b = shaped[j];
            if (b.shape.lo < a.shape.hi && a.shape.lo < b.shape.hi) continue;
            std::ostringstream msg;
            msg << "co-intervals N(" << g.name(a.vertex) << ") and N(" << g.name(b.vertex)
                << ") are nested";
            return {false, make_violation(3, {a.vertex, b.vertex}, msg.str())};
        }
    }
    return {};
}

ConditionCheck check_comparability_conditions(const Graph& g, const SplitPartition& p,
                                              const Labelling& lab) {
    const int k = static_cast<int>(p.clique.size());
    auto shaped = shapes_of_independents(g, p, lab);

    auto is_prefix = [&](const NeighborhoodShape& s) {
        return s.kind == ShapeKind::Interval && s.lo == 1 && s.hi < k;
    };
    auto is_suffix = [&](const NeighborhoodShape& s) {
        return s.kind == ShapeKind::Interval && s.lo > 1 && s.hi == k;
    };

    for (const auto& s : shaped) {
        bool legal = s.shape.kind == ShapeKind::CoInterval || is_prefix(s.shape) || is_suffix(s.shape);
        if (!legal) {
            std::ostringstream msg;
            msg << "N(" << g.name(s.vertex) << ") is not a prefix, a suffix, or a co-interval";
            return {false, make_violation(1, {s.vertex}, msg.str())};
        }
    }
    for (const auto& a : shaped) {
        if (!is_prefix(a.shape)) continue;
        for (const auto& b : shaped) {
            if (!is_suffix(b.shape)) continue;
            if (a.shape.hi < b.shape.lo) continue;
            std::ostringstream msg;
            msg << "prefix N(" << g.name(a.vertex) << ") overlaps suffix N(" << g.name(b.vertex)
                << ")";
            return {false, make_violation(2, {a.vertex, b.vertex}, msg.str())};
        }
    }
    for (const auto& a : shaped) {
        if (a.shape.kind != ShapeKind::CoInterval) continue;
        for (const auto& b : shaped) {
            if (is_prefix(b.shape) && b.shape.hi >= a.shape.hi) {
                std::ostringstream msg;
                msg << "prefix N(" << g.name(b.vertex) << ") reaches the upper part of N("
                    << g.name(a.vertex) << ")";
                return {false, make_violation(3, {a.vertex, b.vertex}, msg.str())};
            }
        }
    }
    for (const auto& a : shaped) {
        if (a.shape.kind != ShapeKind::CoInterval) continue;
        for (const auto& b : shaped) {
            if (is_suffix(b.shape) && b.shape.lo <= a.shape.lo) {
                std::ostringstream msg;
                msg << "suffix N(" << g.name(b.vertex) << ") reaches the lower part of N("
                    << g.name(a.vertex) << ")";
                return {false, make_violation(4, {a.vertex, b.vertex}, msg.str())};
            }
        }
    }
    for (size_t i = 0; i < shaped.size(); ++i) {
        if (shaped[i].shape.kind != ShapeKind::CoInterval) continue;
        for (size_t j = i + 1; j < shaped.size(); ++j) {
            if (shaped[j].shape.kind != ShapeKind::CoInterval) continue;
            const auto& a = shaped[i];
            const auto& b = shaped[j];
            if (a.shape.lo < b.shape.hi && b.shape.lo < a.shape.hi) continue;
            std::ostringstream msg;
            msg << "co-intervals N(" << g.name(a.vertex) << ") and N(" << g.name(b.vertex)
                << ") are nested";
            return {false, make_violation(5, {a.vertex, b.vertex}, msg.str())};
        }
    }
    return {};
}

namespace {

enum class LabellingGoal { WordRepresentable, Comparability };

// Candidate final shapes for one neighborhood, as label bitmasks.
std::vector<uint64_t> shape_masks(int k, LabellingGoal goal) {
    std::vector<uint64_t> masks;
    for (int l = 1; l <= k; ++l)
        for (int r = l; r <= k; ++r) {
            bool legal = goal == LabellingGoal::WordRepresentable
                             ? true
                             : ((l == 1 && r < k) || (l > 1 && r == k));
            if (legal) masks.push_back(label_span(l, r));
        }
    for (int m = 1; m + 2 <= k; ++m)
        for (int n = m + 2; n <= k; ++n)
            masks.push_back(label_span(1, m) | label_span(n, k));
    return masks;
}

struct LabellingSearch {
    const Graph& g;
    const SplitPartition& p;
    LabellingGoal goal;
    int k;
    std::vector<uint64_t> candidate_shapes;

    struct Independent {
        std::vector<int> clique_indices;  // neighbors as positions in p.clique
    };
    std::vector<Independent> independents;

    std::vector<int> assigned;   // clique index -> label (0 = unassigned)
    uint64_t used_labels = 0;

    LabellingSearch(const Graph& g_, const SplitPartition& p_, LabellingGoal goal_)
        : g(g_), p(p_), goal(goal_), k(static_cast<int>(p_.clique.size())) {
        for (int a : p.independent) {
            if (g.degree(a) == 0) continue;
            Independent ind;
            for (int u : g.neighbors(a)) {
                int idx = clique_index(p, u);
                if (idx < 0) throw std::invalid_argument("independent vertex with neighbor outside C");
                ind.clique_indices.push_back(idx);
            }
            independents.push_back(std::move(ind));
        }
        if (!independents.empty()) {
            if (k > 60) throw std::invalid_argument("clique too large for labelling search");
            candidate_shapes = shape_masks(k, goal);
        }
        assigned.assign(k, 0);
    }

    // no constrained neighborhoods: every condition is vacuous
    std::optional<Labelling> trivial() const {
        if (!independents.empty()) return std::nullopt;
        Labelling lab;
        for (int i = 1; i <= k; ++i) lab.labels.push_back(i);
        return lab;
    }

    // Distinct neighborhoods receive distinct label sets, and a degree-d
    // neighborhood has only so many legal final shapes: k of them under the
    // word-representability conditions (d+1 under the comparability ones, a
    // prefix, a suffix and d-1 co-intervals). More distinct degree-d
    // neighborhoods than that means no labelling exists at all.
    bool shape_capacity_exceeded() const {
        std::vector<uint64_t> seen;
        seen.reserve(independents.size());
        std::vector<int> distinct_of_degree(k + 1, 0);
        for (const auto& ind : independents) {
            uint64_t mask = 0;
            for (int idx : ind.clique_indices) mask |= 1ULL << idx;
            if (std::find(seen.begin(), seen.end(), mask) != seen.end()) continue;
            seen.push_back(mask);
            ++distinct_of_degree[ind.clique_indices.size()];
        }
        for (int d = 1; d <= k; ++d) {
            long slots;
            if (goal == LabellingGoal::WordRepresentable)
                slots = (d == k) ? 1 : k;
            else
                slots = (d == k) ? 0 : d + 1;
            if (distinct_of_degree[d] > slots) return true;
        }
        return false;
    }

    bool feasible() const {
        uint64_t assigned_mask = used_labels;
        uint64_t free_mask = ~assigned_mask & ((k >= 64) ? ~0ULL : ((1ULL << k) - 1));
        for (const auto& ind : independents) {
            uint64_t known1 = 0;
            int unknown = 0;
            for (int idx : ind.clique_indices) {
                if (assigned[idx])
                    known1 |= 1ULL << (assigned[idx] - 1);
                else
                    ++unknown;
            }
            uint64_t known0 = assigned_mask & ~known1;
            bool any = false;
            for (uint64_t s : candidate_shapes) {
                if ((known1 & ~s) || (known0 & s)) continue;
                if (std::popcount(s & free_mask) != unknown) continue;
                any = true;
                break;
            }
            if (!any) return false;
        }
        return true;
    }

    std::optional<Labelling> run(int idx) {
        if (idx == k) {
            Labelling lab{assigned};
            auto check = goal == LabellingGoal::WordRepresentable
                             ? check_wr_conditions(g, p, lab)
                             : check_comparability_conditions(g, p, lab);
            if (check.ok) return lab;
            return std::nullopt;
        }
        for (int label = 1; label <= k; ++label) {
            uint64_t bit = 1ULL << (label - 1);
            if (used_labels & bit) continue;
            assigned[idx] = label;
            used_labels |= bit;
            if (feasible()) {
                if (auto found = run(idx + 1)) return found;
            }
            assigned[idx] = 0;
            used_labels &= ~bit;
        }
        return std::nullopt;
    }
};

std::optional<Labelling> search_labelling(const Graph& g, const SplitPartition& p,
                                          LabellingGoal goal) {
    LabellingSearch search(g, p, goal);
    if (auto lab = search.trivial()) return lab;
    if (search.shape_capacity_exceeded()) return std::nullopt;
    return search.run(0);
}

}  // namespace

std::optional<Labelling> find_wr_labelling(const Graph& g, const SplitPartition& p) {
    return search_labelling(g, p, LabellingGoal::WordRepresentable);
}

std::optional<Labelling> find_comparability_labelling(const Graph& g, const SplitPartition& p) {
    return search_labelling(g, p, LabellingGoal::Comparability);
}

ABPartition ab_partition(const Graph& g, const SplitPartition& p, const Labelling& lab) {
    auto check = check_wr_conditions(g, p, lab);
    if (!check.ok)
        throw std::invalid_argument("labelling does not satisfy the word-representability conditions: " +
                                    check.violation->message);
    ABPartition ab;
    for (int a : p.independent) {
        if (g.degree(a) == 0) {
            ab.isolated.push_back(a);
            continue;
        }
        NeighborhoodShape s = shape_of(g, p, lab, a);
        if (s.kind == ShapeKind::CoInterval)
            ab.a_side.push_back({a, s.lo, s.hi});
        else
            ab.b_side.push_back({a, s.lo, s.hi});
    }
    return ab;
}

}  // namespace splitword
