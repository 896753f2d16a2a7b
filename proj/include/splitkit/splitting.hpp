#pragma once

#include "splitkit/diagram.hpp"
#include "splitkit/moves.hpp"
#include "splitkit/skein.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace splitkit {

/// Pairwise linking numbers, indexed by component. Symmetric with zero
/// diagonal; entry (i,j) is half the signed sum of crossings between
/// components i and j.
struct LinkingMatrix {
    std::vector<std::vector<int>> entries;

    int size() const { return static_cast<int>(entries.size()); }

    bool is_zero() const {
        for (const auto& row : entries)
            for (int e : row)
                if (e != 0) return false;
        return true;
    }

    /// Sum of |Link(L_i, L_j)| over component pairs: how many lassoings at
    /// inter-component crossings it takes to kill every linking number.
    int lasso_budget() const {
        int total = 0;
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j) total += std::abs(entries[i][j]);
        return total;
    }

    std::string to_string() const {
        std::ostringstream out;
        out << "[";
        for (int i = 0; i < size(); ++i) {
            if (i) out << ",";
            out << "[";
            for (int j = 0; j < size(); ++j) {
                if (j) out << ",";
                out << entries[i][j];
            }
            out << "]";
        }
        out << "]";
        return out.str();
    }
};

inline LinkingMatrix linking_matrix(const Diagram& d) {
    const int n = d.component_count();
    LinkingMatrix m;
    m.entries.assign(n, std::vector<int>(n, 0));
    for (const Crossing& c : d.crossings()) {
        int under = d.component_of(c.arc[0]);
        int over = d.component_of(c.arc[c.over_in_slot()]);
        if (under == over) continue;
        m.entries[under][over] += c.sign();
        m.entries[over][under] += c.sign();
    }
    for (auto& row : m.entries)
        for (int& e : row) {
            if (e % 2 != 0)
                throw std::logic_error(
                    "linking matrix: odd inter-component sign sum");
            e /= 2;
        }
    return m;
}

inline bool is_algebraically_completely_splittable(const Diagram& d) {
    return linking_matrix(d).is_zero();
}

/// over_matrix[i][j] counts crossings where component i passes over
/// component j; self-crossings are excluded.
inline std::vector<std::vector<int>> over_matrix(const Diagram& d) {
    const int n = d.component_count();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (const Crossing& c : d.crossings()) {
        int under = d.component_of(c.arc[0]);
        int over = d.component_of(c.arc[c.over_in_slot()]);
        if (under != over) ++m[over][under];
    }
    return m;
}

namespace detail {

/// Violations of a layering: crossings where a lower component passes over
/// a higher one. order lists component ids from top layer to bottom.
inline int layering_violations(const std::vector<std::vector<int>>& m,
                               const std::vector<int>& order) {
    int v = 0;
    for (std::size_t hi = 0; hi < order.size(); ++hi)
        for (std::size_t lo = hi + 1; lo < order.size(); ++lo)
            v += m[order[lo]][order[hi]];
    return v;
}

}  // namespace detail

/// Warp-linking degree: the minimal number of non-self crossing changes
/// that make the diagram layered under some component ordering. Orderings
/// are enumerated over the components that share crossings; the
/// enumeration cuts off at 8 such components.
inline int warp_linking_degree(const Diagram& d) {
    auto m = over_matrix(d);
    const int n = static_cast<int>(m.size());
    std::vector<int> active;
    for (int i = 0; i < n; ++i) {
        bool touches = false;
        for (int j = 0; j < n; ++j)
            if (m[i][j] != 0 || m[j][i] != 0) touches = true;
        if (touches) active.push_back(i);
    }
    if (active.empty()) return 0;
    if (active.size() > 8)
        throw PreconditionError(
            "warp-linking degree: more than 8 interacting components");
    std::sort(active.begin(), active.end());
    int best = -1;
    do {
        int v = detail::layering_violations(m, active);
        if (best < 0 || v < best) best = v;
    } while (std::next_permutation(active.begin(), active.end()));
    return best;
}

enum class BoundRule {
    TheoremOneLower,
    ConwayNonzeroLower,
    LdUpper,
    TheoremOneUpper,
    SearchUpper,
    None,
};

inline std::string to_string(BoundRule rule) {
    switch (rule) {
        case BoundRule::TheoremOneLower: return "theorem-1-lower";
        case BoundRule::ConwayNonzeroLower: return "conway-nonzero-lower";
        case BoundRule::LdUpper: return "ld-upper";
        case BoundRule::TheoremOneUpper: return "theorem-1-upper";
        case BoundRule::SearchUpper: return "search-upper";
        default: return "none";
    }
}

struct Bound {
    int value = 0;
    BoundRule rule = BoundRule::None;
};

/// Certified bounds for the complete splitting number, each carrying the
/// rule that produced it.
struct SplitBounds {
    Bound lower;
    Bound upper;
    bool exact = false;

    std::string render() const {
        std::ostringstream out;
        out << "lower=" << lower.value << " (" << to_string(lower.rule) << ")"
            << " upper=" << upper.value << " (" << to_string(upper.rule) << ")"
            << " exact=" << (exact ? "true" : "false");
        return out.str();
    }
};

/// n-1 when the Conway polynomial is nonzero (a link with fewer than n-1
/// changes to complete splitting has vanishing Conway polynomial);
/// otherwise no rule applies and the bound is 0.
inline Bound split_lower(const Diagram& d) {
    if (is_conway_nonzero(d))
        return {d.component_count() - 1, BoundRule::ConwayNonzeroLower};
    return {0, BoundRule::None};
}

namespace detail {

inline bool splits_with_changes(const Diagram& d, const std::vector<int>& subset) {
    Diagram cur = d;
    for (int c : subset) cur = crossing_change(cur, c);
    return warp_linking_degree(simplify(cur)) == 0;
}

template <typename Fn>
inline bool for_each_subset(int n, int k, Fn&& fn) {
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    if (k > n) return false;
    while (true) {
        if (fn(pick)) return true;
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) return false;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace detail

/// Upper bound for split(D): the warp-linking degree, improved by searching
/// crossing-change subsets of size 0..budget. A subset is accepted when the
/// changed diagram, after R1/R2 simplification, is layered under some
/// component ordering (layered diagrams are completely splittable). The
/// certificate is sound but incomplete, which the rule tag records.
inline Bound split_diagram_upper(const Diagram& d, int budget) {
    const int ld = warp_linking_degree(d);
    const int n = d.crossing_count();
    for (int k = 0; k <= budget && k < ld; ++k) {
        bool found = detail::for_each_subset(n, k, [&](const std::vector<int>& pick) {
            return detail::splits_with_changes(d, pick);
        });
        if (found) return {k, BoundRule::SearchUpper};
    }
    return {ld, BoundRule::LdUpper};
}

inline SplitBounds diagram_bounds(const Diagram& d, int budget) {
    SplitBounds b;
    b.lower = split_lower(d);
    b.upper = split_diagram_upper(d, budget);
    if (b.lower.value > b.upper.value)
        throw std::logic_error("split bounds crossed: lower " +
                               std::to_string(b.lower.value) + " > upper " +
                               std::to_string(b.upper.value));
    b.exact = b.lower.value == b.upper.value;
    return b;
}

/// Bounds from lassoing provenance: with r lassoings over an s-component
/// base with nonzero Conway polynomial,
///     r + split(base) >= split(current) >= r + s - 1.
/// The caller supplies certified bounds for the base. A log that also
/// contains plain crossing changes widens both sides: each change moves the
/// splitting number by at most one, so the upper bound grows by the change
/// count and the lower bound falls back to the Conway rule on the current
/// diagram (same value, weaker justification, and only when its Conway
/// polynomial is still nonzero).
inline SplitBounds split_bounds_from_log(const TransformLog& log,
                                         const SplitBounds& base_bounds) {
    if (!is_conway_nonzero(log.base()))
        throw PreconditionError(
            "theorem-1 bounds are inapplicable: the base diagram has zero "
            "Conway polynomial");
    const int r = log.lasso_count();
    const int s = log.base_component_count();
    const int changes = static_cast<int>(log.steps().size()) - r;
    SplitBounds b;
    if (changes == 0) {
        b.lower = {r + s - 1, BoundRule::TheoremOneLower};
    } else if (is_conway_nonzero(log.current())) {
        b.lower = {log.current().component_count() - 1,
                   BoundRule::ConwayNonzeroLower};
    } else {
        b.lower = {0, BoundRule::None};
    }
    b.upper = {r + changes + base_bounds.upper.value, BoundRule::TheoremOneUpper};
    if (b.lower.value > b.upper.value)
        throw std::logic_error("split bounds crossed: lower " +
                               std::to_string(b.lower.value) + " > upper " +
                               std::to_string(b.upper.value));
    b.exact = b.lower.value == b.upper.value;
    return b;
}

}  // namespace splitkit
