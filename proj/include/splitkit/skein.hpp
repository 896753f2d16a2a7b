#pragma once

#include "splitkit/diagram.hpp"
#include "splitkit/laurent.hpp"

#include <optional>

namespace splitkit {

namespace detail {

/// Walks components in index order, each from the smallest arc label, and
/// returns the first crossing whose first encounter is on the under strand.
/// A diagram with no such crossing is descending: every component lies
/// entirely above the later ones, so it is a split union of unknots.
inline std::optional<int> first_descending_violation(const Diagram& d) {
    std::vector<bool> seen(d.crossings().size(), false);
    for (const auto& comp : d.components()) {
        for (ArcId arc : comp) {
            ArcEnd h = d.head_of(arc);
            if (seen[h.crossing]) continue;
            seen[h.crossing] = true;
            if (h.slot == 0) return h.crossing;  // met under first
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Conway polynomial via the skein relation
///   conway(L+) - conway(L-) = z * conway(L0)
/// with conway(unknot) = 1. Recursion resolves the first descending
/// violation into the crossing-switched and smoothed diagrams; fully
/// descending diagrams evaluate to 1 (one component) or 0 (two or more,
/// since a descending diagram is completely split). Any diagram already
/// split into two or more pieces in the plane evaluates to 0 directly.
inline LaurentPoly conway(const Diagram& d) {
    if (d.pieces() >= 2) return LaurentPoly::zero();
    if (d.crossing_count() == 0) return LaurentPoly::one();
    auto violation = detail::first_descending_violation(d);
    if (!violation)
        return d.component_count() == 1 ? LaurentPoly::one()
                                        : LaurentPoly::zero();
    const int c = *violation;
    LaurentPoly switched = conway(crossing_change(d, c));
    LaurentPoly smoothed = conway(smooth(d, c));
    if (smoothed.is_zero()) return switched;
    return switched + smoothed.scaled_by_monomial(d.sign(c), 1);
}

/// One-variable Alexander polynomial as the canonical unit-equivalence
/// representative of conway(d) under z -> t^(1/2) - t^(-1/2).
inline LaurentPoly alexander(const Diagram& d) {
    return conway_to_alexander(conway(d));
}

inline bool is_conway_nonzero(const Diagram& d) { return !conway(d).is_zero(); }

}  // namespace splitkit
