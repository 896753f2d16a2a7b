#pragma once

#include "splitkit/errors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace splitkit {

using ArcId = int;

/// Raw crossing entry: the four incident arc labels in counterclockwise
/// order starting from the ingoing under-strand (the convention of the
/// standard knot tables).
struct PdEntry {
    std::array<ArcId, 4> arc;
};

/// Raw PD code as parsed from text: crossings plus a count of crossingless
/// unknot components (free loops).
struct PdCode {
    std::vector<PdEntry> crossings;
    int free_loops = 0;
};

/// Slot layout: 0 = under-in, 2 = under-out, 1 and 3 carry the over strand.
/// over_in_at_d records which way the over strand runs; the crossing is
/// positive exactly when the over strand enters at slot 3.
struct Crossing {
    std::array<ArcId, 4> arc;
    bool over_in_at_d = false;

    int sign() const { return over_in_at_d ? +1 : -1; }
    int over_in_slot() const { return over_in_at_d ? 3 : 1; }
    int over_out_slot() const { return over_in_at_d ? 1 : 3; }

    bool ingoing(int slot) const {
        switch (slot) {
            case 0: return true;
            case 2: return false;
            case 1: return !over_in_at_d;
            default: return over_in_at_d;
        }
    }
};

/// One end of an arc: which crossing and slot it attaches to.
struct ArcEnd {
    int crossing = -1;
    int slot = -1;

    friend bool operator==(const ArcEnd& a, const ArcEnd& b) {
        return a.crossing == b.crossing && a.slot == b.slot;
    }
};

namespace detail {

struct Analysis {
    ValidationReport report;
    std::vector<bool> over_in_at_d;
    // arc -> the two (crossing, slot) occurrences
    std::map<ArcId, std::vector<ArcEnd>> occurrences;
    std::map<ArcId, ArcEnd> head;  // ingoing end
    std::map<ArcId, ArcEnd> tail;  // outgoing end
    std::vector<std::vector<ArcId>> components;
    std::map<ArcId, int> component_of;
    std::vector<std::vector<ArcEnd>> faces;
    int crossing_pieces = 0;
};

// In-ness of a slot as an affine form a + b*o over GF(2), where o is the
// crossing's over_in_at_d bit.
inline void slot_form(int slot, int& a, int& b) {
    switch (slot) {
        case 0: a = 1; b = 0; break;
        case 2: a = 0; b = 0; break;
        case 1: a = 1; b = 1; break;
        default: a = 0; b = 1; break;
    }
}

/// hints, when given, carries one entry per crossing: -1 for unknown, else
/// the over_in_at_d bit the caller already knows. Hints only matter for
/// clusters the arc constraints leave free (components that never pass
/// under anything); rewrites use them so an untouched component cannot
/// silently reverse.
inline Analysis analyze(const PdCode& pd, const std::vector<int>* hints = nullptr) {
    Analysis an;
    const int n = static_cast<int>(pd.crossings.size());
    if (pd.free_loops < 0) an.report.problems.push_back("negative free loop count");

    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            ArcId a = pd.crossings[c].arc[s];
            if (a < 1) {
                an.report.problems.push_back("arc label " + std::to_string(a) +
                                             " is not a positive integer");
                return an;
            }
            an.occurrences[a].push_back({c, s});
        }
    bool pairing_ok = true;
    for (const auto& [a, occ] : an.occurrences)
        if (occ.size() != 2) {
            an.report.problems.push_back(
                "arc " + std::to_string(a) + " occurs " +
                std::to_string(occ.size()) + " times (expected exactly 2)");
            pairing_ok = false;
        }
    if (!pairing_ok) return an;

    // Resolve each crossing's over-strand direction. Each arc's two ends
    // must be one ingoing and one outgoing, which yields parity constraints
    // between the over_in_at_d bits.
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (other, parity)
    std::vector<int> unary(n, -1);                         // -1 unset, else 0/1
    bool orient_ok = true;
    auto set_unary = [&](int c, int v, ArcId a) {
        if (unary[c] == -1) {
            unary[c] = v;
        } else if (unary[c] != v) {
            an.report.problems.push_back("orientation conflict at arc " +
                                         std::to_string(a));
            orient_ok = false;
        }
    };
    for (const auto& [a, occ] : an.occurrences) {
        int a1, b1, a2, b2;
        slot_form(occ[0].slot, a1, b1);
        slot_form(occ[1].slot, a2, b2);
        const int rhs = 1 ^ a1 ^ a2;  // need inness sum odd
        if (b1 == 0 && b2 == 0) {
            if (rhs != 0) {
                an.report.problems.push_back(
                    "arc " + std::to_string(a) +
                    " has two ingoing or two outgoing under-ends");
                orient_ok = false;
            }
        } else if (b1 == 1 && b2 == 0) {
            set_unary(occ[0].crossing, rhs, a);
        } else if (b1 == 0 && b2 == 1) {
            set_unary(occ[1].crossing, rhs, a);
        } else if (occ[0].crossing == occ[1].crossing) {
            if (rhs != 0) {
                an.report.problems.push_back("orientation conflict at arc " +
                                             std::to_string(a));
                orient_ok = false;
            }
        } else {
            adj[occ[0].crossing].push_back({occ[1].crossing, rhs});
            adj[occ[1].crossing].push_back({occ[0].crossing, rhs});
        }
    }
    if (!orient_ok) return an;

    std::vector<int> value(n, -1);
    for (int root = 0; root < n; ++root) {
        if (value[root] != -1) continue;
        std::vector<int> cluster;
        std::vector<int> stack{root};
        value[root] = 1;  // tentative; components never forced keep this
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            cluster.push_back(c);
            for (auto [other, parity] : adj[c]) {
                int want = value[c] ^ parity;
                if (value[other] == -1) {
                    value[other] = want;
                    stack.push_back(other);
                } else if (value[other] != want) {
                    an.report.problems.push_back(
                        "orientation conflict in crossing cluster containing "
                        "crossing " +
                        std::to_string(c));
                    return an;
                }
            }
        }
        int flip = -1;
        for (int c : cluster) {
            if (unary[c] == -1) continue;
            int need = value[c] == unary[c] ? 0 : 1;
            if (flip == -1) {
                flip = need;
            } else if (flip != need) {
                an.report.problems.push_back(
                    "orientation conflict in crossing cluster containing "
                    "crossing " +
                    std::to_string(c));
                return an;
            }
        }
        if (flip == -1 && hints != nullptr) {
            std::vector<int> sorted_cluster = cluster;
            std::sort(sorted_cluster.begin(), sorted_cluster.end());
            for (int c : sorted_cluster)
                if ((*hints)[c] != -1) {
                    flip = value[c] == (*hints)[c] ? 0 : 1;
                    break;
                }
        }
        if (flip == 1)
            for (int c : cluster) value[c] ^= 1;
    }
    an.over_in_at_d.resize(n);
    for (int c = 0; c < n; ++c) an.over_in_at_d[c] = value[c] == 1;

    auto crossing_at = [&](int c) {
        Crossing cr;
        cr.arc = pd.crossings[c].arc;
        cr.over_in_at_d = an.over_in_at_d[c];
        return cr;
    };
    for (const auto& [a, occ] : an.occurrences)
        for (const ArcEnd& end : occ) {
            if (crossing_at(end.crossing).ingoing(end.slot))
                an.head[a] = end;
            else
                an.tail[a] = end;
        }

    // Components: follow each arc through the crossing at its head; cycles
    // are indexed by their smallest arc label.
    std::set<ArcId> seen;
    for (const auto& [start, occ] : an.occurrences) {
        if (seen.count(start)) continue;
        std::vector<ArcId> cycle;
        ArcId a = start;
        while (!seen.count(a)) {
            seen.insert(a);
            cycle.push_back(a);
            an.component_of[a] = static_cast<int>(an.components.size());
            ArcEnd h = an.head.at(a);
            Crossing cr = crossing_at(h.crossing);
            int out = h.slot == 0 ? 2 : cr.over_out_slot();
            a = cr.arc[out];
        }
        if (a != start) {
            an.report.problems.push_back(
                "component trace starting at arc " + std::to_string(start) +
                " does not close");
            return an;
        }
        an.components.push_back(std::move(cycle));
    }

    // Faces from the rotation system: darts are arc ends, the face
    // successor is the counterclockwise-next slot after the twin end.
    auto dart_index = [](const ArcEnd& e) { return e.crossing * 4 + e.slot; };
    std::vector<ArcEnd> twin(static_cast<std::size_t>(n) * 4);
    for (const auto& [a, occ] : an.occurrences) {
        twin[dart_index(occ[0])] = occ[1];
        twin[dart_index(occ[1])] = occ[0];
    }
    std::vector<bool> dart_seen(static_cast<std::size_t>(n) * 4, false);
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            if (dart_seen[c * 4 + s]) continue;
            std::vector<ArcEnd> orbit;
            ArcEnd cur{c, s};
            while (!dart_seen[dart_index(cur)]) {
                dart_seen[dart_index(cur)] = true;
                orbit.push_back(cur);
                ArcEnd t = twin[dart_index(cur)];
                cur = ArcEnd{t.crossing, (t.slot + 1) % 4};
            }
            an.faces.push_back(std::move(orbit));
        }

    // Connected pieces of the crossing graph, then the Euler face count
    // check per piece (the planarity certificate).
    std::vector<int> piece(n, -1);
    int pieces = 0;
    for (int root = 0; root < n; ++root) {
        if (piece[root] != -1) continue;
        int id = pieces++;
        std::vector<int> stack{root};
        piece[root] = id;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                ArcId a = pd.crossings[c].arc[s];
                for (const ArcEnd& end : an.occurrences.at(a))
                    if (piece[end.crossing] == -1) {
                        piece[end.crossing] = id;
                        stack.push_back(end.crossing);
                    }
            }
        }
    }
    an.crossing_pieces = pieces;
    std::vector<int> piece_vertices(pieces, 0), piece_faces(pieces, 0);
    for (int c = 0; c < n; ++c) ++piece_vertices[piece[c]];
    for (const auto& orbit : an.faces) ++piece_faces[piece[orbit.front().crossing]];
    for (int p = 0; p < pieces; ++p)
        if (piece_faces[p] != piece_vertices[p] + 2)
            an.report.problems.push_back(
                "planarity face check failed: diagram piece " +
                std::to_string(p) + " has " + std::to_string(piece_faces[p]) +
                " faces for " + std::to_string(piece_vertices[p]) +
                " crossings");
    return an;
}

}  // namespace detail

/// Oriented link diagram: validated PD code with the derived structure
/// (strand directions, components, faces) precomputed. Immutable; all
/// rewrites build new values.
class Diagram {
public:
    static ValidationReport validate(const PdCode& pd) {
        return detail::analyze(pd).report;
    }

    static Diagram make(const PdCode& pd,
                        const std::vector<int>* orientation_hints = nullptr) {
        detail::Analysis an = detail::analyze(pd, orientation_hints);
        if (!an.report.ok()) throw ValidationError(an.report);
        Diagram d;
        d.free_loops_ = pd.free_loops;
        d.crossings_.reserve(pd.crossings.size());
        for (std::size_t c = 0; c < pd.crossings.size(); ++c)
            d.crossings_.push_back(
                Crossing{pd.crossings[c].arc, an.over_in_at_d[c]});
        d.components_ = std::move(an.components);
        d.component_of_ = std::move(an.component_of);
        d.head_ = std::move(an.head);
        d.tail_ = std::move(an.tail);
        d.faces_ = std::move(an.faces);
        d.crossing_pieces_ = an.crossing_pieces;
        return d;
    }

    static Diagram empty() { return make(PdCode{}); }

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int free_loops() const { return free_loops_; }

    /// Arc-carrying components first (ordered by smallest arc label), then
    /// free loops.
    int component_count() const {
        return static_cast<int>(components_.size()) + free_loops_;
    }
    int arc_component_count() const {
        return static_cast<int>(components_.size());
    }

    const std::vector<Crossing>& crossings() const { return crossings_; }

    const Crossing& crossing(int id) const {
        require_crossing(id);
        return crossings_[id];
    }

    int sign(int id) const { return crossing(id).sign(); }

    bool is_self_crossing(int id) const {
        const Crossing& c = crossing(id);
        return component_of(c.arc[0]) == component_of(c.arc[c.over_in_slot()]);
    }

    const std::vector<std::vector<ArcId>>& components() const {
        return components_;
    }

    int component_of(ArcId arc) const {
        auto it = component_of_.find(arc);
        if (it == component_of_.end())
            throw PreconditionError("unknown arc " + std::to_string(arc));
        return it->second;
    }

    ArcEnd head_of(ArcId arc) const { return head_.at(arc); }
    ArcEnd tail_of(ArcId arc) const { return tail_.at(arc); }

    const std::vector<std::vector<ArcEnd>>& faces() const { return faces_; }

    /// Connected pieces of the diagram in the plane, counting each free
    /// loop as its own piece.
    int pieces() const { return crossing_pieces_ + free_loops_; }

    ArcId max_arc() const {
        ArcId m = 0;
        for (const Crossing& c : crossings_)
            for (ArcId a : c.arc) m = std::max(m, a);
        return m;
    }

    PdCode pd() const {
        PdCode code;
        code.free_loops = free_loops_;
        for (const Crossing& c : crossings_) code.crossings.push_back({c.arc});
        return code;
    }

    void require_crossing(int id) const {
        if (id < 0 || id >= crossing_count())
            throw PreconditionError("unknown crossing id " + std::to_string(id));
    }

private:
    Diagram() = default;

    std::vector<Crossing> crossings_;
    int free_loops_ = 0;
    std::vector<std::vector<ArcId>> components_;
    std::map<ArcId, int> component_of_;
    std::map<ArcId, ArcEnd> head_;
    std::map<ArcId, ArcEnd> tail_;
    std::vector<std::vector<ArcEnd>> faces_;
    int crossing_pieces_ = 0;
};

namespace detail {

/// Removes the given crossings and reconnects the strands through them.
/// Each join pair (in_arc, out_arc) states that the strand arriving on
/// in_arc continues as out_arc. Chains of joins collapse to a single arc
/// keeping the label of the surviving ingoing end; closed chains become
/// free loops.
inline PdCode erase_with_joins(const Diagram& d, const std::set<int>& remove,
                               const std::vector<std::pair<ArcId, ArcId>>& joins) {
    std::map<ArcId, ArcId> next;
    std::set<ArcId> range;
    for (const auto& [in, out] : joins) {
        next[in] = out;
        range.insert(out);
    }
    std::map<ArcId, ArcId> relabel;
    std::set<ArcId> visited;
    int new_loops = 0;
    for (const auto& [start, first] : next) {
        if (range.count(start) || visited.count(start)) continue;
        visited.insert(start);
        ArcId cur = first;
        while (next.count(cur)) {
            visited.insert(cur);
            cur = next.at(cur);
        }
        relabel[cur] = start;
    }
    for (const auto& [start, ignored] : next) {
        if (visited.count(start)) continue;
        ArcId cur = start;
        while (!visited.count(cur)) {
            visited.insert(cur);
            cur = next.at(cur);
        }
        ++new_loops;
    }
    PdCode out;
    out.free_loops = d.free_loops() + new_loops;
    for (int c = 0; c < d.crossing_count(); ++c) {
        if (remove.count(c)) continue;
        PdEntry e{d.crossing(c).arc};
        for (ArcId& a : e.arc) {
            auto it = relabel.find(a);
            if (it != relabel.end()) a = it->second;
        }
        out.crossings.push_back(e);
    }
    return out;
}

inline std::vector<std::pair<ArcId, ArcId>> straight_joins(const Crossing& c) {
    return {{c.arc[0], c.arc[2]},
            {c.arc[c.over_in_slot()], c.arc[c.over_out_slot()]}};
}

inline std::vector<int> all_hints(const Diagram& d) {
    std::vector<int> hints;
    for (const Crossing& c : d.crossings()) hints.push_back(c.over_in_at_d);
    return hints;
}

inline std::vector<int> survivor_hints(const Diagram& d,
                                       const std::set<int>& removed) {
    std::vector<int> hints;
    for (int c = 0; c < d.crossing_count(); ++c)
        if (!removed.count(c)) hints.push_back(d.crossing(c).over_in_at_d);
    return hints;
}

}  // namespace detail

/// Swaps over and under strands at one crossing; arcs and orientations are
/// untouched. Applying it twice returns the identical diagram.
inline Diagram crossing_change(const Diagram& d, int id) {
    const Crossing& c = d.crossing(id);
    PdCode pd = d.pd();
    std::array<ArcId, 4> rotated;
    const int from = c.over_in_slot();  // new under-in slot
    for (int s = 0; s < 4; ++s) rotated[s] = c.arc[(from + s) % 4];
    pd.crossings[id].arc = rotated;
    std::vector<int> hints = detail::all_hints(d);
    hints[id] = c.over_in_at_d ? 0 : 1;  // the sign flips
    return Diagram::make(pd, &hints);
}

/// Oriented smoothing: the crossing is removed and ingoing strands are
/// joined to outgoing strands without crossing. Component count changes by
/// exactly one.
inline Diagram smooth(const Diagram& d, int id) {
    const Crossing& c = d.crossing(id);
    std::vector<std::pair<ArcId, ArcId>> joins;
    if (c.over_in_at_d) {
        joins = {{c.arc[0], c.arc[1]}, {c.arc[3], c.arc[2]}};
    } else {
        joins = {{c.arc[0], c.arc[3]}, {c.arc[1], c.arc[2]}};
    }
    std::vector<int> hints = detail::survivor_hints(d, {id});
    return Diagram::make(detail::erase_with_joins(d, {id}, joins), &hints);
}

/// Greedy Reidemeister I / II reduction to a local fixed point. Monogon
/// faces are always removable; bigon faces are removable when one strand
/// runs over at both crossings.
inline Diagram simplify(const Diagram& d) {
    Diagram cur = d;
    while (true) {
        bool reduced = false;
        for (const auto& orbit : cur.faces()) {
            if (orbit.size() == 1) {
                const int c = orbit[0].crossing;
                std::vector<int> hints = detail::survivor_hints(cur, {c});
                cur = Diagram::make(
                    detail::erase_with_joins(cur, {c},
                                             detail::straight_joins(cur.crossing(c))),
                    &hints);
                reduced = true;
                break;
            }
            if (orbit.size() == 2) {
                const int c1 = orbit[0].crossing, c2 = orbit[1].crossing;
                if (c1 == c2) continue;
                ArcId x = cur.crossing(c1).arc[orbit[0].slot];
                ArcId y = cur.crossing(c2).arc[orbit[1].slot];
                if (x == y) continue;
                auto over_at_both = [&](ArcId a) {
                    ArcEnd h = cur.head_of(a), t = cur.tail_of(a);
                    return (h.slot == 1 || h.slot == 3) &&
                           (t.slot == 1 || t.slot == 3);
                };
                auto under_at_both = [&](ArcId a) {
                    ArcEnd h = cur.head_of(a), t = cur.tail_of(a);
                    return (h.slot == 0 || h.slot == 2) &&
                           (t.slot == 0 || t.slot == 2);
                };
                if (!((over_at_both(x) && under_at_both(y)) ||
                      (over_at_both(y) && under_at_both(x))))
                    continue;
                auto joins = detail::straight_joins(cur.crossing(c1));
                auto j2 = detail::straight_joins(cur.crossing(c2));
                joins.insert(joins.end(), j2.begin(), j2.end());
                std::vector<int> hints = detail::survivor_hints(cur, {c1, c2});
                cur = Diagram::make(detail::erase_with_joins(cur, {c1, c2}, joins),
                                    &hints);
                reduced = true;
                break;
            }
        }
        if (!reduced) return cur;
    }
}

/// Side-by-side union with the second diagram's arcs relabeled above the
/// first diagram's labels.
inline Diagram disjoint_union(const Diagram& a, const Diagram& b) {
    PdCode pd = a.pd();
    const ArcId offset = a.max_arc();
    for (const Crossing& c : b.crossings()) {
        PdEntry e{c.arc};
        for (ArcId& arc : e.arc) arc += offset;
        pd.crossings.push_back(e);
    }
    pd.free_loops += b.free_loops();
    std::vector<int> hints = detail::all_hints(a);
    std::vector<int> hints_b = detail::all_hints(b);
    hints.insert(hints.end(), hints_b.begin(), hints_b.end());
    return Diagram::make(pd, &hints);
}

}  // namespace splitkit
