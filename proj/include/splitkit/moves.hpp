#pragma once

#include "splitkit/diagram.hpp"
#include "splitkit/errors.hpp"
#include "splitkit/pdparse.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace splitkit {

struct LassoResult {
    Diagram diagram;
    int created_component;
};

/// Lassoing at a crossing: the crossing is changed, then a small loop is
/// inserted around it, crossing each of the four emanating strand ends once
/// with over/under alternating around the loop. The loop runs under the
/// changed crossing's under strand and over its over strand; the opposite
/// phase would let the loop lift off, producing a split component. The loop
/// is oriented counterclockwise and picks up fresh arc labels (four inner
/// stubs, then four loop arcs), so replays are label-identical.
inline LassoResult lasso(const Diagram& d, int id) {
    d.require_crossing(id);
    Diagram changed = crossing_change(d, id);
    const Crossing central = changed.crossing(id);
    const ArcId top = changed.max_arc();
    std::array<ArcId, 4> inner, loop;
    for (int i = 0; i < 4; ++i) {
        inner[i] = top + 1 + i;
        loop[i] = top + 5 + i;
    }
    PdCode pd = changed.pd();
    pd.crossings[id].arc = inner;
    std::vector<int> hints;
    for (const Crossing& c : changed.crossings()) hints.push_back(c.over_in_at_d);
    for (int i = 0; i < 4; ++i) {
        const ArcId q = central.arc[i];
        const ArcId loop_in = loop[i];
        const ArcId loop_out = loop[(i + 1) % 4];
        PdEntry e{};
        int flag;
        if (i == 0 || i == 2) {
            // under-strand ends: loop passes under
            e.arc = {loop_in, q, loop_out, inner[i]};
            flag = i == 2;  // negative where the strand flows inward
        } else if (i == central.over_in_slot()) {
            // over-strand end flowing toward the crossing: loop passes over
            e.arc = {q, loop_out, inner[i], loop_in};
            flag = 1;
        } else {
            // over-strand end flowing away: loop passes over
            e.arc = {inner[i], loop_in, q, loop_out};
            flag = 0;
        }
        pd.crossings.push_back(e);
        hints.push_back(flag);
    }
    Diagram out = Diagram::make(pd, &hints);
    return {out, out.component_of(loop[0])};
}

/// Lassoing restricted to a self-crossing of one component.
inline LassoResult component_lasso(const Diagram& d, int id) {
    d.require_crossing(id);
    if (!d.is_self_crossing(id))
        throw PreconditionError(
            "component-lasso requires a self-crossing; crossing " +
            std::to_string(id) + " joins two different components");
    return lasso(d, id);
}

enum class MoveKind { Lasso, Change };

struct TransformStep {
    MoveKind kind;
    int crossing;
    int created_component = -1;  // lasso steps only
};

/// Provenance record of lassoings and crossing changes applied to a base
/// diagram. Append-only value; replaying the steps from the base always
/// reproduces the current diagram label-for-label. The lasso step count r
/// and the base component count s feed the splitting bounds.
class TransformLog {
public:
    static TransformLog over(Diagram base, std::string catalog_name = "") {
        TransformLog log;
        log.base_ = std::move(base);
        log.current_ = log.base_;
        log.base_name_ = std::move(catalog_name);
        return log;
    }

    const Diagram& base() const { return *base_; }
    const Diagram& current() const { return *current_; }
    const std::vector<TransformStep>& steps() const { return steps_; }
    const std::string& base_name() const { return base_name_; }

    int base_component_count() const { return base_->component_count(); }

    int lasso_count() const {
        int r = 0;
        for (const TransformStep& s : steps_)
            if (s.kind == MoveKind::Lasso) ++r;
        return r;
    }

    TransformLog with_lasso(int crossing) const {
        LassoResult res = splitkit::lasso(*current_, crossing);
        TransformLog next = *this;
        next.current_ = std::move(res.diagram);
        next.steps_.push_back(
            {MoveKind::Lasso, crossing, res.created_component});
        return next;
    }

    TransformLog with_component_lasso(int crossing) const {
        LassoResult res = splitkit::component_lasso(*current_, crossing);
        TransformLog next = *this;
        next.current_ = std::move(res.diagram);
        next.steps_.push_back(
            {MoveKind::Lasso, crossing, res.created_component});
        return next;
    }

    TransformLog with_change(int crossing) const {
        TransformLog next = *this;
        next.current_ = crossing_change(*current_, crossing);
        next.steps_.push_back({MoveKind::Change, crossing, -1});
        return next;
    }

    /// Anti-lassoing: removes the indexed lasso step (its loop component and
    /// the crossing change at its site) and renumbers later steps. Rejected
    /// when a later step touches one of the four crossings the lasso
    /// created, since the loop is then entangled.
    TransformLog without_lasso_step(int index) const {
        if (index < 0 || index >= static_cast<int>(steps_.size()))
            throw PreconditionError("no transform step with index " +
                                    std::to_string(index));
        if (steps_[index].kind != MoveKind::Lasso)
            throw PreconditionError("anti-lasso: step " + std::to_string(index) +
                                    " is not a lasso step");
        int lassos_before = 0;
        for (int j = 0; j < index; ++j)
            if (steps_[j].kind == MoveKind::Lasso) ++lassos_before;
        const int first_created = base_->crossing_count() + 4 * lassos_before;
        std::vector<TransformStep> kept(steps_.begin(), steps_.begin() + index);
        for (int j = index + 1; j < static_cast<int>(steps_.size()); ++j) {
            int target = steps_[j].crossing;
            if (target >= first_created && target < first_created + 4)
                throw PreconditionError(
                    "anti-lasso: the lasso component of step " +
                    std::to_string(index) + " is entangled by step " +
                    std::to_string(j));
            kept.push_back({steps_[j].kind,
                            target >= first_created + 4 ? target - 4 : target,
                            -1});
        }
        return replayed(*base_, base_name_, kept);
    }

    /// Rebuilds a log by replaying (kind, crossing) steps from a base.
    static TransformLog replayed(const Diagram& base,
                                 const std::string& base_name,
                                 const std::vector<TransformStep>& steps) {
        TransformLog log = over(base, base_name);
        for (const TransformStep& s : steps)
            log = s.kind == MoveKind::Lasso ? log.with_lasso(s.crossing)
                                            : log.with_change(s.crossing);
        return log;
    }

private:
    TransformLog() = default;

    std::optional<Diagram> base_;
    std::optional<Diagram> current_;
    std::string base_name_;
    std::vector<TransformStep> steps_;
};

/// Deterministic reconstruction of the log's current diagram from scratch.
inline Diagram replay(const TransformLog& log) {
    Diagram cur = log.base();
    for (const TransformStep& s : log.steps())
        cur = s.kind == MoveKind::Lasso ? lasso(cur, s.crossing).diagram
                                        : crossing_change(cur, s.crossing);
    return cur;
}

/// Line format: a `base catalog <name>` or `base pd <expr>` header, then
/// one `lasso <crossing>` / `change <crossing>` line per step.
inline std::string serialize_log(const TransformLog& log) {
    std::ostringstream out;
    if (!log.base_name().empty())
        out << "base catalog " << log.base_name() << "\n";
    else
        out << "base pd " << render_pd(log.base().pd()) << "\n";
    for (const TransformStep& s : log.steps())
        out << (s.kind == MoveKind::Lasso ? "lasso " : "change ") << s.crossing
            << "\n";
    return out.str();
}

inline TransformLog parse_log(
    const std::string& text,
    const std::function<Diagram(const std::string&)>& catalog_resolver) {
    std::istringstream in(text);
    std::string line;
    std::size_t offset = 0;
    bool have_base = false;
    Diagram base = Diagram::empty();
    std::string base_name;
    std::vector<TransformStep> steps;
    while (std::getline(in, line)) {
        const std::size_t line_start = offset;
        offset += line.size() + 1;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string word;
        if (!(fields >> word)) continue;
        if (word == "base") {
            if (have_base)
                throw ParseError(line_start, "duplicate base header");
            std::string kind;
            if (!(fields >> kind))
                throw ParseError(line_start, "expected 'catalog' or 'pd'");
            std::string rest;
            std::getline(fields, rest);
            std::size_t s = rest.find_first_not_of(" \t");
            rest = s == std::string::npos ? "" : rest.substr(s);
            if (kind == "catalog") {
                if (rest.empty())
                    throw ParseError(line_start, "expected a catalog name");
                if (!catalog_resolver)
                    throw ParseError(line_start,
                                     "no catalog available to resolve '" +
                                         rest + "'");
                base = catalog_resolver(rest);
                base_name = rest;
            } else if (kind == "pd") {
                base = parse_pd(rest);
            } else {
                throw ParseError(line_start, "expected 'catalog' or 'pd'");
            }
            have_base = true;
        } else if (word == "lasso" || word == "change") {
            if (!have_base)
                throw ParseError(line_start, "step before base header");
            long long id;
            if (!(fields >> id))
                throw ParseError(line_start, "expected a crossing id");
            steps.push_back({word == "lasso" ? MoveKind::Lasso
                                             : MoveKind::Change,
                             static_cast<int>(id), -1});
        } else {
            throw ParseError(line_start, "unknown log line '" + word + "'");
        }
    }
    if (!have_base) throw ParseError(0, "missing base header");
    return TransformLog::replayed(base, base_name, steps);
}

}  // namespace splitkit
