#include "splitkit/splitting.hpp"
#include "splitkit/catalog.hpp"
#include "splitkit/moves.hpp"
#include "splitkit/pdparse.hpp"
#include "splitkit/skein.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>

using namespace splitkit;

namespace {
int first_self_crossing(const Diagram& d) {
    for (int c = 0; c < d.crossing_count(); ++c)
        if (d.is_self_crossing(c)) return c;
    return -1;
}
}  // namespace

TEST_CASE("linking matrices of the fixtures") {
    LinkingMatrix hopf = linking_matrix(catalog("hopf+"));
    CHECK(hopf.entries == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    CHECK(hopf.lasso_budget() == 1);

    LinkingMatrix seven = linking_matrix(catalog("7^2_6"));
    CHECK(seven.is_zero());
    CHECK(seven.lasso_budget() == 0);

    CHECK(linking_matrix(catalog("unlink2")).is_zero());
    CHECK(linking_matrix(catalog("borromean")).is_zero());
    CHECK(linking_matrix(catalog("hopf-")).entries ==
          std::vector<std::vector<int>>{{0, -1}, {-1, 0}});
}

TEST_CASE("algebraic complete splittability") {
    CHECK(is_algebraically_completely_splittable(catalog("borromean")));
    CHECK_FALSE(is_algebraically_completely_splittable(catalog("hopf+")));
    CHECK(is_algebraically_completely_splittable(catalog("3_1")));
    CHECK(is_algebraically_completely_splittable(catalog("7^2_6")));
}

TEST_CASE("linking matrix is stable under simplify and self-changes") {
    for (const char* name : {"hopf+", "borromean", "7^2_6"}) {
        Diagram d = catalog(name);
        CHECK(linking_matrix(simplify(d)).entries == linking_matrix(d).entries);
        int self = first_self_crossing(d);
        if (self >= 0)
            CHECK(linking_matrix(crossing_change(d, self)).entries ==
                  linking_matrix(d).entries);
    }
}

TEST_CASE("warp-linking degree") {
    CHECK(warp_linking_degree(catalog("unlink3")) == 0);
    CHECK(warp_linking_degree(disjoint_union(catalog("3_1"), catalog("3_1"))) == 0);
    CHECK(warp_linking_degree(catalog("hopf+")) == 1);
    // 2-crossing hopf: each ordering leaves exactly one violating crossing
    auto m = over_matrix(catalog("hopf+"));
    CHECK(m[0][1] + m[1][0] == 2);
    CHECK(detail::layering_violations(m, {0, 1}) == 1);
    CHECK(detail::layering_violations(m, {1, 0}) == 1);
    // the alternating 6-crossing borromean diagram has cyclic dominance:
    // each ring passes over the next twice, so every ordering leaves one
    // reversed pair with two violations
    CHECK(warp_linking_degree(catalog("borromean")) == 2);
    CHECK(warp_linking_degree(catalog("7^2_6")) == 2);
}

TEST_CASE("warp-linking degree ignores relabeling") {
    for (const char* name : {"hopf+", "borromean", "7^2_6"}) {
        Diagram d = catalog(name);
        PdCode pd = d.pd();
        std::map<ArcId, ArcId> relabel;
        for (const PdEntry& entry : pd.crossings)
            for (ArcId a : entry.arc)
                if (!relabel.count(a)) relabel[a] = 500 - 3 * a;
        for (PdEntry& entry : pd.crossings)
            for (ArcId& a : entry.arc) a = relabel[a];
        CHECK(warp_linking_degree(Diagram::make(pd)) == warp_linking_degree(d));
    }
}

TEST_CASE("layered diagrams have degree zero") {
    // one ring stacked fully over another
    Diagram hopf = catalog("hopf+");
    Diagram layered = crossing_change(hopf, 0);
    CHECK(warp_linking_degree(layered) == 0);
    CHECK(warp_linking_degree(catalog("hopf+")) != 0);
}

TEST_CASE("split lower bounds") {
    CHECK(split_lower(catalog("borromean")).value == 2);
    CHECK(split_lower(catalog("borromean")).rule ==
          BoundRule::ConwayNonzeroLower);
    CHECK(split_lower(catalog("unlink2")).value == 0);
    CHECK(split_lower(catalog("unlink2")).rule == BoundRule::None);
    CHECK(split_lower(catalog("7^2_6")).value == 1);
    CHECK(split_lower(catalog("3_1")).value == 0);
}

TEST_CASE("diagram upper bounds") {
    Bound hopf = split_diagram_upper(catalog("hopf+"), 2);
    CHECK(hopf.value == 1);

    Bound already_split = split_diagram_upper(parse_pd("O;O"), 2);
    CHECK(already_split.value == 0);

    // the lassoed hopf diagram needs two changes either way
    Diagram borr_by_lasso = lasso(catalog("hopf+"), 0).diagram;
    Bound searched = split_diagram_upper(borr_by_lasso, 2);
    CHECK(searched.value == 2);

    Bound budgetless = split_diagram_upper(borr_by_lasso, 0);
    CHECK(budgetless.value == warp_linking_degree(borr_by_lasso));
    CHECK(budgetless.rule == BoundRule::LdUpper);
}

TEST_CASE("sandwich inequality on every fixture") {
    for (const CatalogEntry& e : catalog_entries()) {
        Diagram d = catalog(e.name);
        int lower = split_lower(d).value;
        int upper = split_diagram_upper(d, 3).value;
        int ld = warp_linking_degree(d);
        CHECK(lower <= upper);
        CHECK(upper <= ld);
    }
}

TEST_CASE("diagram bounds pinch the easy fixtures") {
    SplitBounds hopf = diagram_bounds(catalog("hopf+"), 3);
    CHECK(hopf.lower.value == 1);
    CHECK(hopf.upper.value == 1);
    CHECK(hopf.exact);

    SplitBounds borr = diagram_bounds(catalog("borromean"), 3);
    CHECK(borr.lower.value == 2);
    CHECK(borr.upper.value == 2);
    CHECK(borr.exact);

    SplitBounds knot = diagram_bounds(catalog("5_2"), 3);
    CHECK(knot.lower.value == 0);
    CHECK(knot.upper.value == 0);
    CHECK(knot.exact);
}

TEST_CASE("theorem-1 bounds from lasso provenance") {
    // component-lassoings over the trefoil: exact r
    for (int target_r : {1, 2, 3}) {
        TransformLog log = TransformLog::over(catalog("3_1"), "3_1");
        for (int r = 0; r < target_r; ++r)
            log = log.with_component_lasso(first_self_crossing(log.current()));
        SplitBounds base = diagram_bounds(log.base(), 3);
        SplitBounds b = split_bounds_from_log(log, base);
        CHECK(b.lower.value == target_r);
        CHECK(b.upper.value == target_r);
        CHECK(b.exact);
        CHECK(b.lower.rule == BoundRule::TheoremOneLower);
        CHECK(b.upper.rule == BoundRule::TheoremOneUpper);
    }

    // one lassoing over the hopf link: exact 2
    TransformLog hopf_log = TransformLog::over(catalog("hopf+"), "hopf+");
    hopf_log = hopf_log.with_lasso(0);
    SplitBounds hopf_base = diagram_bounds(catalog("hopf+"), 3);
    SplitBounds hb = split_bounds_from_log(hopf_log, hopf_base);
    CHECK(hb.lower.value == 2);
    CHECK(hb.upper.value == 2);
    CHECK(hb.exact);

    // no lassoings over a knot: exact 0
    TransformLog idle = TransformLog::over(catalog("3_1"), "3_1");
    SplitBounds ib = split_bounds_from_log(idle, diagram_bounds(catalog("3_1"), 3));
    CHECK(ib.lower.value == 0);
    CHECK(ib.upper.value == 0);
    CHECK(ib.exact);

    CHECK(ib.render() ==
          "lower=0 (theorem-1-lower) upper=0 (theorem-1-upper) exact=true");
}

TEST_CASE("theorem-1 bounds refuse a conway-zero base") {
    TransformLog log = TransformLog::over(catalog("unlink2"), "unlink2");
    CHECK_THROWS_AS(
        split_bounds_from_log(log, diagram_bounds(catalog("unlink2"), 3)),
        PreconditionError);
}

TEST_CASE("logs with crossing changes widen the bounds honestly") {
    TransformLog log = TransformLog::over(catalog("3_1"), "3_1");
    log = log.with_component_lasso(0);
    log = log.with_change(1);  // not a lassoing: theorem no longer verbatim
    SplitBounds b = split_bounds_from_log(log, diagram_bounds(catalog("3_1"), 3));
    CHECK(b.upper.value == 2);  // one lasso + one change
    CHECK(b.lower.rule != BoundRule::TheoremOneLower);
    CHECK(b.lower.value <= b.upper.value);
}

TEST_CASE("theorem lower bound matches the generic conway bound on lasso-only logs") {
    TransformLog log = TransformLog::over(catalog("hopf+"), "hopf+");
    log = log.with_lasso(0);
    log = log.with_lasso(0);
    SplitBounds b = split_bounds_from_log(log, diagram_bounds(catalog("hopf+"), 3));
    const int r = log.lasso_count(), s = log.base_component_count();
    CHECK(b.lower.value == r + s - 1);
    CHECK(b.lower.value == split_lower(log.current()).value);
}
