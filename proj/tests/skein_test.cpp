#include "splitkit/skein.hpp"
#include "splitkit/catalog.hpp"
#include "splitkit/moves.hpp"
#include "splitkit/pdparse.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>

using namespace splitkit;

namespace {
LaurentPoly z(const std::string& text) { return parse_poly(text, 'z'); }
}  // namespace

TEST_CASE("conway of the fixtures") {
    CHECK(conway(catalog("unknot")) == z("1"));
    CHECK(conway(catalog("unknot_kink")) == z("1"));
    CHECK(conway(catalog("unlink2")) == LaurentPoly::zero());
    CHECK(conway(catalog("unlink3")) == LaurentPoly::zero());
    CHECK(conway(catalog("hopf+")) == z("z"));
    CHECK(conway(catalog("hopf-")) == z("-z"));
    CHECK(conway(catalog("3_1")) == z("1 + z^2"));
    CHECK(conway(catalog("4_1")) == z("1 - z^2"));
    CHECK(conway(catalog("5_1")) == z("1 + 3*z^2 + z^4"));
    CHECK(conway(catalog("5_2")) == z("1 + 2*z^2"));
    CHECK(conway(catalog("borromean")) == z("z^4"));
    CHECK(conway(catalog("7^2_6")) == z("z^3 + z^5"));
}

TEST_CASE("is_conway_nonzero") {
    CHECK(is_conway_nonzero(catalog("3_1")));
    CHECK(is_conway_nonzero(catalog("borromean")));
    CHECK_FALSE(is_conway_nonzero(catalog("unlink2")));
}

TEST_CASE("alexander of the fixtures") {
    CHECK(alexander(catalog("3_1")) == parse_poly("1 - t + t^2", 't'));
    CHECK(alexander(catalog("unknot")) == parse_poly("1", 't'));
    LaurentPoly cube = parse_poly("-1 + t", 't').pow(3);
    CHECK(eq_up_to_units(alexander(catalog("7^2_6")),
                         cube * alexander(catalog("3_1"))));
}

TEST_CASE("skein identity at every fixture crossing") {
    // conway(positive version) - conway(negative version) = z * conway(smoothed)
    for (const CatalogEntry& e : catalog_entries()) {
        Diagram d = catalog(e.name);
        for (int c = 0; c < d.crossing_count(); ++c) {
            Diagram pos = d.sign(c) > 0 ? d : crossing_change(d, c);
            Diagram neg = d.sign(c) > 0 ? crossing_change(d, c) : d;
            LaurentPoly lhs = conway(pos) - conway(neg);
            LaurentPoly rhs = conway(smooth(d, c));
            if (rhs.is_zero())
                CHECK(lhs == LaurentPoly::zero());
            else
                CHECK(lhs == scale_by_monomial(rhs, 1, 1));
        }
    }
}

TEST_CASE("conway vanishes on disjoint unions") {
    Diagram trefoil = catalog("3_1");
    CHECK(conway(disjoint_union(trefoil, catalog("unknot"))) ==
          LaurentPoly::zero());
    CHECK(conway(disjoint_union(trefoil, trefoil)) == LaurentPoly::zero());
    CHECK(conway(disjoint_union(catalog("hopf+"), catalog("hopf+"))) ==
          LaurentPoly::zero());
}

TEST_CASE("conway is invariant under simplify and relabeling") {
    for (const CatalogEntry& e : catalog_entries()) {
        Diagram d = catalog(e.name);
        CHECK(conway(simplify(d)) == conway(d));
        // relabel arcs by an order-scrambling but deterministic map
        PdCode pd = d.pd();
        std::map<ArcId, ArcId> relabel;
        for (const PdEntry& entry : pd.crossings)
            for (ArcId a : entry.arc)
                if (!relabel.count(a))
                    relabel[a] = 1000 - 7 * a;
        for (PdEntry& entry : pd.crossings)
            for (ArcId& a : entry.arc) a = relabel[a];
        Diagram renamed = Diagram::make(pd);
        CHECK(conway(renamed) == conway(d));
    }
}

TEST_CASE("lowest-degree parity matches component count") {
    for (const CatalogEntry& e : catalog_entries()) {
        Diagram d = catalog(e.name);
        LaurentPoly c = conway(d);
        if (c.is_zero()) continue;
        const int parity = (d.component_count() - 1) % 2;
        for (const auto& [exp, coeff] : c.terms()) CHECK(exp % 2 == parity);
    }
}

TEST_CASE("descending violations drop to zero on layered stacks") {
    // a split union drawn with crossings: two trefoils side by side
    Diagram two = disjoint_union(catalog("3_1"), catalog("3_1"));
    CHECK(conway(two) == LaurentPoly::zero());
    // free loop next to a knot is split as well
    PdCode pd = catalog("3_1").pd();
    pd.free_loops = 1;
    CHECK(conway(Diagram::make(pd)) == LaurentPoly::zero());
}
