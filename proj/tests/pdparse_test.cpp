#include "splitkit/pdparse.hpp"
#include "splitkit/catalog.hpp"
#include "splitkit/skein.hpp"
#include "splitkit/splitting.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace splitkit;

TEST_CASE("parse basics") {
    Diagram trefoil = parse_pd("X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]");
    CHECK(trefoil.component_count() == 1);
    CHECK(conway(trefoil) == parse_poly("1 + z^2", 'z'));

    Diagram unlink = parse_pd("O;O");
    CHECK(unlink.component_count() == 2);
    CHECK(unlink.crossing_count() == 0);

    Diagram padded = parse_pd("  X[ 4,1, 3 ,2] ;\tX[1,4,2,3] ");
    CHECK(padded.component_count() == 2);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_pd("X[1,2,3]"), ParseError);
    try {
        parse_pd("X[1,2,3]");
    } catch (const ParseError& e) {
        CHECK(e.position() == 7);  // the ']' where a ',' was required
    }
    CHECK_THROWS_AS(parse_pd(""), ParseError);
    CHECK_THROWS_AS(parse_pd("Y[1,2,3,4]"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,2,3,4,5]"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,2,3,4];"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[0,1,1,0]"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[99999999999,1,2,3]"), ParseError);
    // structurally bad but grammatical input fails validation instead
    CHECK_THROWS_AS(parse_pd("X[1,2,3,4]"), ValidationError);
}

TEST_CASE("serialization is canonical and round-trips") {
    CHECK(serialize_pd(parse_pd("O")) == "O");
    CHECK(serialize_pd(parse_pd("X[2,6,3,5];X[6,4,1,3];X[4,2,5,1]")) ==
          "X[4,2,5,1];X[6,4,1,3];X[2,6,3,5]");
    for (const CatalogEntry& e : catalog_entries()) {
        Diagram d = catalog(e.name);
        Diagram back = parse_pd(serialize_pd(d));
        CHECK(back.component_count() == d.component_count());
        CHECK(conway(back) == conway(d));
        CHECK(linking_matrix(back).entries == linking_matrix(d).entries);
        CHECK(serialize_pd(back) == serialize_pd(d));
    }
}

TEST_CASE("file splitting with comments") {
    auto lines = pd_lines("# a comment\nO;O\n\nX[1,2,2,1] # kink\n");
    REQUIRE(lines.size() == 2);
    CHECK(parse_pd(lines[0]).component_count() == 2);
    CHECK(parse_pd(lines[1]).crossing_count() == 1);
}

TEST_CASE("catalog lookups") {
    CHECK(catalog("hopf+").component_count() == 2);
    CHECK(linking_matrix(catalog("hopf+")).entries[0][1] == 1);
    CHECK(linking_matrix(catalog("7^2_6")).is_zero());
    CHECK(linking_matrix(catalog("borromean")).is_zero());
    try {
        catalog("no_such_link");
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("available:") != std::string::npos);
        CHECK(std::string(e.what()).find("borromean") != std::string::npos);
    }
}

TEST_CASE("catalog self-check validates every entry") {
    CHECK_NOTHROW(catalog_self_check());
}

TEST_CASE("parser totality under fuzzing") {
    std::mt19937 rng(123456);
    const std::string alphabet = "XO[],;0123456789 \t+-abz^";
    std::uniform_int_distribution<int> len(0, 40);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(alphabet.size()) - 1);
    for (int i = 0; i < 2000; ++i) {
        std::string s;
        for (int k = len(rng); k > 0; --k) s += alphabet[pick(rng)];
        try {
            Diagram d = parse_pd(s);
            CHECK(d.component_count() >= 0);
        } catch (const ParseError&) {
        } catch (const ValidationError&) {
        }
    }
    // mutated fixtures: single character edits of real codes
    for (const CatalogEntry& e : catalog_entries()) {
        for (int i = 0; i < 200; ++i) {
            std::string s = e.pd;
            if (s.empty()) continue;
            std::uniform_int_distribution<int> pos(0, static_cast<int>(s.size()) - 1);
            s[pos(rng)] = alphabet[pick(rng)];
            try {
                parse_pd(s);
            } catch (const ParseError&) {
            } catch (const ValidationError&) {
            }
        }
    }
}
