#pragma once

#include "splitkit/diagram.hpp"
#include "splitkit/laurent.hpp"
#include "splitkit/pdparse.hpp"
#include "splitkit/skein.hpp"
#include "splitkit/splitting.hpp"

#include <mutex>
#include <string>
#include <vector>

namespace splitkit {

/// Named fixture diagram with its expected invariants. Every entry is
/// re-verified against the computed invariants the first time the catalog
/// is used; a mismatch is a build defect, not a user error.
struct CatalogEntry {
    std::string name;
    std::string pd;
    int components;
    std::string conway;  // z variable, exact
    std::vector<std::vector<int>> linking;
    std::string note;  // cited literature values, reported never computed
};

inline const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"unknot", "O", 1, "1", {{0}}, ""},
        {"unknot_kink", "X[1,2,2,1]", 1, "1", {{0}}, ""},
        {"unlink2", "O;O", 2, "0", {{0, 0}, {0, 0}}, ""},
        {"unlink3", "O;O;O", 3, "0", {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}, ""},
        {"hopf+", "X[4,1,3,2];X[1,4,2,3]", 2, "z", {{0, 1}, {1, 0}}, ""},
        {"hopf-", "X[1,3,2,4];X[4,2,3,1]", 2, "-z", {{0, -1}, {-1, 0}}, ""},
        {"3_1", "X[4,2,5,1];X[6,4,1,3];X[2,6,3,5]", 1, "1 + z^2", {{0}}, ""},
        {"4_1", "X[4,2,5,1];X[8,6,1,5];X[6,3,7,4];X[2,7,3,8]", 1, "1 - z^2",
         {{0}}, ""},
        {"5_1", "X[2,8,3,7];X[4,10,5,9];X[6,2,7,1];X[8,4,9,3];X[10,6,1,5]", 1,
         "1 + 3*z^2 + z^4", {{0}}, ""},
        {"5_2", "X[1,4,2,5];X[3,8,4,9];X[5,10,6,1];X[9,6,10,7];X[7,2,8,3]", 1,
         "1 + 2*z^2", {{0}}, ""},
        {"borromean",
         "X[4,9,1,10];X[8,1,5,2];X[12,5,9,6];X[6,4,7,3];X[10,8,11,7];"
         "X[2,12,3,11]",
         3, "z^4", {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}, ""},
        {"7^2_6",
         "X[7,8,9,10];X[6,4,1,3];X[2,6,3,5];X[11,1,12,7];X[4,13,8,12];"
         "X[13,2,14,9];X[10,14,5,11]",
         2, "z^3 + z^5", {{0, 0}, {0, 0}},
         "u(7^2_6) = 2 (cited value, not computed)"},
    };
    return entries;
}

inline void catalog_self_check() {
    for (const CatalogEntry& entry : catalog_entries()) {
        Diagram d = parse_pd(entry.pd);
        if (d.component_count() != entry.components)
            throw std::logic_error("catalog self-check: " + entry.name +
                                   " has " +
                                   std::to_string(d.component_count()) +
                                   " components, expected " +
                                   std::to_string(entry.components));
        LaurentPoly expected = parse_poly(entry.conway, 'z');
        LaurentPoly got = conway(d);
        if (!(got == expected))
            throw std::logic_error("catalog self-check: conway(" + entry.name +
                                   ") = " + got.to_string('z') +
                                   ", expected " + entry.conway);
        LinkingMatrix lk = linking_matrix(d);
        if (lk.entries != entry.linking)
            throw std::logic_error("catalog self-check: linking matrix of " +
                                   entry.name + " is " + lk.to_string());
    }
}

namespace detail {
inline void ensure_catalog_checked() {
    static std::once_flag flag;
    std::call_once(flag, catalog_self_check);
}
}  // namespace detail

inline std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const CatalogEntry& e : catalog_entries()) names.push_back(e.name);
    return names;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
    detail::ensure_catalog_checked();
    for (const CatalogEntry& e : catalog_entries())
        if (e.name == name) return e;
    std::string available;
    for (const std::string& n : catalog_names()) {
        if (!available.empty()) available += ", ";
        available += n;
    }
    throw PreconditionError("unknown catalog entry '" + name +
                            "'; available: " + available);
}

inline Diagram catalog(const std::string& name) {
    return parse_pd(catalog_entry(name).pd);
}

}  // namespace splitkit
