#pragma once

#include "splitkit/diagram.hpp"
#include "splitkit/errors.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

namespace splitkit {

/// Parses one PD expression:
///   PD   ::= item (';' item)*
///   item ::= 'X[' n ',' n ',' n ',' n ']' | 'O'
/// 'O' is a crossingless free loop. Whitespace insensitive. Errors carry
/// the byte offset of the offending character.
inline PdCode parse_pd_code(const std::string& text) {
    PdCode pd;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        if (i >= text.size() || text[i] != c)
            throw ParseError(i, std::string("expected '") + c + "'");
        ++i;
    };
    auto parse_label = [&]() -> ArcId {
        skip_ws();
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError(i, "expected an arc label");
        long long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1000000000) throw ParseError(i, "arc label out of range");
            ++i;
        }
        if (v < 1) throw ParseError(i, "arc labels start at 1");
        return static_cast<ArcId>(v);
    };

    skip_ws();
    if (i == text.size()) throw ParseError(i, "empty PD expression");
    while (true) {
        skip_ws();
        if (i >= text.size()) throw ParseError(i, "expected 'X[...]' or 'O'");
        if (text[i] == 'O') {
            ++i;
            ++pd.free_loops;
        } else if (text[i] == 'X') {
            ++i;
            skip_ws();
            expect('[');
            PdEntry entry{};
            for (int s = 0; s < 4; ++s) {
                entry.arc[s] = parse_label();
                skip_ws();
                if (s < 3)
                    expect(',');
                else if (i < text.size() && text[i] == ',')
                    throw ParseError(i, "crossing takes exactly four arc labels");
            }
            expect(']');
            pd.crossings.push_back(entry);
        } else {
            throw ParseError(i, "expected 'X[...]' or 'O'");
        }
        skip_ws();
        if (i == text.size()) break;
        expect(';');
    }
    return pd;
}

/// Parses and validates; throws ParseError or ValidationError.
inline Diagram parse_pd(const std::string& text) {
    return Diagram::make(parse_pd_code(text));
}

/// Renders a PD code verbatim, preserving crossing order. Transform logs
/// use this form so crossing ids survive a round trip.
inline std::string render_pd(const PdCode& pd) {
    std::ostringstream out;
    bool first = true;
    for (const PdEntry& e : pd.crossings) {
        if (!first) out << ";";
        out << "X[" << e.arc[0] << "," << e.arc[1] << "," << e.arc[2] << ","
            << e.arc[3] << "]";
        first = false;
    }
    for (int k = 0; k < pd.free_loops; ++k) {
        if (!first) out << ";";
        out << "O";
        first = false;
    }
    return out.str();
}

/// Canonical text: crossings sorted by their smallest arc label (full tuple
/// as tie break), free loops last. Arc labels are preserved, so parsing the
/// output reproduces the same link with the same invariants.
inline std::string serialize_pd(const Diagram& d) {
    PdCode pd = d.pd();
    std::sort(pd.crossings.begin(), pd.crossings.end(),
              [](const PdEntry& a, const PdEntry& b) {
                  ArcId ma = *std::min_element(a.arc.begin(), a.arc.end());
                  ArcId mb = *std::min_element(b.arc.begin(), b.arc.end());
                  if (ma != mb) return ma < mb;
                  return a.arc < b.arc;
              });
    return render_pd(pd);
}

/// Splits file content into PD expressions: one expression per line, '#'
/// starts a comment, blank lines ignored.
inline std::vector<std::string> pd_lines(const std::string& content) {
    std::vector<std::string> lines;
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (!blank) lines.push_back(line);
    }
    return lines;
}

}  // namespace splitkit
