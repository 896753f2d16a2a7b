#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace splitkit {

using Coeff = boost::multiprecision::cpp_int;

/// Exact integer Laurent polynomial in one variable. The variable name
/// (z for Conway, t for Alexander) is supplied at render/parse time, not
/// stored in the value. Zero coefficients are never stored; the zero
/// polynomial is the empty term map.
class LaurentPoly {
public:
    LaurentPoly() = default;

    LaurentPoly(long long constant) {
        if (constant != 0) terms_[0] = constant;
    }

    static LaurentPoly monomial(Coeff coeff, int exponent) {
        LaurentPoly p;
        if (coeff != 0) p.terms_[exponent] = std::move(coeff);
        return p;
    }

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(1); }

    bool is_zero() const { return terms_.empty(); }

    const std::map<int, Coeff>& terms() const { return terms_; }

    Coeff coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    int min_exponent() const {
        require_nonzero("min_exponent");
        return terms_.begin()->first;
    }

    int max_exponent() const {
        require_nonzero("max_exponent");
        return terms_.rbegin()->first;
    }

    const Coeff& leading_coeff() const {
        require_nonzero("leading_coeff");
        return terms_.rbegin()->second;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& p) {
        LaurentPoly r;
        for (const auto& [e, c] : p.terms_) r.terms_[e] = -c;
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    /// Multiply every term by coeff * x^exponent. Rejects coeff = 0 so a
    /// skein multiplier can never silently erase a polynomial.
    LaurentPoly scaled_by_monomial(const Coeff& coeff, int exponent) const {
        if (coeff == 0)
            throw std::invalid_argument("scale_by_monomial: zero coefficient");
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e + exponent] = c * coeff;
        return r;
    }

    LaurentPoly pow(unsigned n) const {
        LaurentPoly r = one();
        for (unsigned i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    /// Ascending-exponent rendering, e.g. "1 + 2*z^2 - z^4".
    std::string to_string(char var) const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Coeff mag = c < 0 ? Coeff(-c) : c;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            if (e == 0) {
                out << mag.str();
            } else {
                if (mag != 1) out << mag.str() << "*";
                out << var;
                if (e != 1) out << "^" << e;
            }
        }
        return out.str();
    }

private:
    void require_nonzero(const char* what) const {
        if (terms_.empty())
            throw std::domain_error(std::string(what) + ": zero polynomial");
    }

    void add_term(int e, const Coeff& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    std::map<int, Coeff> terms_;
};

inline LaurentPoly scale_by_monomial(const LaurentPoly& p, const Coeff& coeff,
                                     int exponent) {
    return p.scaled_by_monomial(coeff, exponent);
}

/// Parses the rendering produced by LaurentPoly::to_string. Whitespace
/// insensitive; accepts forms like "-z^3 - 2*z^5", "1 + z^2", "0".
inline LaurentPoly parse_poly(const std::string& text, char var) {
    LaurentPoly result;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(i) + ": " + msg);
    };
    skip_ws();
    if (i == text.size()) fail("empty input");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size()) {
            if (first) fail("expected a term");
            break;
        }
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            fail("expected '+' or '-' between terms");
        }
        Coeff mag = 1;
        bool saw_digits = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::string digits;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                digits += text[i++];
            mag = Coeff(digits);
            saw_digits = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        int exponent = 0;
        if (i < text.size() && text[i] == var) {
            ++i;
            exponent = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                bool neg = false;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                    neg = text[i] == '-';
                    ++i;
                }
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    fail("expected exponent digits");
                long long e = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    e = e * 10 + (text[i] - '0');
                    if (e > 1000000) fail("exponent out of range");
                    ++i;
                }
                exponent = static_cast<int>(neg ? -e : e);
            }
        } else if (!saw_digits) {
            fail("expected a coefficient or variable");
        }
        if (sign < 0) mag = -mag;
        result = result + LaurentPoly::monomial(mag, exponent);
        first = false;
    }
    return result;
}

/// Canonical representative of the unit-equivalence class (+-t^i multiples):
/// lowest exponent shifted to 0 and leading coefficient made positive.
/// The zero polynomial is its own representative.
inline LaurentPoly unit_normalized(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly shifted = scale_by_monomial(p, 1, -p.min_exponent());
    if (shifted.leading_coeff() < 0) shifted = scale_by_monomial(shifted, -1, 0);
    return shifted;
}

/// True iff a = +-t^i * b for some integer i.
inline bool eq_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
    return unit_normalized(a) == unit_normalized(b);
}

/// Substitutes t^(1/2) - t^(-1/2) for z and unit-normalizes the result.
/// The substitution is evaluated over half-integer exponents (tracked as
/// doubled exponents), so the input must have uniform exponent parity for
/// the shift to land in integer powers of t; anything else is rejected.
inline LaurentPoly conway_to_alexander(const LaurentPoly& conway_poly) {
    if (conway_poly.is_zero()) return conway_poly;
    // half-exponent ring: exponent k here stands for t^(k/2)
    LaurentPoly half;  // s = t^(1/2); exponents count powers of s
    const LaurentPoly s_minus_inv =
        LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(-1, -1);
    for (const auto& [e, c] : conway_poly.terms()) {
        if (e < 0)
            throw std::invalid_argument(
                "conway_to_alexander: negative exponent in Conway polynomial");
        half = half + s_minus_inv.pow(static_cast<unsigned>(e))
                          .scaled_by_monomial(c, 0);
    }
    LaurentPoly shifted = unit_normalized(half);
    LaurentPoly result;
    for (const auto& [e, c] : shifted.terms()) {
        if (e % 2 != 0)
            throw std::invalid_argument(
                "conway_to_alexander: substitution does not land in integer "
                "powers of t (mixed exponent parity)");
        result = result + LaurentPoly::monomial(c, e / 2);
    }
    return result;
}

}  // namespace splitkit
