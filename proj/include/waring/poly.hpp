/*
   Copyright 2026 The waringff Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef WARING_POLY_HPP
#define WARING_POLY_HPP

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace waring {

/// Polynomials over F_q in the variable t.  Coefficients are stored low degree
/// first with no trailing zeros, so the zero polynomial has an empty vector.
struct Poly {
    std::vector<felem> c;

    Poly() = default;
    explicit Poly(std::vector<felem> cc) : c(std::move(cc)) { trim(); }

    static Poly zero() { return Poly{}; }
    static Poly constant(felem a) { return a ? Poly{{a}} : Poly{}; }
    static Poly monomial(felem a, int d) {
        if (!a) return Poly{};
        Poly r;
        r.c.assign(d + 1, 0);
        r.c[d] = a;
        return r;
    }

    bool is_zero() const { return c.empty(); }
    /// degree; -1 for the zero polynomial
    int deg() const { return (int)c.size() - 1; }
    felem lead() const { return c.empty() ? 0 : c.back(); }
    felem coeff(int d) const { return (d >= 0 && d < (int)c.size()) ? c[d] : 0; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return c != o.c; }
    bool operator<(const Poly& o) const {  // arbitrary total order for map keys
        if (c.size() != o.c.size()) return c.size() < o.c.size();
        return c < o.c;
    }
};

inline Poly poly_add(const Fq& f, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = f.add(a.coeff((int)i), b.coeff((int)i));
    r.trim();
    return r;
}

inline Poly poly_neg(const Fq& f, const Poly& a) {
    Poly r = a;
    for (felem& x : r.c) x = f.neg(x);
    return r;
}

inline Poly poly_sub(const Fq& f, const Poly& a, const Poly& b) {
    return poly_add(f, a, poly_neg(f, b));
}

inline Poly poly_mul(const Fq& f, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], b.c[j]));
    }
    r.trim();
    return r;
}

inline Poly poly_scale(const Fq& f, felem s, const Poly& a) {
    Poly r = a;
    for (felem& x : r.c) x = f.mul(s, x);
    r.trim();
    return r;
}

inline Poly poly_pow(const Fq& f, Poly a, long long n) {
    Poly r = Poly::constant(1);
    while (n) {
        if (n & 1) r = poly_mul(f, r, a);
        a = poly_mul(f, a, a);
        n >>= 1;
    }
    return r;
}

/// Quotient and remainder with deg rem < deg b; b must be nonzero.
inline std::pair<Poly, Poly> poly_divmod(const Fq& f, Poly a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly quo;
    const int db = b.deg();
    const felem li = f.inv(b.lead());
    if (a.deg() >= db) quo.c.assign(a.deg() - db + 1, 0);
    while (a.deg() >= db) {
        int shift = a.deg() - db;
        felem factor = f.mul(a.lead(), li);
        quo.c[shift] = factor;
        for (int i = 0; i <= db; ++i)
            a.c[shift + i] = f.sub(a.c[shift + i], f.mul(factor, b.c[i]));
        a.trim();
    }
    quo.trim();
    return {quo, a};
}

inline Poly poly_mod(const Fq& f, const Poly& a, const Poly& b) {
    return poly_divmod(f, a, b).second;
}

inline Poly make_monic(const Fq& f, const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(f, f.inv(a.lead()), a);
}

/// Monic gcd; gcd(0, 0) = 0.
inline Poly poly_gcd(const Fq& f, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(f, a);
}

inline Poly poly_eval_comp(const Fq& f, const Poly& a, const Poly& x) {
    // composition a(x(t)), by Horner
    Poly r;
    for (int i = a.deg(); i >= 0; --i)
        r = poly_add(f, poly_mul(f, r, x), Poly::constant(a.c[i]));
    return r;
}

inline felem poly_eval(const Fq& f, const Poly& a, felem x) {
    felem r = 0;
    for (int i = a.deg(); i >= 0; --i) r = f.add(f.mul(r, x), a.c[i]);
    return r;
}

/// The i-th polynomial of degree < X in the enumeration order used everywhere
/// in this library: base-q digits of i, t^0 coefficient varying fastest.
inline Poly poly_from_index(const Fq& f, long long idx, int X) {
    std::vector<felem> c(X, 0);
    for (int i = 0; i < X && idx; ++i) {
        c[i] = (felem)(idx % f.q);
        idx /= f.q;
    }
    return Poly(std::move(c));
}

/// Inverse of poly_to_index with no degree cap.
inline Poly poly_of_index(const Fq& f, long long idx) {
    std::vector<felem> c;
    while (idx) {
        c.push_back((felem)(idx % f.q));
        idx /= f.q;
    }
    return Poly(std::move(c));
}

inline long long poly_to_index(const Fq& f, const Poly& a) {
    long long idx = 0;
    for (int i = a.deg(); i >= 0; --i) idx = idx * f.q + a.c[i];
    return idx;
}

inline long long pow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) {
        if (r > (long long)4e18 / b) throw std::overflow_error("integer power overflow");
        r *= b;
    }
    return r;
}

/// Number of polynomials of degree < X, i.e. q^X.
inline long long count_below(const Fq& f, int X) { return pow_ll(f.q, X); }

// ---------------------------------------------------------------------------
// text format: sums of c*t^d terms, e.g. "t^3+2*t+1"; coefficients of
// extension fields print as their element index.
// ---------------------------------------------------------------------------

inline std::string felem_to_string(const Fq& f, felem a) {
    if (f.e == 1) return std::to_string(a);
    std::ostringstream os;
    os << "[";
    std::vector<int> c = f.coords(a);
    for (int i = 0; i < f.e; ++i) os << (i ? "," : "") << c[i];
    os << "]";
    return os.str();
}

inline std::string poly_to_string(const Fq& f, const Poly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = a.deg(); d >= 0; --d) {
        felem cd = a.c[d];
        if (!cd) continue;
        if (!first) os << "+";
        first = false;
        if (d == 0) {
            os << felem_to_string(f, cd);
        } else {
            if (cd != 1) os << felem_to_string(f, cd) << "*";
            os << "t";
            if (d != 1) os << "^" << d;
        }
    }
    return os.str();
}

inline Poly poly_parse(const Fq& f, const std::string& s) {
    Poly r;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
    skip_ws();
    if (i >= s.size()) throw std::invalid_argument("empty polynomial literal");
    bool expect_term = true;
    int sign = 1;
    while (i < s.size()) {
        skip_ws();
        if (i >= s.size()) break;
        if (s[i] == '+' || s[i] == '-') {
            if (expect_term && s[i] == '+') throw std::invalid_argument("dangling sign in polynomial literal");
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
            expect_term = true;
            continue;
        }
        // one term: [coeff][*][t[^d]], coeff either decimal (element index for
        // prime fields) or a bracketed power-basis coordinate list
        long long coeff = -1;
        int d = 0;
        if (s[i] == '[') {
            ++i;
            std::vector<int> coords;
            while (true) {
                skip_ws();
                if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
                    throw std::invalid_argument("bad coordinate list in polynomial literal");
                int v = 0;
                while (i < s.size() && std::isdigit((unsigned char)s[i]))
                    v = v * 10 + (s[i++] - '0');
                coords.push_back(v);
                skip_ws();
                if (i < s.size() && s[i] == ',') { ++i; continue; }
                break;
            }
            if (i >= s.size() || s[i] != ']')
                throw std::invalid_argument("unterminated coordinate list in polynomial literal");
            ++i;
            if ((int)coords.size() > f.e)
                throw std::invalid_argument("coordinate list longer than extension degree");
            coords.resize(f.e, 0);
            coeff = f.from_coords(coords);
            skip_ws();
            if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
        } else if (std::isdigit((unsigned char)s[i])) {
            coeff = 0;
            while (i < s.size() && std::isdigit((unsigned char)s[i]))
                coeff = coeff * 10 + (s[i++] - '0');
            skip_ws();
            if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
        }
        if (i < s.size() && s[i] == 't') {
            ++i;
            d = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip_ws();
                if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
                    throw std::invalid_argument("missing exponent in polynomial literal");
                d = 0;
                while (i < s.size() && std::isdigit((unsigned char)s[i]))
                    d = d * 10 + (s[i++] - '0');
            }
            if (coeff < 0) coeff = 1;
        } else if (coeff < 0) {
            throw std::invalid_argument("unexpected character in polynomial literal: '" +
                                        std::string(1, s[i]) + "'");
        }
        felem ce = (felem)(coeff % f.q);
        // a leading '-' negates; meaningful only for prime-field coefficients
        if (sign < 0) ce = f.neg(ce);
        sign = 1;
        r = poly_add(f, r, Poly::monomial(ce, d));
        expect_term = false;
    }
    if (expect_term) throw std::invalid_argument("dangling sign in polynomial literal");
    return r;
}

}  // namespace waring

#endif  // WARING_POLY_HPP
