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

#ifndef WARING_LAURENT_HPP
#define WARING_LAURENT_HPP

#include <climits>
#include <complex>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "poly.hpp"

namespace waring {

/// Sentinel for the order of the zero element (and for "exact below window").
constexpr int NEG_INF = INT_MIN / 2;

/// A truncated Laurent series in 1/t: the coefficients at exponents
/// depth..top are stored (c[0] at exponent top, decreasing).  Reads above the
/// window return 0, which is always correct; reads below the window throw,
/// because nothing is known there.  depth == NEG_INF marks an exact element:
/// every coefficient below the stored ones is provably zero.
struct Laurent {
    int top = NEG_INF;
    int depth = NEG_INF;
    std::vector<felem> c;  // size top - depth + 1 when depth finite, else top - lowest + 1

    Laurent() = default;  // exact zero

    Laurent(int top_, int depth_, std::vector<felem> cc) : top(top_), depth(depth_), c(std::move(cc)) {
        if (depth == NEG_INF) {
            // exact element: c covers top downward; record how far explicitly
            normalize_exact();
        } else {
            if (top < depth) throw std::invalid_argument("laurent window is empty");
            if ((int)c.size() != top - depth + 1)
                throw std::invalid_argument("laurent coefficient count does not match window");
            normalize_top();
        }
    }

    static Laurent zero() { return Laurent{}; }

    static Laurent from_poly(const Poly& a) {
        if (a.is_zero()) return Laurent{};
        std::vector<felem> cc(a.c.rbegin(), a.c.rend());
        Laurent r;
        r.top = a.deg();
        r.depth = NEG_INF;
        r.c = std::move(cc);
        return r;
    }

    bool is_exact() const { return depth == NEG_INF; }
    bool is_exact_zero() const { return is_exact() && c.empty(); }

    /// lowest exponent actually stored
    int stored_bottom() const { return top - (int)c.size() + 1; }

    felem coeff_at(int exp) const {
        if (is_exact_zero()) return 0;
        if (exp > top) return 0;
        if (exp >= stored_bottom()) return c[top - exp];
        if (is_exact()) return 0;
        if (exp >= depth) return 0;  // window reaches exp but stores trimmed zeros only above
        throw window_error("coefficient at t^" + std::to_string(exp) +
                           " lies below the stored window (depth t^" + std::to_string(depth) + ")");
    }

    /// ord by magnitude convention: the largest exponent with nonzero
    /// coefficient; NEG_INF for zero.  Throws when the window cannot decide.
    int ord() const {
        for (int e = top; e >= stored_bottom(); --e)
            if (c[top - e]) return e;
        if (is_exact()) return NEG_INF;
        throw window_error("ord is not determined by the stored window (all stored coefficients vanish)");
    }

  private:
    void normalize_top() {
        while (!c.empty() && c.front() == 0) {
            c.erase(c.begin());
            --top;
        }
        if (c.empty()) {
            // every stored coefficient vanished: keep a one-slot window at depth
            top = depth;
            c.assign(1, 0);
        }
    }

    void normalize_exact() {
        while (!c.empty() && c.front() == 0) {
            c.erase(c.begin());
            --top;
        }
        while (!c.empty() && c.back() == 0) c.pop_back();
        if (c.empty()) top = NEG_INF;
    }
};

inline Laurent laurent_add(const Fq& f, const Laurent& a, const Laurent& b) {
    if (a.is_exact_zero()) return b;
    if (b.is_exact_zero()) return a;
    int top = std::max(a.top, b.top);
    int depth;
    if (a.is_exact() && b.is_exact())
        depth = NEG_INF;
    else if (a.is_exact())
        depth = b.depth;
    else if (b.is_exact())
        depth = a.depth;
    else
        depth = std::max(a.depth, b.depth);  // the shallower window wins
    int bottom = (depth == NEG_INF) ? std::min(a.stored_bottom(), b.stored_bottom()) : depth;
    std::vector<felem> cc(top - bottom + 1, 0);
    for (int e = top; e >= bottom; --e) cc[top - e] = f.add(a.coeff_at(e), b.coeff_at(e));
    return Laurent(top, depth, std::move(cc));
}

inline Laurent laurent_neg(const Fq& f, const Laurent& a) {
    Laurent r = a;
    for (felem& x : r.c) x = f.neg(x);
    return r;
}

inline Laurent laurent_sub(const Fq& f, const Laurent& a, const Laurent& b) {
    return laurent_add(f, a, laurent_neg(f, b));
}

inline Laurent laurent_scale(const Fq& f, felem s, const Laurent& a) {
    if (s == 0) return Laurent::zero();
    Laurent r = a;
    for (felem& x : r.c) x = f.mul(s, x);
    return r;
}

/// Multiply a Laurent window by a polynomial.  The product coefficient at
/// exponent E sums h_d * a_{E-d}, which is known whenever E - d >= a.depth
/// for every monomial degree d, so the result window reaches a.depth + deg h.
inline Laurent laurent_mul_poly(const Fq& f, const Laurent& a, const Poly& h) {
    if (a.is_exact_zero() || h.is_zero()) return Laurent::zero();
    int top = a.top + h.deg();
    int bottom = a.stored_bottom();  // lowest stored exponent of a
    int depth = a.is_exact() ? NEG_INF : a.depth + h.deg();
    int out_bottom = (depth == NEG_INF) ? bottom : depth;
    std::vector<felem> cc(top - out_bottom + 1, 0);
    for (int d = 0; d <= h.deg(); ++d) {
        felem hd = h.coeff(d);
        if (!hd) continue;
        for (int e = a.top; e >= bottom; --e) {
            int out = e + d;
            if (out < out_bottom) continue;
            cc[top - out] = f.add(cc[top - out], f.mul(hd, a.coeff_at(e)));
        }
    }
    return Laurent(top, depth, std::move(cc));
}

/// residue: the coefficient of t^{-1}
inline felem laurent_res(const Laurent& a) { return a.coeff_at(-1); }

/// fractional part: exponents < 0 (the part inside the unit torus)
inline Laurent laurent_frac(const Laurent& a) {
    if (a.is_exact_zero()) return a;
    int top = std::min(a.top, -1);
    int bottom = a.is_exact() ? std::min(a.stored_bottom(), -1) : a.depth;
    if (a.is_exact() && a.stored_bottom() > -1) return Laurent::zero();
    std::vector<felem> cc(top - bottom + 1, 0);
    for (int e = top; e >= bottom; --e) cc[top - e] = a.coeff_at(e);
    return Laurent(top, a.is_exact() ? NEG_INF : a.depth, std::move(cc));
}

/// integral part: exponents >= 0, as a polynomial
inline Poly laurent_int_part(const Laurent& a) {
    if (a.top < 0) return Poly{};
    std::vector<felem> cc(a.top + 1, 0);
    for (int e = 0; e <= a.top; ++e) cc[e] = a.coeff_at(e);
    return Poly(std::move(cc));
}

/// additive character e(alpha) = e_q(res alpha)
inline std::complex<double> char_e(const Fq& f, const Laurent& a) {
    return f.char_eq(laurent_res(a));
}

/// res(alpha * h) for a polynomial h, reading only the coefficients of alpha
/// at exponents -1 - deg h .. -1.  Central inner loop of every exponential
/// sum here, so it avoids building the product window.
inline felem res_mul_poly(const Fq& f, const Laurent& a, const Poly& h) {
    felem s = 0;
    for (int d = 0; d <= h.deg(); ++d) {
        felem hd = h.coeff(d);
        if (!hd) continue;
        s = f.add(s, f.mul(hd, a.coeff_at(-1 - d)));
    }
    return s;
}

/// Laurent expansion of num/den at infinity, stored down to the requested
/// depth.  When the long division terminates the result is marked exact.
inline Laurent laurent_of_rational(const Fq& f, const Poly& num, const Poly& den, int depth) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) return Laurent::zero();
    const int top = num.deg() - den.deg();
    if (depth > top) depth = top;
    // reversed power-series division in u = 1/t: write num = t^{dn} N(u),
    // den = t^{dd} D(u) with D(0) = lead(den) invertible, and expand N/D.
    const int dn = num.deg(), dd = den.deg();
    std::vector<felem> N(num.c.rbegin(), num.c.rend());
    std::vector<felem> D(den.c.rbegin(), den.c.rend());
    const int terms = top - depth + 1;
    std::vector<felem> out(terms, 0);
    const felem d0inv = f.inv(D[0]);
    std::vector<felem> rem = N;  // running remainder, index = power of u
    rem.resize(std::max((size_t)terms + D.size(), rem.size()), 0);
    bool exact = false;
    for (int i = 0; i < terms; ++i) {
        felem ci = f.mul(rem[i], d0inv);
        out[i] = ci;
        if (ci) {
            for (size_t j = 0; j < D.size(); ++j)
                rem[i + j] = f.sub(rem[i + j], f.mul(ci, D[j]));
        }
        // if the remainder is now completely zero, the expansion terminates
        bool all0 = true;
        for (size_t j = i + 1; j < rem.size(); ++j)
            if (rem[j]) { all0 = false; break; }
        if (all0) {
            exact = true;
            for (int j = i + 1; j < terms; ++j) out[j] = 0;
            break;
        }
    }
    return Laurent(top, exact ? NEG_INF : depth, std::move(out));
}

struct RationalFn {
    Poly num, den;
};

/// Reduce num/den: divide out the gcd and make the denominator monic.
inline RationalFn rational_normalize(const Fq& f, Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) return {Poly{}, Poly::constant(1)};
    Poly g = poly_gcd(f, num, den);
    num = poly_divmod(f, num, g).first;
    den = poly_divmod(f, den, g).first;
    felem li = f.inv(den.lead());
    return {poly_scale(f, li, num), poly_scale(f, li, den)};
}

inline std::string laurent_to_string(const Fq& f, const Laurent& a) {
    (void)f;
    if (a.is_exact_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = a.top; e >= a.stored_bottom(); --e) {
        felem ce = a.coeff_at(e);
        if (!ce) continue;
        if (!first) os << "+";
        first = false;
        if (e == 0) {
            os << ce;
        } else {
            if (ce != 1) os << ce << "*";
            os << "t^" << e;
        }
    }
    if (first) os << "0";
    if (!a.is_exact()) os << "+O(t^" << (a.depth - 1) << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// exact quadrature over the unit torus
// ---------------------------------------------------------------------------

/// Integrate f over the torus by averaging over the q^M points whose
/// coefficients at t^{-1}..t^{-M} range over F_q (zero below).  Exact for any
/// integrand that only depends on those coefficients, by orthogonality.
inline std::complex<double> quadrature_T(const Fq& f, int M,
                                         const std::function<std::complex<double>(const Laurent&)>& fn) {
    const long long total = pow_ll(f.q, M);
    std::complex<double> acc = 0.0;
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<felem> cc(M, 0);  // cc[i] = coefficient at t^{-1-i}
        long long tix = idx;
        for (int i = 0; i < M; ++i) { cc[i] = (felem)(tix % f.q); tix /= f.q; }
        Laurent alpha(-1, NEG_INF, std::move(cc));
        acc += fn(alpha);
    }
    return acc / (double)total;
}

/// Round a quadrature result that must be a (real) integer; loud failure when
/// the numerical residue is out of tolerance.
inline long long quadrature_round_int(std::complex<double> v, double tol = 1e-6) {
    long long n = (long long)std::llround(v.real());
    if (std::abs(v.real() - (double)n) > tol || std::abs(v.imag()) > tol)
        throw std::runtime_error("quadrature result is not an integer within tolerance");
    return n;
}

}  // namespace waring

#endif  // WARING_LAURENT_HPP
