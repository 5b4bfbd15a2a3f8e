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

#ifndef WARING_ARCS_HPP
#define WARING_ARCS_HPP

#include <optional>
#include <random>

#include "expsums.hpp"
#include "rational.hpp"

namespace waring {

struct ArcParams {
    int k;
    int X;
    ArcParams(int k_, int X_) : k(k_), X(X_) {
        if (k < 2 || X < 0) throw std::invalid_argument("need k >= 2 and X >= 0");
    }
    int R() const { return (k - 1) * X; }
};

/// A Farey fraction a/g with g monic, gcd(a, g) = 1 and deg a < deg g;
/// (0, 1) is the center of the arc around the origin.
struct ArcCenter {
    Poly a, g;
};

namespace detail {

/// Continued-fraction convergents h/d of num/den, in order of increasing
/// deg d, each pair coprime with d normalized monic at the end by the caller.
inline std::vector<std::pair<Poly, Poly>> convergents(const Fq& f, Poly num, Poly den) {
    std::vector<std::pair<Poly, Poly>> out;
    Poly h2 = Poly{}, h1 = Poly::constant(1);           // h_{-2}, h_{-1}
    Poly d2 = Poly::constant(1), d1 = Poly{};           // d_{-2}, d_{-1}
    while (!den.is_zero()) {
        auto [quo, rem] = poly_divmod(f, num, den);
        Poly h = poly_add(f, poly_mul(f, quo, h1), h2);
        Poly d = poly_add(f, poly_mul(f, quo, d1), d2);
        out.emplace_back(h, d);
        h2 = std::move(h1); h1 = std::move(h);
        d2 = std::move(d1); d1 = std::move(d);
        num = std::move(den);
        den = std::move(rem);
    }
    if (out.empty()) out.emplace_back(Poly{}, Poly::constant(1));  // num = 0
    return out;
}

inline ArcCenter normalize_center(const Fq& f, const Poly& a, const Poly& g) {
    felem li = f.inv(g.lead());
    return {poly_scale(f, li, a), poly_scale(f, li, g)};
}

/// Express the stored window of alpha as an exact rational num/den.
inline std::pair<Poly, Poly> window_as_rational(const Fq& f, const Laurent& alpha) {
    (void)f;
    if (alpha.is_exact_zero()) return {Poly{}, Poly::constant(1)};
    int bottom = alpha.is_exact() ? alpha.stored_bottom() : alpha.depth;
    if (bottom >= 0) {
        // a plain polynomial
        std::vector<felem> cc(alpha.top + 1, 0);
        for (int e = alpha.top; e >= bottom; --e) cc[e] = alpha.coeff_at(e);
        return {Poly(std::move(cc)), Poly::constant(1)};
    }
    std::vector<felem> cc(alpha.top - bottom + 1, 0);
    for (int e = alpha.top; e >= bottom; --e) cc[e - bottom] = alpha.coeff_at(e);
    return {Poly(std::move(cc)), Poly::monomial(1, -bottom)};
}

}  // namespace detail

/// Check the defining inequality ord(g*alpha - a) < -R using only window
/// coefficients at exponents >= -R.  Throws when the window is too shallow to
/// read them all.
inline bool center_certificate(const Fq& f, const Laurent& alpha, const ArcCenter& c, int R) {
    Laurent diff = laurent_sub(f, laurent_mul_poly(f, alpha, c.g), Laurent::from_poly(c.a));
    int top = std::max(diff.top, 0);
    for (int e = top; e >= -R; --e)
        if (diff.coeff_at(e)) return false;
    return true;
}

/// Best rational approximation with ord g <= R, by the Euclidean algorithm on
/// the continued fraction of alpha.  The result satisfies ord(g*alpha - a) < -R.
inline ArcCenter dirichlet_approx(const Fq& f, const Laurent& alpha, int R) {
    if (R < 0) throw std::invalid_argument("dirichlet_approx: R must be >= 0");
    if (!alpha.is_exact() && alpha.depth > -2 * R - 1)
        throw window_error("dirichlet_approx: window must reach t^" + std::to_string(-2 * R - 1));
    for (int e = alpha.top; e >= 0; --e)
        if (alpha.coeff_at(e))
            throw std::invalid_argument("dirichlet_approx: input must lie in the unit torus");
    auto [num, den] = detail::window_as_rational(f, alpha);
    ArcCenter best{Poly{}, Poly::constant(1)};
    for (const auto& [h, d] : detail::convergents(f, num, den)) {
        if (d.deg() > R) break;
        best = detail::normalize_center(f, h, d);
    }
    return best;
}

inline ArcCenter dirichlet_approx(const Fq& f, const RationalFn& r, int R) {
    RationalFn rn = rational_normalize(f, r.num, r.den);
    if (!rn.num.is_zero() && rn.num.deg() >= rn.den.deg())
        throw std::invalid_argument("dirichlet_approx: input must lie in the unit torus");
    ArcCenter best{Poly{}, Poly::constant(1)};
    for (const auto& [h, d] : detail::convergents(f, rn.num, rn.den)) {
        if (d.deg() > R) break;
        best = detail::normalize_center(f, h, d);
    }
    return best;
}

struct ClassifyResult {
    bool major = false;
    std::optional<ArcCenter> center;
};

/// Major/minor decision: alpha is major iff some Farey fraction with
/// ord g <= X satisfies ord(alpha - a/g) < -R - ord g, equivalently
/// ord(g*alpha - a) < -R.  Any such fraction is a continued-fraction
/// convergent of the window, so only convergents need testing.
inline ClassifyResult classify(const Fq& f, const Laurent& alpha, const ArcParams& params) {
    const int R = params.R();
    if (!alpha.is_exact() && alpha.depth > -(R + params.X + 1))
        throw window_error("classify: window must reach t^" + std::to_string(-(R + params.X + 1)));
    auto [num, den] = detail::window_as_rational(f, laurent_frac(alpha));
    for (const auto& [h, d] : detail::convergents(f, num, den)) {
        if (d.deg() > params.X) break;
        ArcCenter c = detail::normalize_center(f, h, d);
        if (center_certificate(f, laurent_frac(alpha), c, R)) return {true, c};
    }
    return {false, std::nullopt};
}

/// All arc centers for the given parameters: (0, 1) plus every (a, g) with g
/// monic, 1 <= ord g <= X, 0 <= ord a < ord g, gcd(a, g) = 1.
inline std::vector<ArcCenter> enumerate_major_centers(const Fq& f, const ArcParams& params) {
    std::vector<ArcCenter> out;
    out.push_back({Poly{}, Poly::constant(1)});
    for (int d = 1; d <= params.X; ++d) {
        const long long ng = count_below(f, d);
        for (long long gi = 0; gi < ng; ++gi) {
            Poly g = poly_add(f, poly_from_index(f, gi, d), Poly::monomial(1, d));
            const long long na = count_below(f, d);
            for (long long ai = 1; ai < na; ++ai) {
                Poly a = poly_from_index(f, ai, d);
                if (poly_gcd(f, a, g).deg() != 0) continue;
                out.push_back({a, g});
            }
        }
    }
    return out;
}

/// Haar measure of the union of major arcs, as the sum of per-center
/// measures q^{-R - ord g}.  Disjointness is property-tested at small scale,
/// not assumed here; this is a plain sum over centers.
inline Rat major_measure(const Fq& f, const ArcParams& params) {
    Rat total(0);
    for (const ArcCenter& c : enumerate_major_centers(f, params))
        total += rat_pow(f.q, -(params.R() + c.g.deg()));
    return total;
}

struct SupScanReport {
    int q = 0, k = 0, X = 0;
    long long windows_scanned = 0;
    long long minor_hits = 0;
    bool exhaustive = false;
    double max_abs = 0.0;       // max |g(theta)| over sampled minor theta
    bool has_bound = false;     // bound applies only when k = p^b + 1
    int b = 0;
    double bound = 0.0;         // q^{X - X/(16(p^b+2))}
    std::uint64_t seed = 0;
};

/// Scan minor-arc points theta (coefficient windows at depth R+X+1, major
/// hits rejected) and report the largest |g(theta)| seen next to the
/// theoretical bound for k = p^b + 1.  Reporting only; the bound is
/// asymptotic in X and is not asserted.
inline SupScanReport sup_minor_scan(const Fq& f, int k, int X, long long sample_budget,
                                    std::uint64_t seed = 1) {
    SupScanReport rep;
    rep.q = f.q;
    rep.k = k;
    rep.X = X;
    rep.seed = seed;
    // k = p^b + 1 detection for the bound formula
    {
        long long rest = k - 1;
        int b = 0;
        while (rest % f.p == 0) { rest /= f.p; ++b; }
        if (rest == 1 && b >= 1) {
            rep.has_bound = true;
            rep.b = b;
            double pb = std::pow((double)f.p, b);
            rep.bound = std::pow((double)f.q, X - (double)X / (16.0 * (pb + 2.0)));
        }
    }
    if (k == 2) return rep;  // minor arcs are empty
    ArcParams params(k, X);
    const int D = params.R() + X + 1;
    const long long total = pow_ll(f.q, D);
    rep.exhaustive = total <= sample_budget;
    const long long n = rep.exhaustive ? total : sample_budget;
    std::mt19937_64 rng(seed);
    for (long long i = 0; i < n; ++i) {
        long long idx = rep.exhaustive ? i : (long long)(rng() % (std::uint64_t)total);
        std::vector<felem> cc(D, 0);
        long long t = idx;
        for (int j = 0; j < D; ++j) { cc[j] = (felem)(t % f.q); t /= f.q; }
        Laurent theta(-1, NEG_INF, std::move(cc));
        ++rep.windows_scanned;
        if (classify(f, theta, params).major) continue;
        ++rep.minor_hits;
        rep.max_abs = std::max(rep.max_abs, std::abs(weyl_sum_g(f, theta, X, k)));
    }
    return rep;
}

}  // namespace waring

#endif  // WARING_ARCS_HPP
