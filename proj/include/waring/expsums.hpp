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

#ifndef WARING_EXPSUMS_HPP
#define WARING_EXPSUMS_HPP

#include <complex>
#include <map>

#include "laurent.hpp"

namespace waring {

using cplx = std::complex<double>;

/// One problem instance: the field, the power k, and the variable count s.
struct WaringInstance {
    Fq spec;
    int k = 2;
    int s = 1;

    WaringInstance(Fq f, int k_, int s_) : spec(std::move(f)), k(k_), s(s_) {
        if (k < 2) throw std::invalid_argument("k must be >= 2");
        if (s < 1) throw std::invalid_argument("s must be >= 1");
    }
};

/// How deep alpha's window must reach so that res(alpha * x^k) is determined
/// for every x of degree < X.
struct SumWindowReq {
    int X;
    int needed_depth;  // = -k(X-1) - 1
};

inline SumWindowReq weyl_window_req(int X, int k) { return {X, -k * (X - 1) - 1}; }

inline void require_depth(const Laurent& a, int depth, const char* who) {
    if (a.is_exact()) return;
    if (a.depth > depth)
        throw window_error(std::string(who) + ": window depth " + std::to_string(a.depth) +
                           " is too shallow, need " + std::to_string(depth));
}

/// g(alpha) = sum over x of degree < X of e(alpha x^k)
inline cplx weyl_sum_g(const Fq& f, const Laurent& alpha, int X, int k) {
    require_depth(alpha, weyl_window_req(X, k).needed_depth, "weyl_sum_g");
    const long long total = count_below(f, X);
    cplx acc = 0.0;
    for (long long i = 0; i < total; ++i) {
        Poly x = poly_from_index(f, i, X);
        Poly xk = poly_pow(f, x, k);
        acc += f.char_eq(res_mul_poly(f, alpha, xk));
    }
    return acc;
}

/// sum over all x with ord x <= Y of e(beta x); collapses to q^{Y+1} when
/// every coefficient of beta at t^{-1}..t^{-Y-1} vanishes, and to 0 otherwise.
inline cplx linear_sum(const Fq& f, const Laurent& beta, int Y) {
    require_depth(beta, -Y - 1, "linear_sum");
    bool deep = true;
    for (int e = -1; e >= -Y - 1; --e)
        if (beta.coeff_at(e)) { deep = false; break; }
    if (deep) return (double)pow_ll(f.q, Y + 1);
    return 0.0;
}

/// Same sum evaluated term by term, as an independent oracle.
inline cplx linear_sum_naive(const Fq& f, const Laurent& beta, int Y) {
    const long long total = pow_ll(f.q, Y + 1);
    cplx acc = 0.0;
    for (long long i = 0; i < total; ++i) {
        Poly x = poly_from_index(f, i, Y + 1);
        acc += f.char_eq(res_mul_poly(f, beta, x));
    }
    return acc;
}

/// f(alpha-vector) = sum over x of degree < X of e(sum_j alpha_j x^j), the
/// exponents j being the keys of `coeffs`.
inline cplx multi_sum_f(const Fq& f, const std::map<int, Laurent>& coeffs, int X) {
    for (const auto& [j, a] : coeffs) {
        if (j < 1) throw std::invalid_argument("multi_sum_f: exponents must be >= 1");
        require_depth(a, -j * (X - 1) - 1, "multi_sum_f");
    }
    const long long total = count_below(f, X);
    cplx acc = 0.0;
    for (long long i = 0; i < total; ++i) {
        Poly x = poly_from_index(f, i, X);
        felem r = 0;
        for (const auto& [j, a] : coeffs)
            r = f.add(r, res_mul_poly(f, a, poly_pow(f, x, j)));
        acc += f.char_eq(r);
    }
    return acc;
}

/// F(beta-vector, theta): the lower exponent slots come from `betas`, the top
/// slot k carries theta.
inline cplx sum_F(const Fq& f, const std::map<int, Laurent>& betas, const Laurent& theta, int X,
                  int k) {
    std::map<int, Laurent> coeffs = betas;
    coeffs[k] = theta;
    return multi_sum_f(f, coeffs, X);
}

/// psi(theta, alpha) = q^{-X} sum_{y in I_X} sum_{ord h <= j0(X-1)}
/// e(-c h y^{k-j0} theta - alpha h).  The inner sum over h is a linear sum in
/// h against beta_y = -(c y^{k-j0} theta + alpha), so each y contributes
/// either q^{j0(X-1)+1} or 0.
inline cplx psi_sum(const Fq& f, const Laurent& theta, const Laurent& alpha, felem c, int k,
                    int j0, int X) {
    if (c == 0) throw std::invalid_argument("psi_sum: c must be nonzero");
    if (j0 < 1 || j0 >= k) throw std::invalid_argument("psi_sum: need 1 <= j0 < k");
    const int Y = j0 * (X - 1);
    const long long total = count_below(f, X);
    long long hits = 0;
    for (long long i = 0; i < total; ++i) {
        Poly y = poly_from_index(f, i, X);
        Poly w = poly_scale(f, c, poly_pow(f, y, k - j0));
        Laurent beta = laurent_neg(f, laurent_add(f, laurent_mul_poly(f, theta, w), alpha));
        if (linear_sum(f, beta, Y).real() != 0.0) ++hits;
    }
    // q^{-X} * hits * q^{Y+1}
    return (double)hits * std::pow((double)f.q, Y + 1 - X);
}

/// Direct double sum, feasible only at tiny scale; oracle for psi_sum.
inline cplx psi_sum_naive(const Fq& f, const Laurent& theta, const Laurent& alpha, felem c, int k,
                          int j0, int X) {
    if (c == 0) throw std::invalid_argument("psi_sum_naive: c must be nonzero");
    const int Y = j0 * (X - 1);
    const long long ny = count_below(f, X);
    const long long nh = pow_ll(f.q, Y + 1);
    cplx acc = 0.0;
    for (long long i = 0; i < ny; ++i) {
        Poly y = poly_from_index(f, i, X);
        Poly w = poly_scale(f, c, poly_pow(f, y, k - j0));
        Laurent beta = laurent_neg(f, laurent_add(f, laurent_mul_poly(f, theta, w), alpha));
        for (long long j = 0; j < nh; ++j) {
            Poly h = poly_from_index(f, j, Y + 1);
            acc += f.char_eq(res_mul_poly(f, beta, h));
        }
    }
    return acc / std::pow((double)f.q, X);
}

/// S(g, a) = sum over residues r mod g of e(a r^k / g)
inline cplx gauss_sum(const Fq& f, const Poly& a, const Poly& g, int k) {
    if (g.is_zero() || g.lead() != 1) throw std::invalid_argument("gauss_sum: g must be monic");
    if (g.deg() < 1) throw std::invalid_argument("gauss_sum: need deg g >= 1");
    if (!a.is_zero() && a.deg() >= g.deg())
        throw std::invalid_argument("gauss_sum: need deg a < deg g");
    if (poly_gcd(f, a, g).deg() != 0) throw std::invalid_argument("gauss_sum: gcd(a, g) != 1");
    const long long total = count_below(f, g.deg());
    cplx acc = 0.0;
    for (long long i = 0; i < total; ++i) {
        Poly r = poly_from_index(f, i, g.deg());
        Poly m = poly_mod(f, poly_mul(f, a, poly_pow(f, r, k)), g);
        acc += f.char_eq(laurent_res(laurent_of_rational(f, m, g, -1)));
    }
    return acc;
}

}  // namespace waring

#endif  // WARING_EXPSUMS_HPP
