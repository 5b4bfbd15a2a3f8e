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

#ifndef WARING_PREDICTION_HPP
#define WARING_PREDICTION_HPP

#include <functional>

#include "counting.hpp"

namespace waring {

/// The weight of one modulus g in the singular series:
/// q^{-s deg g} * sum over units a mod g of S(g,a)^s e(-n a / g).
/// The empty inner sum at deg g = 0 is defined to be 1, so the series starts
/// from 1 and the g = 1 arc contributes exactly its main term.
inline cplx singular_term_for_modulus(const Fq& f, const Poly& n, int k, int s, const Poly& g) {
    if (g.is_zero() || g.lead() != 1)
        throw std::invalid_argument("singular_term_for_modulus: g must be monic");
    if (g.deg() == 0) return 1.0;
    const long long na = count_below(f, g.deg());
    cplx acc = 0.0;
    Poly minus_n = poly_neg(f, n);
    for (long long ai = 0; ai < na; ++ai) {
        Poly a = poly_from_index(f, ai, g.deg());
        if (poly_gcd(f, a, g).deg() != 0) continue;
        cplx sg = gauss_sum(f, a, g, k);
        Poly m = poly_mod(f, poly_mul(f, minus_n, a), g);
        cplx tw = f.char_eq(laurent_res(laurent_of_rational(f, m, g, -1)));
        acc += std::pow(sg, s) * tw;
    }
    return acc / std::pow((double)f.q, (double)s * g.deg());
}

struct SingularSeries {
    std::vector<cplx> per_degree;  // index d = contribution of all monic g with deg g = d
    std::vector<cplx> partial;     // partial[d] = sum of per_degree[0..d]
    cplx total = 0.0;
    int G = 0;
};

/// Truncation of the singular series over monic moduli of degree <= G.
inline SingularSeries singular_series_truncated(const Fq& f, const Poly& n, int k, int s, int G,
                                                long long budget = 100000000LL) {
    if (G < 0) throw std::invalid_argument("singular_series_truncated: G must be >= 0");
    double work = 0;
    for (int d = 1; d <= G; ++d) work += std::pow((double)f.q, 3.0 * d);
    if (work > (double)budget)
        throw budget_error("singular_series_truncated: Gauss-sum work exceeds budget");
    SingularSeries out;
    out.G = G;
    out.per_degree.assign(G + 1, 0.0);
    out.per_degree[0] = 1.0;
    for (int d = 1; d <= G; ++d) {
        const long long ng = count_below(f, d);
        cplx acc = 0.0;
        for (long long gi = 0; gi < ng; ++gi) {
            Poly g = poly_add(f, poly_from_index(f, gi, d), Poly::monomial(1, d));
            acc += singular_term_for_modulus(f, n, k, s, g);
        }
        out.per_degree[d] = acc;
    }
    out.partial.assign(G + 1, 0.0);
    cplx run = 0.0;
    for (int d = 0; d <= G; ++d) {
        run += out.per_degree[d];
        out.partial[d] = run;
    }
    out.total = run;
    return out;
}

/// Predicted main term: S_{s,k}(n) * J_infty(n) * q^{(s-k)P}.
inline double main_term(const WaringInstance& inst, const Poly& n, int G,
                        long long budget = 100000000LL) {
    const Fq& f = inst.spec;
    SingularSeries ss = singular_series_truncated(f, n, inst.k, inst.s, G, budget);
    if (std::abs(ss.total.imag()) > 1e-6)
        throw std::runtime_error("main_term: truncated singular series is not real");
    if (ss.total.real() < 0)
        throw std::runtime_error("main_term: negative series truncation, not converged");
    long long ji = j_infty(f, b_of(f, n, inst.k), inst.k, inst.s);
    int P = strict_P(f, n, inst.k);
    return ss.total.real() * (double)ji * std::pow((double)f.q, (double)(inst.s - inst.k) * P);
}

struct PredictionReport {
    Poly n;
    int k = 0, s = 0, q = 0;
    int P = 0, X = 0, G = 0;
    bool exceptional = false;
    std::vector<cplx> singular_partial;  // partial sums by truncation degree
    double singular_value = 0.0;
    bool series_converged = true;  // false when the real part went negative
    long long j_inf = 0;
    double main = 0.0;
    long long exact_count = 0;
    std::string method;  // "brute" or "mitm"
    double ratio = 0.0;       // exact / main, only meaningful when main != 0
    double discrepancy_scaled = 0.0;  // |exact - main| * q^{-(s-k)P}
};

inline PredictionReport compare_report(const WaringInstance& inst, const Poly& n, int G,
                                       long long budget = 100000000LL) {
    if (n.is_zero()) throw std::invalid_argument("compare_report: n must be nonzero");
    const Fq& f = inst.spec;
    PredictionReport rep;
    rep.n = n;
    rep.k = inst.k;
    rep.s = inst.s;
    rep.q = f.q;
    rep.G = G;
    rep.exceptional = is_exceptional(f, n, inst.k);
    rep.P = strict_P(f, n, inst.k);
    rep.X = rep.P + 1;
    SingularSeries ss = singular_series_truncated(f, n, inst.k, inst.s, G, budget);
    rep.singular_partial = ss.partial;
    if (std::abs(ss.total.imag()) > 1e-6)
        throw std::runtime_error("compare_report: truncated singular series is not real");
    rep.singular_value = ss.total.real();
    rep.series_converged = rep.singular_value >= 0;
    rep.j_inf = j_infty(f, b_of(f, n, inst.k), inst.k, inst.s);
    rep.main = rep.singular_value * (double)rep.j_inf *
               std::pow((double)f.q, (double)(inst.s - inst.k) * rep.P);
    if (std::pow((double)f.q, (double)rep.X * inst.s) <= (double)budget) {
        rep.exact_count = count_reps_bruteforce(f, n, inst.k, inst.s, rep.X, budget);
        rep.method = "brute";
    } else {
        rep.exact_count = count_reps_mitm(f, n, inst.k, inst.s, rep.X, budget);
        rep.method = "mitm";
    }
    if (rep.main != 0.0) rep.ratio = (double)rep.exact_count / rep.main;
    rep.discrepancy_scaled = std::abs((double)rep.exact_count - rep.main) *
                             std::pow((double)f.q, -(double)(inst.s - inst.k) * rep.P);
    return rep;
}

struct ScanEntry {
    Poly n;
    int P = 0;
    long long count = 0;
    double main = 0.0;
    double threshold = 0.0;  // q^{(s-k)P} / psi(q^P)
    bool violator = false;
};

struct ExceptionalScanReport {
    int N = 0, k = 0, s = 0, q = 0, G = 0;
    std::vector<ScanEntry> entries;
    std::vector<Poly> violators;
    long long skipped_no_witness = 0;
};

/// Scan every nonzero n of degree < N and flag violators of the defining
/// inequality |R - main| > q^{(s-k)P} / psi(q^P).  psi receives P (the scan
/// threshold depends on q^P only through P); default is psi = P + 1.
inline ExceptionalScanReport exceptional_scan(const WaringInstance& inst, int N, int G,
                                              const std::function<double(int)>& psi = nullptr,
                                              long long budget = 100000000LL,
                                              long long witness_budget = 200000LL) {
    const Fq& f = inst.spec;
    ExceptionalScanReport rep;
    rep.N = N;
    rep.k = inst.k;
    rep.s = inst.s;
    rep.q = f.q;
    rep.G = G;
    auto psi_of = psi ? psi : [](int P) { return (double)(P + 1); };
    const long long total = count_below(f, N);
    for (long long i = 1; i < total; ++i) {
        Poly n = poly_from_index(f, i, N);
        if (inst.k > f.p) {
            // membership in the additive closure of k-th powers is not
            // decidable here; only scan n with a certified witness
            if (!witness_in_jqk_ring(f, n, inst.k, witness_budget)) {
                ++rep.skipped_no_witness;
                continue;
            }
        }
        PredictionReport pr = compare_report(inst, n, G, budget);
        ScanEntry e;
        e.n = n;
        e.P = pr.P;
        e.count = pr.exact_count;
        e.main = pr.main;
        e.threshold = std::pow((double)f.q, (double)(inst.s - inst.k) * pr.P) / psi_of(pr.P);
        e.violator = std::abs((double)e.count - e.main) > e.threshold;
        if (e.violator) rep.violators.push_back(n);
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace waring

#endif  // WARING_PREDICTION_HPP
