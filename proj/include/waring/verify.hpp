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

#ifndef WARING_VERIFY_HPP
#define WARING_VERIFY_HPP

#include <random>

#include "arcs.hpp"
#include "prediction.hpp"
#include "thresholds.hpp"

namespace waring {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace verify_detail {

inline void check(std::vector<CheckResult>& out, const std::string& suite, const std::string& name,
                  bool ok, const std::string& detail = "") {
    out.push_back({suite, name, ok, ok ? "" : detail});
}

/// wrap a block so an exception becomes a named failure instead of an abort
template <typename Fn>
inline void guarded(std::vector<CheckResult>& out, const std::string& suite,
                    const std::string& name, Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& ex) {
        out.push_back({suite, name, false, std::string("exception: ") + ex.what()});
    }
}

}  // namespace verify_detail

inline std::vector<CheckResult> verify_algebra() {
    using verify_detail::check;
    std::vector<CheckResult> out;
    const std::string S = "algebra";

    verify_detail::guarded(out, S, "field-axioms", [&] {
        for (int q : {2, 3, 4, 5, 7, 8, 9}) {
            Fq f = Fq::make(q);
            bool ok = true;
            for (felem a = 0; a < f.q && ok; ++a)
                for (felem b = 0; b < f.q && ok; ++b) {
                    if (f.add(a, b) != f.add(b, a)) ok = false;
                    if (f.mul(a, b) != f.mul(b, a)) ok = false;
                    for (felem c = 0; c < f.q && ok; ++c) {
                        if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) ok = false;
                        if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) ok = false;
                        if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) ok = false;
                    }
                }
            for (felem a = 1; a < f.q && ok; ++a)
                if (f.mul(a, f.inv(a)) != 1) ok = false;
            check(out, S, "field-axioms-q" + std::to_string(q), ok, "axiom violated");
        }
    });

    verify_detail::guarded(out, S, "field-axioms-random", [&] {
        std::mt19937_64 rng(7);
        for (int q : {16, 25, 27}) {
            Fq f = Fq::make(q);
            bool ok = true;
            for (int iter = 0; iter < 2000 && ok; ++iter) {
                felem a = (felem)(rng() % f.q), b = (felem)(rng() % f.q), c = (felem)(rng() % f.q);
                if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) ok = false;
                if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) ok = false;
                if (a && f.mul(a, f.inv(a)) != 1) ok = false;
            }
            check(out, S, "field-axioms-random-q" + std::to_string(q), ok, "axiom violated");
        }
    });

    verify_detail::guarded(out, S, "trace-and-character", [&] {
        for (int q : {2, 3, 4, 8, 9}) {
            Fq f = Fq::make(q);
            bool lin = true, seen_nonzero = false;
            for (felem a = 0; a < f.q; ++a) {
                if (f.trace(a) != 0) seen_nonzero = true;
                for (felem b = 0; b < f.q; ++b)
                    if (f.trace(f.add(a, b)) != (f.trace(a) + f.trace(b)) % f.p) lin = false;
            }
            cplx sum = 0.0;
            for (felem a = 0; a < f.q; ++a) sum += f.char_eq(a);
            check(out, S, "trace-linear-q" + std::to_string(q), lin, "trace not additive");
            check(out, S, "trace-surjective-q" + std::to_string(q), seen_nonzero,
                  "trace identically zero");
            check(out, S, "char-sum-zero-q" + std::to_string(q), std::abs(sum) < 1e-12,
                  "character sum over field not zero");
        }
    });

    verify_detail::guarded(out, S, "orthogonality", [&] {
        for (int q : {2, 3}) {
            Fq f = Fq::make(q);
            for (int M = 1; M <= 3; ++M) {
                bool ok = true;
                for (long long hi = 0; hi < count_below(f, M); ++hi) {
                    Poly h = poly_from_index(f, hi, M);
                    cplx v = quadrature_T(f, M, [&](const Laurent& a) {
                        return f.char_eq(res_mul_poly(f, a, h));
                    });
                    double want = h.is_zero() ? 1.0 : 0.0;
                    if (std::abs(v - want) > 1e-9) ok = false;
                }
                check(out, S, "orthogonality-q" + std::to_string(q) + "-M" + std::to_string(M), ok,
                      "character integral wrong");
            }
        }
    });

    verify_detail::guarded(out, S, "laurent-roundtrip", [&] {
        std::mt19937_64 rng(11);
        Fq f = Fq::make(3);
        bool ok = true;
        for (int iter = 0; iter < 200 && ok; ++iter) {
            Poly num = poly_from_index(f, (long long)(rng() % 81), 4);
            Poly den = poly_add(f, poly_from_index(f, (long long)(rng() % 81), 4),
                                Poly::monomial(1, 4));
            Laurent l = laurent_of_rational(f, num, den, -10);
            // re-multiply by den and compare against num on the shared window
            Laurent back = laurent_mul_poly(f, l, den);
            Laurent want = Laurent::from_poly(num);
            for (int e = std::max(back.top, want.top); e >= -6; --e)
                if (back.coeff_at(e) != want.coeff_at(e)) ok = false;
        }
        check(out, S, "laurent-roundtrip", ok, "expansion times denominator differs from numerator");
    });

    verify_detail::guarded(out, S, "gcd-properties", [&] {
        std::mt19937_64 rng(13);
        Fq f = Fq::make(9);
        bool ok = true;
        for (int iter = 0; iter < 200 && ok; ++iter) {
            Poly a = poly_from_index(f, (long long)(rng() % 729), 3);
            Poly b = poly_from_index(f, (long long)(rng() % 729), 3);
            if (a.is_zero() && b.is_zero()) continue;
            Poly g = poly_gcd(f, a, b);
            if (g.lead() != 1) ok = false;
            if (!a.is_zero() && !poly_divmod(f, a, g).second.is_zero()) ok = false;
            if (!b.is_zero() && !poly_divmod(f, b, g).second.is_zero()) ok = false;
        }
        check(out, S, "gcd-properties", ok, "gcd not monic or not a common divisor");
    });

    verify_detail::guarded(out, S, "ord-ultrametric", [&] {
        Fq f = Fq::make(3);
        Laurent a = laurent_of_rational(f, Poly::constant(1), Poly::monomial(1, 1), -6);  // 1/t
        Laurent b = laurent_of_rational(f, Poly::constant(2), Poly::monomial(1, 3), -6);  // 2/t^3
        check(out, S, "ord-ultrametric", laurent_add(f, a, b).ord() == a.ord(),
              "ord(a+b) != ord a despite ord a > ord b");
    });

    return out;
}

inline std::vector<CheckResult> verify_sums() {
    using verify_detail::check;
    std::vector<CheckResult> out;
    const std::string S = "sums";

    verify_detail::guarded(out, S, "linear-sum-closed-form", [&] {
        for (int q : {2, 3}) {
            Fq f = Fq::make(q);
            bool ok = true;
            const int D = 4;
            for (long long i = 0; i < count_below(f, D) && ok; ++i) {
                std::vector<felem> cc(D, 0);
                long long t = i;
                for (int j = 0; j < D; ++j) { cc[j] = (felem)(t % f.q); t /= f.q; }
                Laurent beta(-1, NEG_INF, std::move(cc));
                for (int Y = 0; Y <= 2; ++Y)
                    if (std::abs(linear_sum(f, beta, Y) - linear_sum_naive(f, beta, Y)) > 1e-9)
                        ok = false;
            }
            check(out, S, "linear-sum-closed-form-q" + std::to_string(q), ok,
                  "closed form disagrees with direct sum");
        }
    });

    verify_detail::guarded(out, S, "weyl-conjugation", [&] {
        Fq f = Fq::make(3);
        bool ok = true;
        for (long long i = 0; i < 81 && ok; ++i) {
            std::vector<felem> cc(4, 0);
            long long t = i;
            for (int j = 0; j < 4; ++j) { cc[j] = (felem)(t % 3); t /= 3; }
            Laurent alpha(-1, NEG_INF, std::move(cc));
            Laurent neg = laurent_neg(f, alpha);
            cplx a = weyl_sum_g(f, alpha, 2, 3), b = weyl_sum_g(f, neg, 2, 3);
            if (std::abs(a - std::conj(b)) > 1e-9) ok = false;
            if (std::abs(std::norm(a) - (a * std::conj(a)).real()) > 1e-9) ok = false;
        }
        check(out, S, "weyl-conjugation", ok, "g(-a) != conj(g(a))");
    });

    verify_detail::guarded(out, S, "psi-collapse-vs-naive", [&] {
        Fq f = Fq::make(3);
        bool ok = true;
        for (long long i = 0; i < 81 && ok; ++i) {
            std::vector<felem> cc(4, 0);
            long long t = i;
            for (int j = 0; j < 4; ++j) { cc[j] = (felem)(t % 3); t /= 3; }
            Laurent theta(-1, NEG_INF, std::move(cc));
            cplx a = psi_sum(f, theta, Laurent::zero(), 1, 3, 2, 1);
            cplx b = psi_sum_naive(f, theta, Laurent::zero(), 1, 3, 2, 1);
            if (std::abs(a - b) > 1e-9) ok = false;
        }
        check(out, S, "psi-collapse-vs-naive", ok, "linear-sum collapse disagrees with double sum");
    });

    verify_detail::guarded(out, S, "gauss-sum-values", [&] {
        Fq f3 = Fq::make(3);
        cplx g1 = gauss_sum(f3, Poly::constant(1), Poly::monomial(1, 1), 2);
        bool ok = std::abs(std::abs(g1) - std::sqrt(3.0)) < 1e-9;
        cplx g2 = gauss_sum(f3, Poly::constant(1), Poly::monomial(1, 1), 1);
        ok = ok && std::abs(g2) < 1e-9;
        Fq f2 = Fq::make(2);
        cplx g3 = gauss_sum(f2, Poly::constant(1), Poly::monomial(1, 1), 5);
        ok = ok && std::abs(g3) < 1e-9;
        check(out, S, "gauss-sum-values", ok, "known Gauss sum values not reproduced");
    });

    verify_detail::guarded(out, S, "quadrature-count-bridge", [&] {
        bool ok = true;
        for (int q : {2, 3}) {
            Fq f = Fq::make(q);
            for (int k : {2, 3}) {
                for (int m : {1, 2}) {
                    int X = 2;
                    int M = k * (X - 1) + 1;
                    cplx v = quadrature_T(f, M, [&](const Laurent& a) {
                        cplx g = weyl_sum_g(f, a, X, k);
                        return std::pow(std::abs(g), 2 * m);
                    });
                    // direct count of x_1^k+..+x_m^k = y_1^k+..+y_m^k
                    DiagonalSystem sys{{k}, m, X};
                    long long want = vinogradov_count_naive(f, sys);
                    if (quadrature_round_int(v) != want) ok = false;
                }
            }
        }
        check(out, S, "quadrature-count-bridge", ok, "even moment integral != solution count");
    });

    return out;
}

inline std::vector<CheckResult> verify_arcs() {
    using verify_detail::check;
    std::vector<CheckResult> out;
    const std::string S = "arcs";

    verify_detail::guarded(out, S, "partition-and-disjointness", [&] {
        for (int q : {2, 3}) {
            Fq f = Fq::make(q);
            for (int X = 1; X <= 2; ++X) {
                ArcParams params(3, X);
                const int D = params.R() + X + 1;
                if (std::pow((double)q, D) > 300000) continue;
                auto centers = enumerate_major_centers(f, params);
                long long major_windows = 0;
                bool ok = true;
                for (long long i = 0; i < count_below(f, D); ++i) {
                    std::vector<felem> cc(D, 0);
                    long long t = i;
                    for (int j = 0; j < D; ++j) { cc[j] = (felem)(t % f.q); t /= f.q; }
                    Laurent alpha(-1, NEG_INF, std::move(cc));
                    ClassifyResult cr = classify(f, alpha, params);
                    int hits = 0;
                    for (const ArcCenter& c : centers)
                        if (center_certificate(f, alpha, c, params.R())) ++hits;
                    if (cr.major) {
                        ++major_windows;
                        if (hits != 1) ok = false;
                        if (!center_certificate(f, alpha, *cr.center, params.R())) ok = false;
                    } else if (hits != 0) {
                        ok = false;
                    }
                }
                // measure additivity against the exhaustive window count
                Rat measured = Rat(major_windows) * rat_pow(f.q, -D);
                if (measured != major_measure(f, params)) ok = false;
                check(out, S,
                      "partition-q" + std::to_string(q) + "-X" + std::to_string(X), ok,
                      "window partition or measure mismatch");
            }
        }
    });

    verify_detail::guarded(out, S, "dirichlet-certificate", [&] {
        Fq f = Fq::make(3);
        std::mt19937_64 rng(17);
        bool ok = true;
        for (int iter = 0; iter < 100 && ok; ++iter) {
            const int R = 2, D = 2 * R + 1;
            std::vector<felem> cc(D, 0);
            for (int j = 0; j < D; ++j) cc[j] = (felem)(rng() % 3);
            Laurent alpha(-1, NEG_INF, std::move(cc));
            ArcCenter c = dirichlet_approx(f, alpha, R);
            if (c.g.deg() > R) ok = false;
            if (poly_gcd(f, c.a, c.g).deg() != 0 && !c.a.is_zero()) ok = false;
            if (!center_certificate(f, alpha, c, R)) ok = false;
        }
        check(out, S, "dirichlet-certificate", ok, "approximation certificate failed");
    });

    return out;
}

inline std::vector<CheckResult> verify_counts() {
    using verify_detail::check;
    std::vector<CheckResult> out;
    const std::string S = "counts";

    verify_detail::guarded(out, S, "mitm-vs-brute", [&] {
        bool ok = true;
        std::mt19937_64 rng(23);
        for (int q : {2, 3}) {
            Fq f = Fq::make(q);
            for (int k : {2, 3})
                for (int s = 1; s <= 4 && ok; ++s)
                    for (int X = 1; X <= 2 && ok; ++X)
                        for (int trial = 0; trial < 5 && ok; ++trial) {
                            Poly n = poly_from_index(
                                f, (long long)(rng() % (std::uint64_t)count_below(f, 3)), 3);
                            long long a = count_reps_bruteforce(f, n, k, s, X);
                            long long b = count_reps_mitm(f, n, k, s, X);
                            if (a != b) ok = false;
                        }
        }
        check(out, S, "mitm-vs-brute", ok, "meet-in-the-middle disagrees with enumeration");
    });

    verify_detail::guarded(out, S, "j-infty-dual-route", [&] {
        bool ok = true;
        for (int q : {2, 3, 4, 9})
            for (int k : {2, 3})
                for (int s = 1; s <= 4; ++s) {
                    Fq f = Fq::make(q);
                    for (felem b = 0; b < f.q; ++b)
                        if (j_infty_direct(f, b, k, s) != j_infty_convolution(f, b, k, s)) ok = false;
                }
        check(out, S, "j-infty-dual-route", ok, "direct and convolution counts disagree");
    });

    verify_detail::guarded(out, S, "vinogradov-full-vs-coprime-set", [&] {
        bool ok = true;
        Fq f2 = Fq::make(2);
        Fq f3 = Fq::make(3);
        struct Case { Fq* f; int k; };
        std::vector<Case> cases = {{&f2, 3}, {&f3, 4}};
        for (auto& [fp, k] : cases) {
            ExponentSets es = build_sets(k, fp->p);
            std::set<int> R(es.R.begin(), es.R.end());
            std::set<int> Rp(es.Rprime.begin(), es.Rprime.end());
            for (int s = 1; s <= 2; ++s)
                for (int X = 1; X <= 2; ++X) {
                    long long a = vinogradov_count(*fp, {R, s, X});
                    long long b = vinogradov_count(*fp, {Rp, s, X});
                    if (a != b) ok = false;
                    if (a < pow_ll(fp->q, (long long)s * X)) ok = false;
                }
        }
        check(out, S, "vinogradov-full-vs-coprime-set", ok,
              "dropping p-divisible exponents changed the count");
    });

    verify_detail::guarded(out, S, "representation-integral", [&] {
        bool ok = true;
        Fq f = Fq::make(2);
        for (int k : {2, 3})
            for (int s = 2; s <= 3; ++s) {
                int X = 2;
                for (long long ni = 0; ni < count_below(f, 3); ++ni) {
                    Poly n = poly_from_index(f, ni, 3);
                    int M = std::max(k * (X - 1), n.deg()) + 1;
                    cplx v = quadrature_T(f, M, [&](const Laurent& a) {
                        cplx g = weyl_sum_g(f, a, X, k);
                        cplx tw = f.char_eq(f.neg(res_mul_poly(f, a, n)));
                        return std::pow(g, s) * tw;
                    });
                    if (quadrature_round_int(v) != count_reps_bruteforce(f, n, k, s, X)) ok = false;
                }
            }
        check(out, S, "representation-integral", ok,
              "torus integral of g^s e(-n a) != representation count");
    });

    return out;
}

inline std::vector<CheckResult> verify_thresholds() {
    using verify_detail::check;
    std::vector<CheckResult> out;
    const std::string S = "thresholds";

    verify_detail::guarded(out, S, "lucas-vs-bigint", [&] {
        bool ok = true;
        for (int p : {2, 3, 5, 7, 11, 13})
            for (long long k = 0; k <= 200 && ok; ++k)
                for (long long n = 0; n <= k && ok; ++n)
                    if (binom_mod_p(k, n, p) != binom_mod_p_bigint(k, n, p)) ok = false;
        check(out, S, "lucas-vs-bigint", ok, "digit-product binomial disagrees with big integers");
    });

    verify_detail::guarded(out, S, "j0-scan-vs-closed", [&] {
        bool ok = true;
        for (int p : {2, 3, 5, 7, 11, 13})
            for (int k = 3; k <= 200; ++k) {
                if (k % p == 0) continue;
                if (j0_scan(k, p) != j0_closed(k, p)) ok = false;
            }
        check(out, S, "j0-scan-vs-closed", ok, "j0 scan disagrees with closed form");
    });

    verify_detail::guarded(out, S, "condition-star", [&] {
        bool ok = true;
        for (int p : {2, 3, 5, 7, 11, 13})
            for (int k = 3; k <= 60; ++k) {
                if (k % p == 0) continue;
                ExponentSets es = build_sets(k, p);
                if (!check_condition_star(es.R, p, k + 5)) ok = false;
            }
        check(out, S, "condition-star", ok, "constructed exponent set fails the closure condition");
    });

    verify_detail::guarded(out, S, "closed-forms", [&] {
        bool ok = true;
        for (int p : {2, 3, 5, 7, 11, 13})
            for (int k = 3; k <= 200; ++k) {
                if (k % p == 0 || k <= p) continue;
                auto [cs, cu] = theorem_closed_forms(k, p);
                if (cs != s1_of(k, p).value || cu != u2_of(k, p).value) ok = false;
            }
        check(out, S, "closed-forms", ok, "threshold formula disagrees with closed form");
    });

    verify_detail::guarded(out, S, "weyl-nullity", [&] {
        bool ok = true;
        for (int p : {2, 3, 5})
            for (int k = 2; k <= 12; ++k) {
                int h0 = h0_of(k, p);
                MultiPoly w = MultiPoly::power_of_u(k, p);
                if (weyl_diff(w, h0, p).is_zero()) ok = false;
                if (!weyl_diff(w, h0 + 1, p).is_zero()) ok = false;
            }
        check(out, S, "weyl-nullity", ok, "differencing of u^k dies at the wrong step");
    });

    return out;
}

inline std::vector<CheckResult> run_suite(const std::string& suite) {
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> v) {
        out.insert(out.end(), v.begin(), v.end());
    };
    bool all = suite == "all";
    if (all || suite == "algebra") append(verify_algebra());
    if (all || suite == "sums") append(verify_sums());
    if (all || suite == "arcs") append(verify_arcs());
    if (all || suite == "counts") append(verify_counts());
    if (all || suite == "thresholds") append(verify_thresholds());
    if (out.empty()) throw std::invalid_argument("unknown suite: " + suite);
    return out;
}

}  // namespace waring

#endif  // WARING_VERIFY_HPP
