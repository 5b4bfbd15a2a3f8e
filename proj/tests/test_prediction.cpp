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

#include <doctest.h>

#include <cmath>

#include "waring/prediction.hpp"

using namespace waring;

TEST_CASE("series truncation basics") {
    Fq f3 = Fq::make(3);
    Poly n = poly_parse(f3, "t^2");

    SUBCASE("degree-zero truncation is the empty-modulus convention") {
        SingularSeries ss = singular_series_truncated(f3, n, 2, 5, 0);
        CHECK(ss.total == cplx(1.0, 0.0));
        CHECK(ss.partial.size() == 1);
    }

    SUBCASE("partial sums stabilize") {
        SingularSeries ss = singular_series_truncated(f3, n, 2, 5, 2);
        REQUIRE(ss.per_degree.size() == 3);
        CHECK(std::abs(ss.total.imag()) < 1e-6);
        // each new degree contributes less than the previous one
        CHECK(std::abs(ss.per_degree[2]) < std::abs(ss.per_degree[1]));
        CHECK(ss.total.real() > 0.0);
    }

    SUBCASE("direct summation oracle for the degree-1 block") {
        // sum over monic linear g and units a of q^{-s} S(g,a)^s e(-na/g)
        cplx direct = 0.0;
        const int s = 5, k = 2;
        for (long long gi = 0; gi < 3; ++gi) {
            Poly g = poly_add(f3, Poly::constant((felem)gi), Poly::monomial(1, 1));
            for (felem a = 1; a < 3; ++a) {
                Poly ap = Poly::constant(a);
                cplx sg = 0.0;
                for (felem r = 0; r < 3; ++r) {
                    // e(a r^k / g) with r a constant residue
                    Poly num = poly_scale(f3, f3.mul(a, f3.pow(r, k)), Poly::constant(1));
                    Laurent w = laurent_of_rational(f3, num, g, -2);
                    sg += char_e(f3, w);
                }
                cplx term = std::pow(sg, s);
                Laurent nag = laurent_of_rational(f3, poly_mul(f3, n, ap), g, -2);
                direct += term * std::conj(char_e(f3, nag)) / std::pow(3.0, s);
            }
        }
        SingularSeries ss = singular_series_truncated(f3, n, k, s, 1);
        CHECK(std::abs(ss.per_degree[1] - direct) < 1e-9);
    }
}

TEST_CASE("per-modulus terms are multiplicative on coprime moduli") {
    for (int q : {2, 3}) {
        Fq f = Fq::make(q);
        const int k = 2, s = 3;
        Poly n = poly_parse(f, "t^2+1");
        std::vector<Poly> monics;
        for (int d = 1; d <= 2; ++d)
            for (long long i = 0; i < pow_ll(q, d); ++i)
                monics.push_back(poly_add(f, poly_from_index(f, i, d), Poly::monomial(1, d)));
        for (const Poly& g1 : monics)
            for (const Poly& g2 : monics) {
                if (poly_gcd(f, g1, g2).deg() != 0) continue;
                cplx lhs = singular_term_for_modulus(f, n, k, s, poly_mul(f, g1, g2));
                cplx rhs = singular_term_for_modulus(f, n, k, s, g1) *
                           singular_term_for_modulus(f, n, k, s, g2);
                CHECK(std::abs(lhs - rhs) < 1e-7);
            }
    }
}

TEST_CASE("main term assembly") {
    Fq f3 = Fq::make(3);
    Poly n = poly_parse(f3, "t^2");

    SUBCASE("degree-zero truncation reduces to the local factors") {
        WaringInstance inst(f3, 2, 5);
        int P = strict_P(f3, n, 2);
        long long ji = j_infty(f3, b_of(f3, n, 2), 2, 5);
        double expected = (double)ji * std::pow(3.0, (double)(5 - 2) * P);
        CHECK(main_term(inst, n, 0) == doctest::Approx(expected).epsilon(1e-12));
    }

    SUBCASE("s = k drops the power-of-q factor") {
        WaringInstance inst(f3, 2, 2);
        SingularSeries ss = singular_series_truncated(f3, n, 2, 2, 1);
        long long ji = j_infty(f3, b_of(f3, n, 2), 2, 2);
        CHECK(main_term(inst, n, 1) ==
              doctest::Approx(ss.total.real() * (double)ji).epsilon(1e-12));
    }
}

TEST_CASE("comparison reports") {
    SUBCASE("zero target is rejected") {
        Fq f3 = Fq::make(3);
        WaringInstance inst(f3, 2, 2);
        CHECK_THROWS_AS(compare_report(inst, Poly::zero(), 1), std::invalid_argument);
    }

    SUBCASE("square family lands near the prediction") {
        Fq f3 = Fq::make(3);
        WaringInstance inst(f3, 2, 5);
        PredictionReport rep = compare_report(inst, poly_parse(f3, "t^2"), 2);
        CHECK(rep.P == 1);
        CHECK(rep.X == 2);
        CHECK(rep.exact_count == 2970);
        CHECK(rep.method == "brute");
        CHECK(rep.ratio > 0.5);
        CHECK(rep.ratio < 2.0);
        CHECK(rep.series_converged);
    }

    SUBCASE("cube instance fills every field") {
        Fq f2 = Fq::make(2);
        WaringInstance inst(f2, 3, 9);
        PredictionReport rep = compare_report(inst, poly_parse(f2, "t^3"), 1);
        CHECK(rep.q == 2);
        CHECK(rep.P == 1);
        CHECK(rep.X == 2);
        CHECK(!rep.exceptional);
        CHECK(rep.j_inf == j_infty(f2, 1, 3, 9));
        CHECK(rep.exact_count == count_reps_mitm(f2, poly_parse(f2, "t^3"), 3, 9, 2));
        CHECK(rep.main > 0.0);
        CHECK(rep.discrepancy_scaled ==
              doctest::Approx(std::abs((double)rep.exact_count - rep.main) /
                              std::pow(2.0, 6.0)));
    }

    SUBCASE("discrepancy shrinks as the degree grows") {
        Fq f3 = Fq::make(3);
        WaringInstance inst(f3, 2, 5);
        PredictionReport r1 = compare_report(inst, poly_parse(f3, "t^2+1"), 2);
        PredictionReport r2 = compare_report(inst, poly_parse(f3, "t^4+1"), 2);
        CHECK(std::abs(r2.ratio - 1.0) <= std::abs(r1.ratio - 1.0) + 1e-12);
    }
}

TEST_CASE("exceptional scan") {
    Fq f3 = Fq::make(3);
    WaringInstance inst(f3, 2, 5);
    auto psi = [](int P) { return (double)P + 1.0; };
    ExceptionalScanReport rep = exceptional_scan(inst, 5, 2, psi);
    CHECK(rep.entries.size() == pow_ll(3, 5) - 1);
    CHECK(rep.skipped_no_witness == 0);  // k = 2 < p needs no witness gate
    for (const auto& entry : rep.entries) {
        CHECK(entry.threshold ==
              doctest::Approx(std::pow(3.0, 3.0 * entry.P) / (entry.P + 1.0)));
        bool flag = std::abs((double)entry.count - entry.main) > entry.threshold;
        CHECK(entry.violator == flag);
    }
    // violator list matches the flags
    size_t flagged = 0;
    for (const auto& entry : rep.entries)
        if (entry.violator) ++flagged;
    CHECK(rep.violators.size() == flagged);
}
