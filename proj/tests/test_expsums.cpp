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
#include <map>

#include "waring/arcs.hpp"
#include "waring/expsums.hpp"
#include "waring/verify.hpp"

using namespace waring;

namespace {
bool close(cplx a, cplx b, double tol = 1e-9) { return std::abs(a - b) <= tol; }
}  // namespace

TEST_CASE("power-sum values") {
    Fq f3 = Fq::make(3);
    CHECK(close(weyl_sum_g(f3, Laurent::zero(), 2, 3), cplx(9.0, 0.0)));

    // window headed strictly below the required depth: every residue is zero
    for (int q : {2, 3}) {
        Fq f = Fq::make(q);
        int X = 2, k = 3;
        Laurent deep(-k * (X - 1) - 2, NEG_INF, {1});
        CHECK(close(weyl_sum_g(f, deep, X, k), cplx((double)pow_ll(q, X), 0.0)));
    }

    // quadratic character sum over F_3 has modulus sqrt(3)
    Laurent a(-1, NEG_INF, {1});
    cplx g = weyl_sum_g(f3, a, 1, 2);
    cplx expected = 1.0 + 2.0 * std::polar(1.0, 2.0 * M_PI / 3.0);
    CHECK(close(g, expected));
    CHECK(std::abs(std::abs(g) - std::sqrt(3.0)) < 1e-9);
}

TEST_CASE("power sum rejects shallow windows") {
    Fq f3 = Fq::make(3);
    Laurent shallow(-1, -2, {1, 0});
    CHECK_THROWS_AS(weyl_sum_g(f3, shallow, 2, 3), window_error);  // needs depth -4
    CHECK_NOTHROW(weyl_sum_g(f3, shallow, 1, 2));
}

TEST_CASE("linear sum closed form") {
    Fq f2 = Fq::make(2);
    Laurent deep(-4, NEG_INF, {1});  // headed at t^{-Y-3} for Y=1
    CHECK(close(linear_sum(f2, deep, 1), cplx(4.0, 0.0)));

    Fq f3 = Fq::make(3);
    Laurent b(-1, NEG_INF, {1});
    CHECK(close(linear_sum(f3, b, 1), cplx(0.0, 0.0)));
    CHECK(close(linear_sum(f3, Laurent::zero(), 2), cplx(27.0, 0.0)));
}

TEST_CASE("linear sum equals its naive oracle on every window") {
    for (int q : {2, 3}) {
        Fq f = Fq::make(q);
        const int depth = 4;
        for (long long idx = 0; idx < pow_ll(q, depth); ++idx) {
            std::vector<felem> cc(depth);
            long long t = idx;
            for (int i = 0; i < depth; ++i) { cc[i] = (felem)(t % q); t /= q; }
            Laurent beta(-1, -depth, std::vector<felem>(cc));
            for (int Y = 0; Y <= 2; ++Y)
                CHECK(close(linear_sum(f, beta, Y), linear_sum_naive(f, beta, Y), 1e-7));
        }
    }
}

TEST_CASE("multi-exponent sum") {
    Fq f2 = Fq::make(2);
    CHECK(close(multi_sum_f(f2, {}, 3), cplx(8.0, 0.0)));

    // single slot at the top exponent reduces to the one-variable sum
    Fq f3 = Fq::make(3);
    Laurent a(-1, -7, {1, 0, 2, 0, 1, 0, 0});
    CHECK(close(multi_sum_f(f3, {{3, a}}, 2), weyl_sum_g(f3, a, 2, 3)));

    // x + x^3 vanishes identically on F_2, so every term is 1
    Laurent u(-1, NEG_INF, {1});
    CHECK(close(multi_sum_f(f2, {{1, u}, {3, u}}, 1), cplx(2.0, 0.0)));
}

TEST_CASE("combined sum with a top slot") {
    Fq f3 = Fq::make(3);
    CHECK(close(sum_F(f3, {}, Laurent::zero(), 1, 3), cplx(3.0, 0.0)));

    // lone linear slot is a complete character sum
    Laurent u(-1, NEG_INF, {1});
    CHECK(close(sum_F(f3, {{1, u}}, Laurent::zero(), 1, 3), cplx(0.0, 0.0)));

    // with no lower slots the sum is the plain power sum
    Laurent th(-1, -7, {1, 2, 0, 0, 1, 0, 2});
    CHECK(close(sum_F(f3, {}, th, 2, 3), weyl_sum_g(f3, th, 2, 3)));
}

TEST_CASE("shifted sum psi") {
    Fq f3 = Fq::make(3);
    const int k = 3, j0 = 2;

    SUBCASE("all-zero input attains the trivial bound") {
        for (int X : {1, 2}) {
            double bound = std::pow(3.0, j0 * (X - 1) + 1);
            CHECK(close(psi_sum(f3, Laurent::zero(), Laurent::zero(), 1, k, j0, X),
                        cplx(bound, 0.0)));
        }
    }

    SUBCASE("collapsed evaluation equals the naive double sum") {
        const int X = 2, depth = 7;
        std::mt19937 rng(31);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<felem> ct(depth), ca(depth);
            for (int i = 0; i < depth; ++i) { ct[i] = rng() % 3; ca[i] = rng() % 3; }
            Laurent theta(-1, -depth, std::move(ct));
            Laurent alpha(-1, -depth, std::move(ca));
            for (felem c : {1, 2})
                CHECK(close(psi_sum(f3, theta, alpha, c, k, j0, X),
                            psi_sum_naive(f3, theta, alpha, c, k, j0, X), 1e-6));
        }
    }

    SUBCASE("magnitude never exceeds the trivial bound") {
        const int X = 2, depth = 7;
        std::mt19937 rng(37);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<felem> ct(depth);
            for (int i = 0; i < depth; ++i) ct[i] = rng() % 3;
            Laurent theta(-1, -depth, std::move(ct));
            double v = std::abs(psi_sum(f3, theta, Laurent::zero(), 1, k, j0, X));
            CHECK(v <= std::pow(3.0, j0 * (X - 1) + 1) + 1e-9);
        }
    }

    SUBCASE("minor-arc input obeys the savings bound") {
        // every minor window at full certification depth stays below q^{(j0-1)X}
        const int X = 2, depth = (k - 1) * X + X + 1;
        ArcParams params(k, X);
        long long scanned = 0;
        for (long long idx = 0; idx < pow_ll(3, depth); idx += 13) {
            std::vector<felem> cc(depth);
            long long t = idx;
            for (int i = 0; i < depth; ++i) { cc[i] = (felem)(t % 3); t /= 3; }
            Laurent theta(-1, -depth, std::move(cc));
            if (classify(f3, theta, params).major) continue;
            ++scanned;
            double v = std::abs(psi_sum(f3, theta, Laurent::zero(), 1, k, j0, X));
            CHECK(v <= std::pow(3.0, (j0 - 1) * X) + 1e-9);
        }
        CHECK(scanned > 50);
    }
}

TEST_CASE("complete sums over residues mod g") {
    Fq f3 = Fq::make(3);
    Poly t = Poly::monomial(1, 1);
    Poly one = Poly::constant(1);

    cplx s = gauss_sum(f3, one, t, 2);
    CHECK(close(s, 1.0 + 2.0 * std::polar(1.0, 2.0 * M_PI / 3.0)));
    CHECK(std::abs(std::abs(s) - std::sqrt(3.0)) < 1e-9);

    for (int q : {2, 3, 5}) {
        Fq f = Fq::make(q);
        CHECK(std::abs(gauss_sum(f, Poly::constant(1), Poly::monomial(1, 1), 1)) < 1e-9);
    }

    Fq f2 = Fq::make(2);
    for (int k : {1, 2, 3, 7})
        CHECK(std::abs(gauss_sum(f2, one, Poly::monomial(1, 1), k)) < 1e-9);
}

TEST_CASE("complete sum argument validation") {
    Fq f3 = Fq::make(3);
    Poly t = Poly::monomial(1, 1);
    CHECK_THROWS_AS(gauss_sum(f3, Poly::constant(1), poly_scale(f3, 2, t), 2),
                    std::invalid_argument);  // not monic
    CHECK_THROWS_AS(gauss_sum(f3, t, poly_mul(f3, t, t), 2), std::invalid_argument);  // gcd
    CHECK_THROWS_AS(gauss_sum(f3, poly_mul(f3, t, t), t, 2), std::invalid_argument);  // deg a
}

TEST_CASE("conjugation symmetry") {
    Fq f3 = Fq::make(3);
    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<felem> cc(4);
        for (auto& c : cc) c = rng() % 3;
        Laurent a(-1, -4, std::vector<felem>(cc));
        cplx g = weyl_sum_g(f3, a, 2, 2);
        cplx gneg = weyl_sum_g(f3, laurent_neg(f3, a), 2, 2);
        CHECK(close(gneg, std::conj(g)));
        CHECK(std::abs((g * std::conj(g)).real() - std::norm(g)) < 1e-9);
    }
}

TEST_CASE("exponential sum invariant suite is green") {
    for (const auto& r : verify_sums()) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}
