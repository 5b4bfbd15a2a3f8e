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
#include <complex>
#include <random>

#include "waring/field.hpp"
#include "waring/laurent.hpp"
#include "waring/poly.hpp"
#include "waring/verify.hpp"

using namespace waring;

namespace {
const double TOL = 1e-9;

bool close(std::complex<double> a, std::complex<double> b, double tol = TOL) {
    return std::abs(a - b) <= tol;
}

std::complex<double> root_of_unity(int num, int den) {
    return std::polar(1.0, 2.0 * M_PI * num / den);
}
}  // namespace

TEST_CASE("trace values") {
    Fq f3 = Fq::make(3);
    CHECK(f3.trace(2) == 2);
    CHECK(f3.trace(0) == 0);

    // F_4 = F_2[u]/(u^2+u+1); u has index 2 (coords 0,1)
    Fq f4 = Fq::make(4);
    felem u = f4.from_coords({0, 1});
    CHECK(f4.trace(u) == 1);  // u + u^2 = u + (u+1) = 1
    CHECK(f4.trace(0) == 0);

    // additivity across the whole field
    for (felem a = 0; a < f4.q; ++a)
        for (felem b = 0; b < f4.q; ++b)
            CHECK(f4.trace(f4.add(a, b)) == (f4.trace(a) + f4.trace(b)) % f4.p);
}

TEST_CASE("additive character on field elements") {
    Fq f3 = Fq::make(3);
    CHECK(close(f3.char_eq(1), root_of_unity(1, 3)));

    Fq f2 = Fq::make(2);
    CHECK(close(f2.char_eq(1), std::complex<double>(-1.0, 0.0)));

    Fq f4 = Fq::make(4);
    felem u = f4.from_coords({0, 1});
    CHECK(close(f4.char_eq(u), std::complex<double>(-1.0, 0.0)));

    // full character sum vanishes
    for (int q : {2, 3, 4, 5, 8, 9}) {
        Fq f = Fq::make(q);
        std::complex<double> acc = 0.0;
        for (felem a = 0; a < f.q; ++a) acc += f.char_eq(a);
        CHECK(std::abs(acc) < 1e-12 * f.q);
    }
}

TEST_CASE("laurent expansion of rational functions") {
    Fq f3 = Fq::make(3);
    Poly one = Poly::constant(1);
    Poly t = Poly::monomial(1, 1);

    Laurent inv_t = laurent_of_rational(f3, one, t, -3);
    CHECK(inv_t.coeff_at(-1) == 1);
    CHECK(inv_t.coeff_at(-2) == 0);
    CHECK(inv_t.coeff_at(-3) == 0);

    // t/(t^2+1) = t^-1 - t^-3 + ... over F_3
    Poly den = poly_parse(f3, "t^2+1");
    Laurent w = laurent_of_rational(f3, t, den, -4);
    CHECK(w.coeff_at(-1) == 1);
    CHECK(w.coeff_at(-2) == 0);
    CHECK(w.coeff_at(-3) == 2);
    CHECK(w.coeff_at(-4) == 0);

    Fq f2 = Fq::make(2);
    Poly t2 = Poly::monomial(1, 1);
    Laurent v = laurent_of_rational(f2, poly_parse(f2, "t+1"), t2, -2);
    CHECK(laurent_int_part(v) == Poly::constant(1));
    CHECK(v.coeff_at(-1) == 1);
    CHECK(v.coeff_at(-2) == 0);
}

TEST_CASE("laurent expansion re-multiplies to the numerator window") {
    Fq f3 = Fq::make(3);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        Poly num = poly_from_index(f3, rng() % 81, 4);
        Poly den = poly_add(f3, poly_from_index(f3, rng() % 27, 3), Poly::monomial(1, 3));
        Laurent w = laurent_of_rational(f3, num, den, -10);
        Laurent back = laurent_mul_poly(f3, w, den);
        for (int e = back.top; e >= -6; --e) CHECK(back.coeff_at(e) == num.coeff(e < 0 ? -1 : e));
    }
}

TEST_CASE("additive character on laurent windows") {
    Fq f3 = Fq::make(3);
    Laurent a(-1, NEG_INF, {1});  // t^-1
    CHECK(close(char_e(f3, a), root_of_unity(1, 3)));

    Laurent b(-2, NEG_INF, {1});  // t^-2, residue 0
    CHECK(close(char_e(f3, b), std::complex<double>(1.0, 0.0)));
    Fq f5 = Fq::make(5);
    CHECK(close(char_e(f5, b), std::complex<double>(1.0, 0.0)));

    Poly t = Poly::monomial(1, 1);
    Laurent w = laurent_of_rational(f3, t, poly_parse(f3, "t^2+1"), -4);
    CHECK(close(char_e(f3, w), root_of_unity(1, 3)));
}

TEST_CASE("reading below a finite window fails loudly") {
    Laurent shallow(-1, -2, {1, 0});
    CHECK(shallow.coeff_at(-1) == 1);
    CHECK(shallow.coeff_at(-2) == 0);
    CHECK(shallow.coeff_at(5) == 0);  // above the top is provably zero
    CHECK_THROWS_AS(shallow.coeff_at(-3), window_error);
}

TEST_CASE("torus quadrature") {
    Fq f3 = Fq::make(3);
    Poly t = Poly::monomial(1, 1);

    // integral of e(t*alpha) vanishes
    auto ch = quadrature_T(f3, 2, [&](const Laurent& a) { return char_e(f3, laurent_mul_poly(f3, a, t)); });
    CHECK(std::abs(ch) < 1e-12);

    // normalized measure
    auto unit = quadrature_T(f3, 1, [&](const Laurent&) { return std::complex<double>(1.0); });
    CHECK(close(unit, std::complex<double>(1.0, 0.0)));

    // mean of |g|^2 counts pairs x^2 = y^2 in I_1 over F_2: exactly 2
    Fq f2 = Fq::make(2);
    auto m2 = quadrature_T(f2, 3, [&](const Laurent& a) {
        auto g = weyl_sum_g(f2, a, 1, 2);
        return g * std::conj(g);
    });
    CHECK(quadrature_round_int(m2) == 2);
}

TEST_CASE("quadrature kills every nonzero character exactly") {
    for (int q : {2, 3}) {
        Fq f = Fq::make(q);
        for (int M = 1; M <= 4; ++M) {
            for (long long hi = 0; hi < count_below(f, M); ++hi) {
                Poly h = poly_from_index(f, hi, M);
                auto v = quadrature_T(f, M, [&](const Laurent& a) {
                    return char_e(f, laurent_mul_poly(f, a, h));
                });
                if (h.is_zero())
                    CHECK(close(v, std::complex<double>(1.0, 0.0), 1e-9));
                else
                    CHECK(std::abs(v) < 1e-9);
            }
        }
    }
}

TEST_CASE("additive closure of k-th powers in the coefficient field") {
    Fq f7 = Fq::make(7);
    CHECK(jqk_closure(f7, 3).size() == 7);

    Fq f4 = Fq::make(4);
    auto cl = jqk_closure(f4, 3);
    CHECK(cl == std::vector<felem>({0, 1}));
    CHECK(in_jqk(f4, 3, 1));
    CHECK(!in_jqk(f4, 3, f4.from_coords({0, 1})));

    Fq f2 = Fq::make(2);
    CHECK(jqk_closure(f2, 5).size() == 2);
}

TEST_CASE("field construction validates the modulus") {
    CHECK_THROWS_AS(Fq(2, 2, {1, 0, 1}), std::invalid_argument);  // (u+1)^2
    CHECK_THROWS_AS(Fq(4), std::invalid_argument);                // composite characteristic
    CHECK_THROWS_AS(Fq(3, 2, {1, 1}), std::invalid_argument);     // degree mismatch
    CHECK_NOTHROW(Fq(2, 2, {1, 1, 1}));
}

TEST_CASE("polynomial text roundtrip") {
    Fq f3 = Fq::make(3);
    CHECK(poly_parse(f3, "0").is_zero());
    CHECK(poly_parse(f3, "t^2+2*t+1") == Poly{{1, 2, 1}});
    CHECK(poly_parse(f3, "-t") == Poly{{0, 2}});
    std::mt19937 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        Poly a = poly_from_index(f3, rng() % 243, 5);
        CHECK(poly_parse(f3, poly_to_string(f3, a)) == a);
    }
    Fq f4 = Fq::make(4);
    Poly b = poly_parse(f4, "[0,1]*t^3");
    CHECK(b.deg() == 3);
    CHECK(b.lead() == f4.from_coords({0, 1}));
    CHECK(poly_parse(f4, poly_to_string(f4, b)) == b);
}

TEST_CASE("enumeration order and index maps invert each other") {
    Fq f3 = Fq::make(3);
    // t^0 coefficient varies fastest
    CHECK(poly_from_index(f3, 1, 2) == Poly::constant(1));
    CHECK(poly_from_index(f3, 3, 2) == Poly::monomial(1, 1));
    for (long long i = 0; i < 81; ++i) {
        Poly a = poly_from_index(f3, i, 4);
        CHECK(poly_to_index(f3, a) == i);
        CHECK(poly_of_index(f3, i) == a);
    }
}

TEST_CASE("algebra invariant suite is green") {
    for (const auto& r : verify_algebra()) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}
