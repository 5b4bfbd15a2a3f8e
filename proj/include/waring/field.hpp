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

#ifndef WARING_FIELD_HPP
#define WARING_FIELD_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace waring {

/// Elements of F_{p^e} are represented by their index in [0, q): the base-p
/// digits of the index are the coordinates in the power basis of the modulus,
/// lowest coordinate first.  Index 0 is the zero element, index 1 is one.
using felem = int;

namespace detail {

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (long long)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Arithmetic on dense F_p[x] coefficient vectors (low degree first), used for
// modulus validation and extension-field multiplication.
inline std::vector<int> fpx_trim(std::vector<int> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline std::vector<int> fpx_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return fpx_trim(std::move(r));
}

inline std::vector<int> fpx_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    a = fpx_trim(std::move(a));
    const int dm = (int)m.size() - 1;
    // inverse of leading coefficient of m
    int lc_inv = 1;
    for (int x = 1; x < p; ++x)
        if (m.back() * x % p == 1) { lc_inv = x; break; }
    while ((int)a.size() - 1 >= dm) {
        int shift = (int)a.size() - 1 - dm;
        int f = a.back() * lc_inv % p;
        for (int i = 0; i <= dm; ++i)
            a[shift + i] = ((a[shift + i] - f * m[i]) % p + p) % p;
        a = fpx_trim(std::move(a));
    }
    return a;
}

}  // namespace detail

class window_error : public std::runtime_error {
  public:
    explicit window_error(const std::string& what) : std::runtime_error(what) {}
};

/// A concrete finite field F_{p^e}, carrying its characteristic, extension
/// degree and (for e > 1) an irreducible modulus over F_p.  Irreducibility is
/// checked exhaustively at construction (e <= 8).
class Fq {
  public:
    int p = 2;
    int e = 1;
    int q = 2;
    std::vector<int> modulus;  // length e+1, low degree first, monic; {0,1} identity for e=1

    Fq() : Fq(2) {}

    explicit Fq(int p_) : Fq(p_, 1, {}) {}

    Fq(int p_, int e_, std::vector<int> mod) : p(p_), e(e_), modulus(std::move(mod)) {
        if (!detail::is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
        if (e < 1 || e > 8) throw std::invalid_argument("extension degree must be in [1, 8]");
        long long qq = 1;
        for (int i = 0; i < e; ++i) qq *= p;
        if (qq > (1 << 20)) throw std::invalid_argument("field too large");
        q = (int)qq;
        if (e == 1) {
            modulus = {0, 1};
        } else {
            for (int& c : modulus) c = ((c % p) + p) % p;
            modulus = detail::fpx_trim(std::move(modulus));
            if ((int)modulus.size() != e + 1)
                throw std::invalid_argument("modulus degree must equal extension degree");
            if (!irreducible(modulus, p))
                throw std::invalid_argument("modulus is reducible over F_p");
            if (modulus.back() != 1) {  // normalize to monic
                int inv = 1;
                for (int x = 1; x < p; ++x)
                    if (modulus.back() * x % p == 1) { inv = x; break; }
                for (int& c : modulus) c = c * inv % p;
            }
        }
        if (q <= 1024) build_tables();
    }

    /// Shipped fields: any prime p, plus canonical moduli for small prime powers.
    static Fq make(int q) {
        if (detail::is_prime(q)) return Fq(q);
        switch (q) {
            case 4: return Fq(2, 2, {1, 1, 1});        // u^2+u+1
            case 8: return Fq(2, 3, {1, 1, 0, 1});     // u^3+u+1
            case 9: return Fq(3, 2, {1, 0, 1});        // u^2+1
            case 16: return Fq(2, 4, {1, 1, 0, 0, 1}); // u^4+u+1
            case 25: return Fq(5, 2, {1, 1, 1});       // u^2+u+1
            case 27: return Fq(3, 3, {1, 2, 0, 1});    // u^3+2u+1
            default: throw std::invalid_argument("no canonical modulus shipped for q=" + std::to_string(q));
        }
    }

    static bool irreducible(const std::vector<int>& m, int p) {
        const int d = (int)m.size() - 1;
        if (d < 1) return false;
        // trial division by every monic polynomial of degree 1..d/2
        for (int dd = 1; 2 * dd <= d; ++dd) {
            long long count = 1;
            for (int i = 0; i < dd; ++i) count *= p;
            for (long long idx = 0; idx < count; ++idx) {
                std::vector<int> f(dd + 1, 0);
                long long t = idx;
                for (int i = 0; i < dd; ++i) { f[i] = (int)(t % p); t /= p; }
                f[dd] = 1;
                if (detail::fpx_mod(m, f, p).empty()) return false;
            }
        }
        return true;
    }

    std::vector<int> coords(felem a) const {
        std::vector<int> c(e);
        for (int i = 0; i < e; ++i) { c[i] = a % p; a /= p; }
        return c;
    }

    felem from_coords(const std::vector<int>& c) const {
        felem a = 0;
        for (int i = e - 1; i >= 0; --i) a = a * p + ((c[i] % p) + p) % p;
        return a;
    }

    felem add(felem a, felem b) const {
        felem r = 0, pw = 1;
        for (int i = 0; i < e; ++i) {
            r += (a % p + b % p) % p * pw;
            a /= p; b /= p; pw *= p;
        }
        return r;
    }

    felem neg(felem a) const {
        felem r = 0, pw = 1;
        for (int i = 0; i < e; ++i) {
            r += (p - a % p) % p * pw;
            a /= p; pw *= p;
        }
        return r;
    }

    felem sub(felem a, felem b) const { return add(a, neg(b)); }

    felem mul(felem a, felem b) const {
        if (!mul_table_.empty()) return mul_table_[(size_t)a * q + b];
        return mul_slow(a, b);
    }

    felem inv(felem a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        if (!inv_table_.empty()) return inv_table_[a];
        return pow(a, q - 2);
    }

    felem pow(felem a, long long n) const {
        if (n < 0) return pow(inv(a), -n);
        felem r = 1;
        while (n) {
            if (n & 1) r = mul(r, a);
            a = mul(a, a);
            n >>= 1;
        }
        return r;
    }

    /// tr(a) = a + a^p + ... + a^{p^{e-1}}, an element of the prime field
    /// returned as an integer residue in [0, p).
    int trace(felem a) const {
        if (!trace_table_.empty()) return trace_table_[a];
        return trace_slow(a);
    }

    /// e_q(a) = exp(2 pi i tr(a) / p)
    std::complex<double> char_eq(felem a) const {
        int t = trace(a);
        double ang = 2.0 * std::numbers::pi * t / p;
        return {std::cos(ang), std::sin(ang)};
    }

    bool operator==(const Fq& o) const { return p == o.p && e == o.e && modulus == o.modulus; }

  private:
    std::vector<felem> mul_table_;
    std::vector<felem> inv_table_;
    std::vector<int> trace_table_;

    felem mul_slow(felem a, felem b) const {
        if (e == 1) return a * b % p;
        std::vector<int> r = detail::fpx_mod(detail::fpx_mul(coords(a), coords(b), p), modulus, p);
        r.resize(e, 0);
        return from_coords(r);
    }

    int trace_slow(felem a) const {
        felem s = 0, x = a;
        for (int i = 0; i < e; ++i) {
            s = add(s, x);
            x = pow_slow(x, p);
        }
        return s % p;  // lies in the prime subfield, coords (t,0,...,0)
    }

    felem pow_slow(felem a, long long n) const {
        felem r = 1;
        while (n) {
            if (n & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            n >>= 1;
        }
        return r;
    }

    void build_tables() {
        mul_table_.resize((size_t)q * q);
        for (felem a = 0; a < q; ++a)
            for (felem b = 0; b < q; ++b)
                mul_table_[(size_t)a * q + b] = mul_slow(a, b);
        inv_table_.assign(q, 0);
        for (felem a = 1; a < q; ++a)
            for (felem b = 1; b < q; ++b)
                if (mul_table_[(size_t)a * q + b] == 1) { inv_table_[a] = b; break; }
        trace_table_.resize(q);
        for (felem a = 0; a < q; ++a) trace_table_[a] = trace_slow(a);
    }
};

/// Additive closure of the k-th powers of F_q; always a subfield.
inline std::vector<felem> jqk_closure(const Fq& f, long long k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::set<felem> s;
    for (felem x = 0; x < f.q; ++x) s.insert(f.pow(x, k));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<felem> cur(s.begin(), s.end());
        for (felem a : cur)
            for (felem b : cur)
                if (s.insert(f.add(a, b)).second) grew = true;
    }
    return {s.begin(), s.end()};
}

inline bool in_jqk(const Fq& f, long long k, felem x) {
    auto cl = jqk_closure(f, k);
    return std::find(cl.begin(), cl.end(), x) != cl.end();
}

}  // namespace waring

#endif  // WARING_FIELD_HPP
