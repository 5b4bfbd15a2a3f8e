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

#ifndef WARING_THRESHOLDS_HPP
#define WARING_THRESHOLDS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rational.hpp"

namespace waring {

/// Test-only hook: when set, the lowest base-p digit of n is perturbed inside
/// the digit-product binomial, simulating a corrupted build for the verify
/// command's failure path.
inline bool corrupt_lucas = false;

namespace detail {

inline bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// C(a, b) mod p for 0 <= a, b < p, by the Pascal recurrence
inline int small_binom_mod(int a, int b, int p) {
    if (b < 0 || b > a) return 0;
    long long num = 1, den = 1;
    for (int i = 0; i < b; ++i) {
        num = num * ((a - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    // den is invertible mod p since b < p
    long long inv = 1;
    for (long long x = 1; x < p; ++x)
        if (den * x % p == 1) { inv = x; break; }
    return (int)(num * inv % p);
}

inline std::vector<int> base_p_digits(long long n, int p) {
    std::vector<int> d;
    while (n) { d.push_back((int)(n % p)); n /= p; }
    if (d.empty()) d.push_back(0);
    return d;
}

}  // namespace detail

/// C(k, n) mod p via the digit-product rule.
inline int binom_mod_p(long long k, long long n, int p) {
    if (!detail::is_prime_ll(p)) throw std::invalid_argument("binom_mod_p: p must be prime");
    if (n < 0) throw std::invalid_argument("binom_mod_p: n must be >= 0");
    if (n > k) return 0;
    std::vector<int> dk = detail::base_p_digits(k, p);
    std::vector<int> dn = detail::base_p_digits(n, p);
    if (corrupt_lucas) dn[0] = (dn[0] + 1) % p;
    long long r = 1;
    for (size_t i = 0; i < dk.size(); ++i) {
        int ni = i < dn.size() ? dn[i] : 0;
        r = r * detail::small_binom_mod(dk[i], ni, p) % p;
        if (!r) break;
    }
    return (int)r;
}

/// Big-integer binomial reduced mod p; the independent oracle.
inline int binom_mod_p_bigint(long long k, long long n, int p) {
    using boost::multiprecision::cpp_int;
    if (n < 0 || n > k) return 0;
    cpp_int b = 1;
    for (long long i = 0; i < n; ++i) {
        b *= (k - i);
        b /= (i + 1);
    }
    return (int)(b % p);
}

/// Base-p digit sum of k; the number of differencing steps that u^k survives.
inline int h0_of(long long k, int p) {
    int s = 0;
    for (int d : detail::base_p_digits(k, p)) s += d;
    return s;
}

// ---------------------------------------------------------------------------
// j_0 and the exponent sets
// ---------------------------------------------------------------------------

/// largest j < k with p coprime to both j and C(k, j), by direct scan
inline int j0_scan(int k, int p) {
    for (int j = k - 1; j >= 1; --j)
        if (j % p != 0 && binom_mod_p(k, j, p) != 0) return j;
    throw std::logic_error("j0_scan: no admissible j found");
}

/// closed form: k-1 when p coprime to k-1; else k = m p^b + 1 gives (m-1)p^b + 1
inline int j0_closed(int k, int p) {
    if ((k - 1) % p != 0) return k - 1;
    long long rest = k - 1;
    long long pb = 1;
    while (rest % p == 0) { rest /= p; pb *= p; }
    long long m = rest;
    return (int)((m - 1) * pb + 1);
}

inline int j0_of(int k, int p) {
    if (k < 3) throw std::invalid_argument("j0_of: k must be >= 3");
    if (k % p == 0) throw std::invalid_argument("j0_of: p must not divide k");
    int a = j0_scan(k, p), b = j0_closed(k, p);
    if (a != b) throw std::logic_error("j0_of: scan and closed form disagree");
    return a;
}

struct ExponentSets {
    std::set<int> R;       // {1..j0, k} with k-1 adjoined
    std::set<int> Rprime;  // elements of R coprime to p
    int r = 0;             // |Rprime|
    long long kappa = 0;   // sum of Rprime
    std::vector<int> t;    // Rprime sorted ascending; t[r-2] = j0, t[r-1] = k
};

inline ExponentSets build_sets(int k, int p) {
    int j0 = j0_of(k, p);
    ExponentSets out;
    for (int j = 1; j <= j0; ++j) out.R.insert(j);
    out.R.insert(k - 1);
    out.R.insert(k);
    for (int j : out.R)
        if (j % p != 0) out.Rprime.insert(j);
    out.r = (int)out.Rprime.size();
    for (int j : out.Rprime) out.kappa += j;
    out.t.assign(out.Rprime.begin(), out.Rprime.end());
    // cross-check r against its closed forms
    long long r_formula;
    if ((k - 1) % p != 0) {
        r_formula = k - k / p;
    } else {
        long long rest = k - 1, pb = 1;
        while (rest % p == 0) { rest /= p; pb *= p; }
        // (1 - 1/p)(k - p^b) + (1 + 1/p), always an integer here
        Rat rf = Rat(p - 1, p) * Rat(k - pb) + Rat(p + 1, p);
        if (rf.denominator() != 1) throw std::logic_error("build_sets: r formula not integral");
        r_formula = rf.numerator();
    }
    if (out.r != r_formula) throw std::logic_error("build_sets: r disagrees with closed form");
    if (out.t[out.r - 1] != k || out.t[out.r - 2] != j0)
        throw std::logic_error("build_sets: top two exponents are not (j0, k)");
    return out;
}

/// Given l >= 1, membership of l in S is forced whenever some j in S has
/// C(j, l) coprime to p.
inline bool check_condition_star(const std::set<int>& S, int p, int probe_bound) {
    if (!S.empty() && probe_bound < *S.rbegin())
        throw std::invalid_argument("check_condition_star: probe bound below max of S");
    if (probe_bound > 5000)
        throw std::invalid_argument("check_condition_star: probe bound too large");
    // Pascal triangle mod p up to the probe bound; one pass beats repeated
    // digit products on dense grids
    int top = probe_bound + 1;
    std::vector<std::vector<int>> pas(top + 1);
    for (int i = 0; i <= top; ++i) {
        pas[i].assign(i + 1, 1);
        for (int j = 1; j < i; ++j) pas[i][j] = (pas[i - 1][j - 1] + pas[i - 1][j]) % p;
    }
    // the test hook must still reach this path
    auto binom = [&](int j, int l) {
        return corrupt_lucas ? binom_mod_p(j, l, p) : pas[j][l];
    };
    for (int l = 1; l <= probe_bound; ++l) {
        if (S.count(l)) continue;
        for (int j : S)
            if (j >= l && binom(j, l) != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// digit domination, shadows and maximal exponents
// ---------------------------------------------------------------------------

/// j precedes j2 when every base-p digit of j is <= the matching digit of j2
inline bool precedes_p(long long j, long long j2, int p) {
    while (j || j2) {
        if (j % p > j2 % p) return false;
        j /= p;
        j2 /= p;
    }
    return true;
}

inline std::set<long long> shadow(const std::set<long long>& K, int p) {
    std::set<long long> out;
    long long top = K.empty() ? 0 : *K.rbegin();
    for (long long j = 1; j <= top; ++j)
        for (long long k : K)
            if (precedes_p(j, k, p)) { out.insert(j); break; }
    return out;
}

inline std::set<long long> k_star(const std::set<long long>& K, int p) {
    std::set<long long> sh = shadow(K, p);
    long long top = sh.empty() ? 0 : *sh.rbegin();
    std::set<long long> out;
    for (long long k : K) {
        if (k % p == 0) continue;
        bool clean = true;
        for (long long v = (long long)p * k; v <= top; v *= p)
            if (sh.count(v)) { clean = false; break; }
        if (clean) out.insert(k);
    }
    return out;
}

inline bool is_maximal(long long k, const std::set<long long>& K, int p) {
    return k_star(K, p).count(k) > 0;
}

// ---------------------------------------------------------------------------
// symbolic Weyl differencing over F_p
// ---------------------------------------------------------------------------

/// Sparse polynomial over F_p in u, z_1, ..., z_h; exponent vector keys with
/// slot 0 = u and slot i = z_i.
struct MultiPoly {
    int nvars = 1;
    std::map<std::vector<int>, int> terms;  // no zero coefficients stored

    static MultiPoly power_of_u(int k, int p) {
        MultiPoly w;
        (void)p;
        w.terms[{k}] = 1;
        return w;
    }

    bool is_zero() const { return terms.empty(); }
};

/// One differencing step w(u) -> w(u + z) - w(u) with a fresh variable z.
inline MultiPoly weyl_diff_once(const MultiPoly& w, int p) {
    MultiPoly out;
    out.nvars = w.nvars + 1;
    auto add_term = [&](std::vector<int> key, int c) {
        c %= p;
        if (!c) return;
        auto [it, fresh] = out.terms.emplace(std::move(key), 0);
        it->second = ((it->second + c) % p + p) % p;
        if (!it->second) out.terms.erase(it);
    };
    for (const auto& [key, c] : w.terms) {
        int a = key[0];
        for (int i = 0; i <= a; ++i) {
            int bc = binom_mod_p(a, i, p);
            if (!bc) continue;
            std::vector<int> nk(key.begin(), key.end());
            nk[0] = i;
            nk.push_back(a - i);  // fresh z exponent
            add_term(std::move(nk), c * bc % p);
        }
        // subtract w(u) itself
        std::vector<int> nk(key.begin(), key.end());
        nk.push_back(0);
        add_term(std::move(nk), p - (c % p));
    }
    return out;
}

inline MultiPoly weyl_diff(MultiPoly w, int h, int p) {
    for (int i = 0; i < h; ++i) w = weyl_diff_once(w, p);
    return w;
}

// ---------------------------------------------------------------------------
// delta_0, s_1, u_2 and the closed forms
// ---------------------------------------------------------------------------

enum class CaseTag { k_equals_2, p_divides_k, k_below_p, coprime_km1, m_equals_1, m_above_1 };

inline std::string case_tag_name(CaseTag t) {
    switch (t) {
        case CaseTag::k_equals_2: return "k=2";
        case CaseTag::p_divides_k: return "p|k";
        case CaseTag::k_below_p: return "k<p";
        case CaseTag::coprime_km1: return "p!|(k-1)";
        case CaseTag::m_equals_1: return "k=p^b+1";
        case CaseTag::m_above_1: return "k=m*p^b+1";
    }
    return "?";
}

/// Decompose k - 1 = m p^b with p coprime to m; meaningful when p | k - 1.
inline void split_km1(int k, int p, int& m, int& b) {
    long long rest = k - 1;
    b = 0;
    while (rest % p == 0) { rest /= p; ++b; }
    m = (int)rest;
}

inline CaseTag classify_case(int k, int p) {
    if (k % p == 0) return CaseTag::p_divides_k;
    if (k == 2) return CaseTag::k_equals_2;
    if (k < p) return CaseTag::k_below_p;
    if ((k - 1) % p != 0) return CaseTag::coprime_km1;
    int m, b;
    split_km1(k, p, m, b);
    return m == 1 ? CaseTag::m_equals_1 : CaseTag::m_above_1;
}

inline Rat delta0_of(int k, int p) {
    if (k < 3 || k % p == 0) throw std::invalid_argument("delta0_of: need k >= 3 and p coprime to k");
    switch (classify_case(k, p)) {
        case CaseTag::k_below_p:
        case CaseTag::coprime_km1:
            return Rat(1);
        case CaseTag::m_equals_1: {
            int m, b;
            split_km1(k, p, m, b);
            long long pb = 1;
            for (int i = 0; i < b; ++i) pb *= p;
            return Rat(1, 16 * (pb + 2));
        }
        case CaseTag::m_above_1: {
            int m, b;
            split_km1(k, p, m, b);
            long long pb = 1;
            for (int i = 0; i < b; ++i) pb *= p;
            return Rat(1, 4 * pb);
        }
        default:
            throw std::invalid_argument("delta0_of: no case applies");
    }
}

struct CandidateRow {
    int j;
    long long s_candidate;  // value competing for s_1 at this j
    long long u_candidate;  // value competing for u_2 at this j
};

/// Candidate table for the k < p minimization; j ranges over
/// 1 <= j < k with 2^j <= k(2k+1).
inline std::vector<CandidateRow> below_p_candidates(int k) {
    std::vector<CandidateRow> rows;
    long long cap = (long long)k * (2 * k + 1);
    long long twoj = 2;
    for (int j = 1; j < k && twoj <= cap; ++j, twoj *= 2) {
        long long s_val = 2LL * k * k + 1 - ceil_div(2LL * k * j - twoj, k + 1 - j);
        long long u_val = (long long)k * k + 1 - ceil_div((long long)k * j - twoj / 2, k + 1 - j);
        rows.push_back({j, s_val, u_val});
    }
    return rows;
}

struct MinResult {
    long long value;
    int minimizer_j;  // -1 when the case has no minimization
};

inline MinResult s1_of(int k, int p) {
    switch (classify_case(k, p)) {
        case CaseTag::k_below_p: {
            MinResult best{(long long)1 << 62, -1};
            for (const CandidateRow& row : below_p_candidates(k))
                if (row.s_candidate < best.value) best = {row.s_candidate, row.j};
            return best;
        }
        case CaseTag::coprime_km1: {
            long long r = build_sets(k, p).r;
            return {2 * r * k + 1 - ceil_div(6 * r - 8, k - 2), -1};
        }
        case CaseTag::m_equals_1:
            return {4LL * k + 5, -1};
        case CaseTag::m_above_1: {
            int m, b;
            split_km1(k, p, m, b);
            long long r = build_sets(k, p).r;
            Rat fl = Rat(m - 1) * Rat(p - 1, p) / 2;
            return {2 * r * k + 2 * r - rat_floor(fl), -1};
        }
        default:
            throw std::invalid_argument("s1_of: defined only for k >= 3 with p coprime to k");
    }
}

inline MinResult u2_of(int k, int p) {
    switch (classify_case(k, p)) {
        case CaseTag::k_below_p: {
            MinResult best{(long long)1 << 62, -1};
            for (const CandidateRow& row : below_p_candidates(k))
                if (row.u_candidate < best.value) best = {row.u_candidate, row.j};
            return best;
        }
        case CaseTag::coprime_km1: {
            long long r = build_sets(k, p).r;
            return {r * k + 1 - ceil_div(3 * r - 4, k - 2), -1};
        }
        case CaseTag::m_equals_1:
            return {2LL * k + 3, -1};
        case CaseTag::m_above_1: {
            int m, b;
            split_km1(k, p, m, b);
            long long r = build_sets(k, p).r;
            Rat fl = Rat(m - 1) * Rat(p - 1, p) / 4;
            return {r * k + r - rat_floor(fl), -1};
        }
        default:
            throw std::invalid_argument("u2_of: defined only for k >= 3 with p coprime to k");
    }
}

/// Closed forms for k > p, which must coincide with s1_of/u2_of; evaluating
/// both sides is the executable version of the underlying algebra.
inline std::pair<long long, long long> theorem_closed_forms(int k, int p) {
    switch (classify_case(k, p)) {
        case CaseTag::coprime_km1: {
            if (k <= p) throw std::invalid_argument("theorem_closed_forms: need k > p");
            long long f = k / p;
            long long s1 = 2LL * k * (k - f) - 5 + floor_div(6 * f - 4, k - 2);
            long long u2 = (long long)k * (k - f) - 2 + floor_div(3 * f - 2, k - 2);
            return {s1, u2};
        }
        case CaseTag::m_equals_1:
            return {4LL * k + 5, 2LL * k + 3};
        case CaseTag::m_above_1: {
            int m, b;
            split_km1(k, p, m, b);
            long long pb = 1;
            for (int i = 0; i < b; ++i) pb *= p;
            long long pb1 = pb / p;  // p^{b-1}
            Rat ck = Rat(2) * (Rat(pb - pb1 - 1) - Rat(1, p)) +
                     Rat(rat_floor(Rat(m - 1) * Rat(p - 1, p) / 2));
            Rat s1r = (Rat(2) - Rat(2, p)) * Rat((long long)k * k) -
                      Rat(2 * (pb - pb1 - 2)) * Rat(k) - ck;
            Rat ckp = (Rat(pb - pb1 - 1) - Rat(1, p)) +
                      Rat(rat_floor(Rat(m - 1) * Rat(p - 1, p) / 4));
            Rat u2r = (Rat(1) - Rat(1, p)) * Rat((long long)k * k) -
                      Rat(pb - pb1 - 2) * Rat(k) - ckp;
            if (s1r.denominator() != 1 || u2r.denominator() != 1)
                throw std::logic_error("theorem_closed_forms: non-integral closed form");
            return {s1r.numerator(), u2r.numerator()};
        }
        default:
            throw std::invalid_argument("theorem_closed_forms: k > p cases only");
    }
}

struct ThresholdReport {
    int p = 0, k = 0;
    CaseTag tag = CaseTag::p_divides_k;
    int b = 0, m = 0;
    int j0 = -1;
    std::vector<int> R_set, Rprime_set;
    int r = -1;
    long long kappa = -1;
    int h0 = -1;
    Rat delta0{0};
    long long s1 = -1, u2 = -1;
    long long closed_s1 = -1, closed_u2 = -1;
    long long G_bound = -1, Gplus_bound = -1;
    int minimizer_j_s1 = -1, minimizer_j_u2 = -1;
    std::vector<CandidateRow> candidates;  // populated for k < p
};

inline ThresholdReport threshold_report(int k, int p) {
    ThresholdReport rep;
    rep.p = p;
    rep.k = k;
    rep.tag = classify_case(k, p);
    rep.h0 = h0_of(k, p);
    if (rep.tag == CaseTag::p_divides_k) return rep;
    if (rep.tag == CaseTag::k_equals_2) {
        rep.delta0 = Rat(1);  // p never divides k - 1 = 1
        rep.G_bound = 5;
        return rep;
    }
    if (rep.tag == CaseTag::m_equals_1 || rep.tag == CaseTag::m_above_1)
        split_km1(k, p, rep.m, rep.b);
    rep.j0 = j0_of(k, p);
    ExponentSets es = build_sets(k, p);
    rep.R_set.assign(es.R.begin(), es.R.end());
    rep.Rprime_set.assign(es.Rprime.begin(), es.Rprime.end());
    rep.r = es.r;
    rep.kappa = es.kappa;
    rep.delta0 = delta0_of(k, p);
    MinResult s1 = s1_of(k, p), u2 = u2_of(k, p);
    rep.s1 = s1.value;
    rep.u2 = u2.value;
    rep.minimizer_j_s1 = s1.minimizer_j;
    rep.minimizer_j_u2 = u2.minimizer_j;
    if (rep.tag == CaseTag::k_below_p) rep.candidates = below_p_candidates(k);
    if (k > p) {
        auto [cs, cu] = theorem_closed_forms(k, p);
        rep.closed_s1 = cs;
        rep.closed_u2 = cu;
        if (cs != rep.s1 || cu != rep.u2)
            throw std::logic_error("threshold_report: closed form disagrees with case formula at k=" +
                                   std::to_string(k) + ", p=" + std::to_string(p));
    }
    rep.G_bound = std::max(rep.s1, 2LL * k + 1);
    rep.Gplus_bound = std::max(rep.u2, 2LL * k + 1);
    return rep;
}

inline std::vector<ThresholdReport> bounds_table(int p, int kmin, int kmax) {
    if (!detail::is_prime_ll(p)) throw std::invalid_argument("bounds_table: p must be prime");
    if (kmin < 2 || kmax < kmin) throw std::invalid_argument("bounds_table: bad k range");
    std::vector<ThresholdReport> rows;
    for (int k = kmin; k <= kmax; ++k) rows.push_back(threshold_report(k, p));
    return rows;
}

}  // namespace waring

#endif  // WARING_THRESHOLDS_HPP
