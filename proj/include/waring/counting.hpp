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

#ifndef WARING_COUNTING_HPP
#define WARING_COUNTING_HPP

#include <map>
#include <optional>
#include <set>
#include <unordered_map>

#include "expsums.hpp"

namespace waring {

class budget_error : public std::runtime_error {
  public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

inline void check_budget(long long work, long long budget, const char* who) {
    if (work > budget)
        throw budget_error(std::string(who) + ": required work " + std::to_string(work) +
                           " exceeds budget " + std::to_string(budget));
}

/// n is exceptional when its leading coefficient falls outside the additive
/// closure of the k-th powers of F_q and k divides deg n.
inline bool is_exceptional(const Fq& f, const Poly& n, int k) {
    if (n.is_zero()) throw std::invalid_argument("is_exceptional: n must be nonzero");
    if (n.deg() % k != 0) return false;
    return !in_jqk(f, k, n.lead());
}

/// P_k(n): ceil(deg n / k), bumped by one in the exceptional case (there
/// k | deg n, so this is deg n / k + 1).
inline int strict_P(const Fq& f, const Poly& n, int k) {
    if (n.is_zero()) throw std::invalid_argument("strict_P: n must be nonzero");
    if (is_exceptional(f, n, k)) return n.deg() / k + 1;
    return (int)ceil_div(n.deg(), k);
}

/// b(n): the leading coefficient when k | deg n and n is not exceptional,
/// else 0.
inline felem b_of(const Fq& f, const Poly& n, int k) {
    if (n.is_zero()) throw std::invalid_argument("b_of: n must be nonzero");
    if (n.deg() % k != 0 || is_exceptional(f, n, k)) return 0;
    return n.lead();
}

struct StrictProblem {
    WaringInstance inst;
    Poly n;
    int P;
    int X;  // always P + 1
};

inline StrictProblem make_strict_problem(const WaringInstance& inst, const Poly& n) {
    int P = strict_P(inst.spec, n, inst.k);
    return {inst, n, P, P + 1};
}

// ---------------------------------------------------------------------------
// local solution count at the infinite place
// ---------------------------------------------------------------------------

/// #{(y_1..y_s) in F_q^s \ {0} : y_1^k + ... + y_s^k = b}, by direct s-fold
/// enumeration.
inline long long j_infty_direct(const Fq& f, felem b, int k, int s) {
    long long total = pow_ll(f.q, s);
    long long count = 0;
    std::vector<felem> pk(f.q);
    for (felem y = 0; y < f.q; ++y) pk[y] = f.pow(y, k);
    for (long long idx = 1; idx < total; ++idx) {  // idx 0 is the excluded zero vector
        long long t = idx;
        felem acc = 0;
        for (int i = 0; i < s; ++i) { acc = f.add(acc, pk[t % f.q]); t /= f.q; }
        if (acc == b) ++count;
    }
    return count;
}

/// Same count via s-fold additive convolution of the k-th power counting
/// vector over F_q; cost O(s q^2).
inline long long j_infty_convolution(const Fq& f, felem b, int k, int s) {
    std::vector<long long> base(f.q, 0);
    for (felem y = 0; y < f.q; ++y) ++base[f.pow(y, k)];
    std::vector<long long> acc(f.q, 0);
    acc[0] = 1;
    for (int i = 0; i < s; ++i) {
        std::vector<long long> next(f.q, 0);
        for (felem a = 0; a < f.q; ++a) {
            if (!acc[a]) continue;
            for (felem v = 0; v < f.q; ++v)
                if (base[v]) next[f.add(a, v)] += acc[a] * base[v];
        }
        acc = std::move(next);
    }
    long long count = acc[b];
    if (b == 0) count -= 1;  // remove the all-zero vector
    return count;
}

/// Both routes with mandatory agreement where the direct count is feasible.
inline long long j_infty(const Fq& f, felem b, int k, int s) {
    if (s < 1) throw std::invalid_argument("j_infty: s must be >= 1");
    long long conv = j_infty_convolution(f, b, k, s);
    double direct_cost = std::pow((double)f.q, s);
    if (direct_cost <= 1e7) {
        long long direct = j_infty_direct(f, b, k, s);
        if (direct != conv)
            throw std::logic_error("j_infty: direct and convolution counts disagree");
    }
    return conv;
}

// ---------------------------------------------------------------------------
// strict representation counts
// ---------------------------------------------------------------------------

/// R_{s,k}(n) by full enumeration of (I_X)^s.
inline long long count_reps_bruteforce(const Fq& f, const Poly& n, int k, int s, int X,
                                       long long budget = 100000000LL) {
    double work = std::pow((double)f.q, (double)X * s);
    if (work > (double)budget)
        throw budget_error("count_reps_bruteforce: q^(X*s) exceeds budget");
    const long long per = count_below(f, X);
    std::vector<Poly> powers((size_t)per);
    for (long long i = 0; i < per; ++i)
        powers[(size_t)i] = poly_pow(f, poly_from_index(f, i, X), k);
    long long count = 0;
    std::function<void(int, const Poly&)> rec = [&](int vars, const Poly& acc) {
        if (vars == 0) {
            if (acc == n) ++count;
            return;
        }
        for (long long i = 0; i < per; ++i) rec(vars - 1, poly_add(f, acc, powers[(size_t)i]));
    };
    rec(s, Poly{});
    return count;
}

namespace detail {

inline void accumulate_power_sums(const Fq& f, const std::vector<Poly>& powers, int vars,
                                  size_t at, const Poly& acc,
                                  std::unordered_map<long long, long long>& out) {
    if (vars == 0) {
        ++out[poly_to_index(f, acc)];
        return;
    }
    (void)at;
    for (const Poly& pw : powers)
        accumulate_power_sums(f, powers, vars - 1, 0, poly_add(f, acc, pw), out);
}

}  // namespace detail

/// R_{s,k}(n) by meet in the middle: hash all ceil(s/2)-fold power sums, then
/// probe with n minus each floor(s/2)-fold sum.
inline long long count_reps_mitm(const Fq& f, const Poly& n, int k, int s, int X,
                                 long long budget = 100000000LL) {
    const int s1 = (s + 1) / 2, s2 = s - s1;
    double work = std::pow((double)f.q, (double)X * s1);
    if (work > (double)budget)
        throw budget_error("count_reps_mitm: q^(X*max(s1,s2)) exceeds budget");
    const long long per = count_below(f, X);
    std::vector<Poly> powers((size_t)per);
    for (long long i = 0; i < per; ++i)
        powers[(size_t)i] = poly_pow(f, poly_from_index(f, i, X), k);
    std::unordered_map<long long, long long> left;
    detail::accumulate_power_sums(f, powers, s1, 0, Poly{}, left);
    if (s2 == 0) {
        auto it = left.find(poly_to_index(f, n));
        return it == left.end() ? 0 : it->second;
    }
    std::unordered_map<long long, long long> right;
    detail::accumulate_power_sums(f, powers, s2, 0, Poly{}, right);
    long long count = 0;
    for (const auto& [key, c2] : right) {
        Poly rest = poly_sub(f, n, poly_of_index(f, key));
        auto it = left.find(poly_to_index(f, rest));
        if (it != left.end()) count += it->second * c2;
    }
    return count;
}

// ---------------------------------------------------------------------------
// Vinogradov-type system counts
// ---------------------------------------------------------------------------

struct DiagonalSystem {
    std::set<int> exponents;
    int s;
    int X;
};

/// J_s: number of (u, v) in I_X^{2s} with equal power sums for every
/// exponent in the system.  Computed by hashing the power-sum signature of
/// each s-tuple; the count is the sum of squared multiplicities.
inline long long vinogradov_count(const Fq& f, const DiagonalSystem& sys,
                                  long long budget = 100000000LL) {
    if (sys.exponents.empty()) throw std::invalid_argument("vinogradov_count: empty exponent set");
    if (sys.s < 1 || sys.X < 0) throw std::invalid_argument("vinogradov_count: bad s or X");
    double work = std::pow((double)f.q, (double)sys.X * sys.s);
    if (work > (double)budget) throw budget_error("vinogradov_count: q^(sX) exceeds budget");
    const long long per = count_below(f, sys.X);
    std::map<std::vector<long long>, long long> sig;
    std::function<void(int, const std::vector<Poly>&)> rec = [&](int lvl,
                                                                 const std::vector<Poly>& sums) {
        if (lvl == sys.s) {
            std::vector<long long> key;
            key.reserve(sums.size());
            for (const Poly& ps : sums) key.push_back(poly_to_index(f, ps));
            ++sig[key];
            return;
        }
        for (long long i = 0; i < per; ++i) {
            Poly x = poly_from_index(f, i, sys.X);
            std::vector<Poly> next = sums;
            size_t slot = 0;
            for (int j : sys.exponents) {
                next[slot] = poly_add(f, next[slot], poly_pow(f, x, j));
                ++slot;
            }
            rec(lvl + 1, next);
        }
    };
    rec(0, std::vector<Poly>(sys.exponents.size()));
    long long total = 0;
    for (const auto& [key, c] : sig) total += c * c;
    return total;
}

/// Direct 2s-fold enumeration; oracle for vinogradov_count at tiny scale.
inline long long vinogradov_count_naive(const Fq& f, const DiagonalSystem& sys,
                                        long long budget = 100000000LL) {
    double work = std::pow((double)f.q, 2.0 * sys.X * sys.s);
    if (work > (double)budget) throw budget_error("vinogradov_count_naive: q^(2sX) exceeds budget");
    const long long per = count_below(f, sys.X);
    const long long tuples = pow_ll(per, sys.s);
    auto sums_of = [&](long long tupidx) {
        std::vector<Poly> sums(sys.exponents.size());
        long long t = tupidx;
        for (int i = 0; i < sys.s; ++i) {
            Poly x = poly_from_index(f, t % per, sys.X);
            t /= per;
            size_t slot = 0;
            for (int j : sys.exponents) {
                sums[slot] = poly_add(f, sums[slot], poly_pow(f, x, j));
                ++slot;
            }
        }
        return sums;
    };
    long long count = 0;
    for (long long u = 0; u < tuples; ++u) {
        auto su = sums_of(u);
        for (long long v = 0; v < tuples; ++v)
            if (su == sums_of(v)) ++count;
    }
    return count;
}

// ---------------------------------------------------------------------------
// witness search in the additive closure of k-th powers of polynomials
// ---------------------------------------------------------------------------

/// Bounded search for x_1..x_m with x_1^k + ... + x_m^k = n.  Absence of a
/// witness within the budget proves nothing.
inline std::optional<std::vector<Poly>> witness_in_jqk_ring(const Fq& f, const Poly& n, int k,
                                                            long long budget = 1000000LL,
                                                            int max_terms = -1, int Xw = -1) {
    if (n.is_zero()) return std::vector<Poly>{};  // empty sum
    if (Xw < 0) Xw = (int)ceil_div(n.deg(), k) + 1;
    if (max_terms < 0) max_terms = 2 * k + 2;
    const long long per = count_below(f, Xw);
    // distinct nonzero k-th powers together with a base whose power they are
    std::map<Poly, Poly> powers;
    for (long long i = 1; i < per; ++i) {
        Poly x = poly_from_index(f, i, Xw);
        powers.emplace(poly_pow(f, x, k), x);
    }
    std::vector<std::pair<Poly, Poly>> pw(powers.begin(), powers.end());
    long long nodes = 0;
    std::vector<Poly> chosen;
    std::function<bool(const Poly&, size_t, int)> rec = [&](const Poly& rest, size_t from,
                                                            int depth) -> bool {
        if (rest.is_zero()) return true;
        if (depth == 0) return false;
        for (size_t i = from; i < pw.size(); ++i) {
            if (++nodes > budget) return false;
            chosen.push_back(pw[i].second);
            if (rec(poly_sub(f, rest, pw[i].first), i, depth - 1)) return true;
            chosen.pop_back();
            if (nodes > budget) return false;
        }
        return false;
    };
    if (rec(n, 0, max_terms)) return chosen;
    return std::nullopt;
}

}  // namespace waring

#endif  // WARING_COUNTING_HPP
