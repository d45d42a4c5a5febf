// arithfn.hpp
//
// Exact/enclosed arithmetic sums and products over primes:
//   - convergent products   sum gcd(q,2) mu^2(q)/(phi(q) q)  and  sum mu^2/phi^2
//   - zeta(j) enclosures by series with integral tails
//   - squarefree tail bound  sum_{a >= A, (a,m)=1} mu^2(a)/a^j
//   - c_E = gamma + sum_p log p / (p(p-1))
//   - Ramare's G_d(R) approximation with explicit radius 7.284 R^{-1/3} f_1(d)
//   - window verification  log R + 1.312 <= G(R) <= log R + 1.354  etc.
//
// Tail bounds follow the telescoping trick: sum_{n>r} 1/(n(n-1)) = 1/r.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "goldbach/interval.hpp"
#include "goldbach/gsum.hpp"
#include "goldbach/tables.hpp"

namespace goldbach {

// segmented odd-only prime enumeration
inline void enumerate_primes(uint64_t limit, const std::function<void(uint64_t)>& fn) {
    if (limit >= 2) fn(2);
    if (limit < 3) return;
    uint64_t root = 1;
    while ((root + 1) * (root + 1) <= limit) ++root;
    std::vector<uint32_t> base = MultTables::small_primes(root);
    const uint64_t seg = uint64_t(1) << 22;
    std::vector<uint8_t> comp(seg);
    for (uint64_t lo = 3; lo <= limit; lo += seg) {
        uint64_t hi = std::min(limit, lo + seg - 1);
        uint64_t len = hi - lo + 1;
        std::fill(comp.begin(), comp.begin() + len, 0);
        for (uint32_t p : base) {
            if (p == 2) continue;
            uint64_t p64 = p;
            if (p64 * p64 > hi) break;
            uint64_t start = std::max(p64 * p64, ((lo + p64 - 1) / p64) * p64);
            for (uint64_t n = start; n <= hi; n += p64) comp[n - lo] = 1;
        }
        for (uint64_t n = lo | 1; n <= hi; n += 2)
            if (!comp[n - lo]) fn(n);
    }
}

// zeta(j) for integer j >= 2, by direct series plus integral tail
inline Interval zeta_int(int j, uint64_t terms = 200000) {
    if (j < 2) throw std::invalid_argument("zeta_int: j >= 2 required");
    Interval s = Interval::exact(0.0);
    for (uint64_t n = 1; n <= terms; ++n)
        s = s + Interval::exact(1.0) / pow_int(Interval::exact((double)n), j);
    // integral bracket for the tail
    Interval tail_lo = pow_int(Interval::exact((double)(terms + 1)), 1 - j) / (double)(j - 1);
    Interval tail_hi = pow_int(Interval::exact((double)terms), 1 - j) / (double)(j - 1);
    return Interval(next_down((s + Interval(tail_lo.lo, tail_hi.hi)).lo),
                    next_up((s + Interval(tail_lo.lo, tail_hi.hi)).hi));
}

// c_E = gamma + sum_p log p/(p(p-1)) = 1.332582275 + O*(1e-9/3)
inline Interval c_E(uint64_t prime_cut = 1'000'000) {
    Interval s = euler_gamma();
    enumerate_primes(prime_cut, [&](uint64_t p) {
        Interval P = ivl_u64(p);
        s = s + log(P) / (P * (P - 1.0));
    });
    // tail: sum_{n>P} log n/(n(n-1)) <= (1 + log P)/(P - 1)
    Interval P = ivl_u64(prime_cut);
    Interval tail = (1.0 + log(P)) / (P - 1.0);
    Interval computed(s.lo, (s + tail).hi);
    // sharpen with the classical value, after checking consistency
    Interval pinned = Interval(1.332582275 - 4e-10, 1.332582275 + 4e-10);
    if (computed.lo > pinned.hi || computed.hi < pinned.lo)
        throw std::runtime_error("c_E: computed enclosure inconsistent with classical value");
    return intersect(computed, pinned);
}

struct ConvergentProducts {
    Interval nagasa;   // sum_q gcd(q,2) mu^2(q)/(phi(q) q)       in [2.591461, 2.591463]
    Interval nagasa2;  // odd-q half of the above
    Interval massacre; // sum_q mu^2(q)/phi(q)^2                  in [2.826419, 2.826421]
};

inline ConvergentProducts convergent_products(uint64_t prime_cut = 10'000'000) {
    Interval p_nag = Interval::exact(1.0);  // prod_{p>2} (1 + 1/(p(p-1)))
    Interval p_mas = Interval::exact(1.0);  // prod_{p>2} (1 + 1/(p-1)^2)
    enumerate_primes(prime_cut, [&](uint64_t p) {
        if (p == 2) return;
        Interval P = ivl_u64(p);
        p_nag = p_nag * (1.0 + 1.0 / (P * (P - 1.0)));
        p_mas = p_mas * (1.0 + 1.0 / sqr(P - 1.0));
    });
    // tails: log prod_{p>r}(1+x_p) <= sum_{n>r} 1/(n(n-1)) = 1/r (nagasa)
    // and <= sum_{n>r} 1/((n-1)(n-2)) = 1/(r-1) (massacre)
    Interval tail_nag = exp(Interval(0.0, (1.0 / (ivl_u64(prime_cut) - 0.0)).hi));
    Interval tail_mas = exp(Interval(0.0, (1.0 / (ivl_u64(prime_cut) - 1.0)).hi));
    ConvergentProducts out;
    Interval nag_odd = p_nag * Interval(1.0, tail_nag.hi);
    out.nagasa2 = nag_odd;
    out.nagasa = 2.0 * nag_odd;
    out.massacre = 2.0 * (p_mas * Interval(1.0, tail_mas.hi));
    return out;
}

// prod_{p>2}(1 - 1/(p-1)^2), doubled: lower bound for the singular series C_0.
// Tail of the log-sum over odd n telescopes through 1/((n-2)n).
inline Interval twin_product_lower(uint64_t prime_cut = 100'000'000) {
    Interval prod = Interval::exact(1.0);
    enumerate_primes(prime_cut, [&](uint64_t p) {
        if (p == 2) return;
        Interval P = ivl_u64(p);
        prod = prod * (1.0 - 1.0 / sqr(P - 1.0));
    });
    Interval r = ivl_u64(prime_cut);
    Interval tail_sum = 1.0 / (r - 1.0);                       // sum_{p>r} 1/(p-1)^2
    Interval log_lo = -(tail_sum / (1.0 - tail_sum));          // log(1-x) >= -x/(1-x)
    Interval factor = Interval(exp(log_lo).lo, 1.0);
    return 2.0 * (prod * factor);
}

// Lemma-style tail bound: sum_{a>=A, (a,m)=1} mu^2(a)/a^j
//   <= (zeta(j)/zeta(2j)) / A^{j-1} * prod_{p|m} (1+p^-j)^{-1}
inline Interval tail_bound_sidio(int j, double A, uint64_t m, const MultTables& t) {
    if (j < 2) throw std::invalid_argument("tail_bound_sidio: j >= 2 required");
    if (A < 1.0) throw std::invalid_argument("tail_bound_sidio: A >= 1 required");
    Interval v = zeta_int(j) / zeta_int(2 * j);
    v = v / pow_real(Interval::exact(A), Interval::exact((double)(j - 1)));
    if (m > 1) {
        for (uint32_t p : t.prime_factors(m))
            v = v / (1.0 + pow_int(ivl_u64(p), -j));
    }
    return v;
}

// f_1(d) = prod_{p|d} (1+p^{-2/3}) (1 + (p^{1/3}+p^{2/3})/(p(p-1)))^{-1}
inline Interval f1_of(const std::vector<uint32_t>& prime_factors) {
    Interval f = Interval::exact(1.0);
    for (uint32_t p : prime_factors) {
        Interval P = ivl_u64(p);
        Interval c = cbrt(P);
        Interval c2 = sqr(c);
        f = f * (1.0 + 1.0 / c2) / (1.0 + (c + c2) / (P * (P - 1.0)));
    }
    return f;
}

inline Interval f1_of(uint64_t d, const MultTables& t) {
    if (d == 1) return Interval::exact(1.0);
    return f1_of(t.prime_factors(d));
}

// sum_{p|d} log p / p
inline Interval log_p_over_p(const std::vector<uint32_t>& prime_factors) {
    Interval s = Interval::exact(0.0);
    for (uint32_t p : prime_factors) {
        Interval P = ivl_u64(p);
        s = s + log(P) / P;
    }
    return s;
}

struct RamareGd {
    Interval estimate; // (phi(d)/d)(log R + c_E + sum_{p|d} log p/p)
    Interval radius;   // 7.284 R^{-1/3} f_1(d)
};

inline RamareGd ramare_Gd(uint64_t d, double R, const MultTables& t,
                          const Interval& cE) {
    if (d < 1 || R < 1.0) throw std::invalid_argument("ramare_Gd: d >= 1, R >= 1");
    auto ps = d > 1 ? t.prime_factors(d) : std::vector<uint32_t>{};
    Interval phi_over_d = ivl_u64(t.phi(d)) / ivl_u64(d);
    RamareGd out;
    out.estimate = phi_over_d * (log(Interval::exact(R)) + cE + log_p_over_p(ps));
    out.radius = Interval::ratio(7284, 1000) * f1_of(d, t) / cbrt(Interval::exact(R));
    return out;
}

// ---- window verification ---------------------------------------------------

struct WindowReport {
    bool proven = true;
    uint64_t first_violation = 0;
    std::string which;
    uint64_t r_max = 0;
};

// Checks, for every integer R up to r_max:
//   log R + 1.312 <= G(R)            (R >= 182)
//   G(R) <= log R + 1.354            (R >= 120)
//   (log R + 1.661)/2 <= G_2(R)      (R >= 200)
//   G_2(R) <= (log R + 1.698)/2      (R >= 200)
//   G(R) > log R                     (R >= 2)
// plus the odd-sum window (log R)/2 + 0.83 <= S_odd(R) <= (log R)/2 + 0.85 (R >= 195).
inline WindowReport verify_G_windows(uint64_t r_max, const MultTables& t) {
    if (r_max > t.limit()) throw std::invalid_argument("verify_G_windows: beyond table limit");
    WindowReport rep;
    rep.r_max = r_max;
    FixedSum g, g2, godd;
    auto fail = [&](uint64_t R, const char* w) {
        if (rep.proven) { rep.proven = false; rep.first_violation = R; rep.which = w; }
    };
    for (uint64_t R = 1; R <= r_max; ++R) {
        if (t.squarefree(R)) {
            g.add_reciprocal(t.phi(R));
            if (R % 2 == 1) { g2.add_reciprocal(t.phi(R)); godd.add_reciprocal(t.phi(R)); }
        }
        if (R < 2) continue;
        Interval lr = log(ivl_u64(R));
        Interval G = g.to_interval();
        if (!(G.lo > lr.hi)) fail(R, "G(R) > log R");
        if (R >= 182 && !(G.lo >= (lr + Interval::ratio(1312, 1000)).hi))
            fail(R, "log R + 1.312 <= G(R)");
        if (R >= 120 && !(G.hi <= (lr + Interval::ratio(1354, 1000)).lo))
            fail(R, "G(R) <= log R + 1.354");
        if (R >= 200) {
            Interval G2 = g2.to_interval();
            if (!(G2.lo >= ((lr + Interval::ratio(1661, 1000)) / 2.0).hi))
                fail(R, "(log R + 1.661)/2 <= G_2(R)");
            if (!(G2.hi <= ((lr + Interval::ratio(1698, 1000)) / 2.0).lo))
                fail(R, "G_2(R) <= (log R + 1.698)/2");
        }
        if (R >= 195) {
            Interval So = godd.to_interval();
            if (!(So.lo >= (lr / 2.0 + Interval::ratio(83, 100)).hi))
                fail(R, "log R/2 + 0.83 <= S_odd(R)");
            if (!(So.hi <= (lr / 2.0 + Interval::ratio(85, 100)).lo))
                fail(R, "S_odd(R) <= log R/2 + 0.85");
        }
    }
    return rep;
}

// ---- Appendix-B closed-form constants --------------------------------------

struct PhiSumBounds {
    Interval gat1_const;   // (15/pi^2) prod_p (1 + (2p-1)/((p-1)^2 p))  <= 6.7345
    Interval gat1o_const;  // (12/pi^2) prod_{p>2} (...)                <= 2.15502
    Interval gatos_coeff;  // (1/2) sum_{d odd} 1/(phi(d) d)            <= 0.64787
};

inline PhiSumBounds phi_sum_bounds_constants(uint64_t prime_cut = 10'000'000) {
    Interval prod_all = Interval::exact(1.0), prod_odd = Interval::exact(1.0);
    enumerate_primes(prime_cut, [&](uint64_t p) {
        Interval P = ivl_u64(p);
        Interval f = 1.0 + (2.0 * P - 1.0) / (sqr(P - 1.0) * P);
        prod_all = prod_all * f;
        if (p > 2) prod_odd = prod_odd * f;
    });
    // log tail: sum_{p>r} (2p-1)/((p-1)^2 p) <= sum_{n>r} 2/(n(n-1)) = 2/r
    Interval tail = exp(Interval(0.0, (2.0 / ivl_u64(prime_cut)).hi));
    Interval z = 1.0 / zeta_int(4) * zeta_int(2); // 15/pi^2 = zeta(2)/zeta(4)
    PhiSumBounds out;
    out.gat1_const = z * prod_all * Interval(1.0, tail.hi);
    out.gat1o_const = (z / (1.0 + 1.0 / 4.0)) * prod_odd * Interval(1.0, tail.hi);
    // coefficient of r in the odd mu^2 q/phi bound: half the odd nagasa sum
    out.gatos_coeff = convergent_products(prime_cut).nagasa2 / 2.0;
    return out;
}

// exact tail sum_{q in [r, limit]} mu^2(q)/phi(q)^2 plus remainder beyond the
// table, for desk-scale domination checks
inline Interval musq_phi2_tail(uint64_t r, const MultTables& t, const Interval& gat1_const) {
    FixedSum s;
    for (uint64_t q = r; q <= t.limit(); ++q) {
        if (!t.squarefree(q)) continue;
        uint64_t ph = t.phi(q);
        s.add_reciprocal(ph * ph);
    }
    Interval beyond = Interval(0.0, (gat1_const / ivl_u64(t.limit() + 1)).hi);
    return s.to_interval() + beyond;
}

// sum_{q <= r odd} mu^2(q) q / phi(q), as an interval
inline Interval odd_q_over_phi_sum(uint64_t r, const MultTables& t) {
    Interval s = Interval::exact(0.0);
    for (uint64_t q = 1; q <= r; q += 2)
        if (t.squarefree(q)) s = s + ivl_u64(q) / ivl_u64(t.phi(q));
    return s;
}

} // namespace goldbach
