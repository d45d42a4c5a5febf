// major.hpp
//
// Major-arc evaluators: the l^2 bound over the arcs, the singular series,
// the main-term constant C_{eta_circ, eta_star}, and the total major-arc
// lower bound.
//
// All chains are assembled for x >= x_+ (default 4.9e26) with kappa = 49,
// r = 150000, delta0 = 8.  Where a quantity decreases in x the evaluation
// happens at x_+ together with an interval certificate that the derivative
// factor is negative on [log x_+, infinity).

#pragma once

#include <cstdint>
#include <stdexcept>

#include "goldbach/arithfn.hpp"
#include "goldbach/interval.hpp"
#include "goldbach/pinned.hpp"
#include "goldbach/smoothing.hpp"

namespace goldbach {

struct MajorParams {
    uint64_t r = 150000;
    double delta0 = 8.0;
    double kappa = 49.0;
    PinnedConstants pinned;
};

struct L2MajorResult {
    Interval L;            // the arc l^2 main factor
    Interval A;            // (1/x) integral over the arcs of |S_{eta_plus}|^2
    Interval err_trivial;  // 5.19 delta0 r (ET (|eta|_1 + ET/2))
    Interval err_nonpriv;  // delta0 r log(2 e^2 r) (E^2 + K_{r,2}/x)
    Interval K_r2_coeff;   // K_{r,2}/x at x_+
};

// K_{r,2}/x = (1+sqrt(2r)) (log x)^2 |eta|_inf (2|eta|_1 + ...) / x, decreasing
// in x for log x > 2; evaluated at x_+.
inline Interval k_r2_over_x(const MajorParams& mp, const NormSet& plus_norms) {
    Interval Lx = log(Interval::exact(mp.pinned.x_plus));
    // decreasing: d/dL (2 log L - L) = 2/L - 1 < 0 on [Lx, inf)
    Interval dcheck = 2.0 / Interval(Lx.lo, std::numeric_limits<double>::infinity()) - 1.0;
    if (!(dcheck.hi < 0.0)) throw std::logic_error("k_r2_over_x: monotonicity check failed");
    Interval root = 1.0 + sqrt(Interval::exact(2.0 * (double)mp.r));
    Interval xp = Interval::exact(mp.pinned.x_plus);
    Interval k = root * sqr(Lx) * plus_norms.linf.value *
                 (2.0 * plus_norms.l1.value + root * sqr(Lx) * plus_norms.linf.value / xp);
    Interval v = k / xp;
    return Interval(0.0, v.hi);
}

// the arc l^2 factor L and the full enclosure A
inline L2MajorResult l2_major(const MajorParams& mp, const Interval& odd_phi_sum,
                              const NormSet& circ_norms, const NormSet& plus_norms) {
    if (mp.r < 182) throw std::invalid_argument("l2_major: r >= 182 required");
    const PinnedConstants& pc = mp.pinned;
    Interval r = ivl_u64(mp.r);
    Interval lr = log(r);

    // upper: L <= 2 |eta_plus|_2^2 * sum
    Interval upper = 2.0 * sqr(plus_norms.l2.value) * odd_phi_sum;

    // lower: 2 |eta_circ|_2^2 sum - (log r + 1.7)(2|eta_circ|_2 d + d^2)
    //        - (2 |eta_circ'''|_1^2/(5 pi^6 delta0^5)) (0.64787 + log r/4r + 0.425/r)
    Interval d = pc.eta_plus.dist_eta_circ_l2;
    Interval slack1 = (lr + Interval::ratio(17, 10)) *
                      (2.0 * circ_norms.l2.value * d + sqr(d));
    Interval tail_coeff = Interval::ratio(64787, 100000) + lr / (4.0 * r) +
                          Interval::ratio(425, 1000) / r;
    Interval d0p5 = pow_int(Interval::exact(mp.delta0), 5);
    Interval slack2 = (2.0 * sqr(circ_norms.l1_d3.value) / (5.0 * pow_int(pi(), 6) * d0p5)) *
                      tail_coeff;
    Interval base = 2.0 * sqr(circ_norms.l2.value) * odd_phi_sum;
    double L_lo = (base - slack1 - slack2).lo;
    double L_hi = std::min(upper.hi, (base + slack1 + slack2).hi);

    L2MajorResult out;
    out.L = Interval(L_lo, L_hi);

    // error terms of the arc integral
    Interval ET = pc.et_eta_plus;
    out.err_trivial = Interval::ratio(519, 100) * mp.delta0 * (double)mp.r *
                      (ET * (plus_norms.l1.value + ET / 2.0));
    out.K_r2_coeff = k_r2_over_x(mp, plus_norms);
    Interval log2e2r = log(2.0 * exp(Interval::exact(2.0)) * r);
    out.err_nonpriv = Interval::exact(mp.delta0) * r * log2e2r *
                      (sqr(pc.e_eta_plus) + out.K_r2_coeff);
    double e = out.err_trivial.hi + out.err_nonpriv.hi;
    out.A = Interval(out.L.lo - e, out.L.hi + e);
    return out;
}

// ---------------------------------------------------------------------------
// singular series

// lower bound over odd N: 2 prod_{p>2} (1 - 1/(p-1)^2)
inline Interval C0_lower(uint64_t prime_cut = 100'000'000) {
    return twin_product_lower(prime_cut);
}

// exact-form C_0 for a given N with known prime factorization:
//   prod_{p|N} (1 - 1/(p-1)^2) * prod_{p not | N} (1 + 1/(p-1)^3)
inline Interval C0_exact(const std::vector<uint64_t>& n_primes, uint64_t prime_cut = 1'000'000) {
    for (uint64_t p : n_primes)
        if (p == 2) return Interval::exact(0.0); // factor at 2 vanishes
    Interval prod = Interval::exact(1.0);
    enumerate_primes(prime_cut, [&](uint64_t p) {
        Interval P = ivl_u64(p);
        bool divides = false;
        for (uint64_t q : n_primes) divides |= (q == p);
        if (divides) prod = prod * (1.0 - 1.0 / sqr(P - 1.0));
        else prod = prod * (1.0 + 1.0 / pow_int(P - 1.0, 3));
    });
    // tail: remaining factors of the second kind, log-sum <= sum 1/(n-1)^3 <= 1/(2(r-1)^2)
    Interval r = ivl_u64(prime_cut);
    Interval tail_hi = exp(Interval(0.0, (1.0 / (2.0 * sqr(r - 1.0))).hi));
    for (uint64_t q : n_primes)
        if (q > prime_cut) {
            Interval P = ivl_u64(q);
            prod = prod * (1.0 - 1.0 / sqr(P - 1.0)) / (1.0 + 1.0 / pow_int(P - 1.0, 3));
        }
    return prod * Interval(1.0, tail_hi.hi);
}

// ---------------------------------------------------------------------------
// the main-term constant C_{eta_circ, eta_star} and the total

struct CEtaStarResult {
    Interval c1;            // optimal offset (9/4)/sqrt(2 pi)
    Interval moment_term;   // 2.71 |eta_circ'|_2^2 ((49/48)sqrt(pi/2) - (81/32)/sqrt(2pi)) / kappa^3
    Interval gauss_tail;    // |eta_circ|_2^2 (2 + 1/kappa^2) e^{-2 kappa^2}
    Interval lower_scaled;  // kappa * C_{eta_circ,eta_star} lower bound
};

inline CEtaStarResult C_eta_star(double kappa, const NormSet& circ_norms) {
    if (kappa < 1.0) throw std::invalid_argument("C_eta_star: kappa >= 1");
    CEtaStarResult out;
    Interval kap = Interval::exact(kappa);
    Interval sp2 = sqrt(pi() / 2.0);
    out.c1 = Interval::ratio(9, 4) / sqrt(2.0 * pi());
    // (49/48) sqrt(pi/2) - (9/4) c1 + sqrt(pi/2) c1^2 at the optimal c1
    Interval moment = Interval::ratio(49, 48) * sp2 -
                      Interval::ratio(81, 32) / sqrt(2.0 * pi());
    out.moment_term = Interval::ratio(271, 100) * circ_norms.l2_deriv.value * moment / pow_int(kap, 3);
    out.gauss_tail = sqr(circ_norms.l2.value) * (2.0 + 1.0 / sqr(kap)) * exp(-2.0 * sqr(kap));
    // kappa*C >= |phi|_1 |eta|_2^2 - kappa (2+1/k^2) e^{-2k^2} |eta|_2^2
    //          - 2.71 |eta'|_2^2 moment / kappa^2
    Interval lower = sp2 * sqr(circ_norms.l2.value) - kap * out.gauss_tail -
                     Interval::ratio(271, 100) * circ_norms.l2_deriv.value * moment / sqr(kap);
    out.lower_scaled = Interval(lower.lo, (sp2 * sqr(circ_norms.l2.value)).hi);
    return out;
}

struct MajorBound {
    Interval L;             // arc l^2 factor
    Interval A;             // arcs integral over x
    Interval C0_low;        // singular series lower bound
    Interval C_eta_scaled;  // kappa * C_{eta_circ,eta_star}
    Interval eps0_line;     // first error line of the total
    Interval ea_line;       // E*A error line, as coefficient of x^2/kappa
    Interval ls_line_coeff; // third error line coefficient at x_+, of x^2/kappa
    Interval total_coeff;   // lower bound for kappa * (major total)/x^2
};

struct AuxBounds {
    Interval LS_eta_star_logx;   // coefficient of log x
    Interval LS_eta_star_const;
    Interval LS_eta_plus_logx;
    Interval LS_eta_plus_const;
    Interval Z_plus2_logx_coeff; // Z_{eta_plus^2,2} <= coeff * x log x
    Interval Z_star2_logx_coeff; // Z_{eta_star^2,2} <= coeff * log x
    Interval eta_star_l22_scaled; // kappa |eta_star|_2^2
};

inline AuxBounds aux_bounds(const MajorParams& mp, const NormSet& star_norms,
                            const NormSet& plus_norms) {
    AuxBounds out;
    Interval lr = log(ivl_u64(mp.r));
    out.LS_eta_star_logx = lr * star_norms.linf.value / ln2();
    out.LS_eta_star_const = 2.0 * lr * star_norms.linf_t.value;
    out.LS_eta_plus_logx = lr * plus_norms.linf.value / ln2();
    out.LS_eta_plus_const = 2.0 * lr * plus_norms.linf_t.value;
    // 0.640206 + 3e-6 = 0.640209 exactly in decimal; the double 0.640209
    // rounds up from it, so capping the outward-stepped sum there is sound
    Interval zp = mp.pinned.malavita_m0 + mp.pinned.malavita_eps;
    out.Z_plus2_logx_coeff = Interval(zp.lo, std::min(zp.hi, 0.640209));
    // Z_{eta_star^2,2} <= (|eta_star|_1 + err_chi0)(|eta_star log^+(kappa t)|_inf
    //                     + |eta_star|_inf log(x/kappa)); uniform coefficient of log x
    Interval l1s = sqrt(pi() / 2.0) / mp.kappa + mp.pinned.err_eta_star_chi0;
    auto philog_f = [](const Interval& t) {
        return sqr(t) * exp(-sqr(t) / 2.0) * log(t);
    };
    Interval philog = prove_max(philog_f, Interval(1.0, 6.0), 25, 1e-6);
    // beyond 6: t^2 e^{-t^2/2} log t evaluated on [6,60], and t^3 <= e^{t^2/4}
    // for t >= 60 caps the rest by e^{-t^2/4} <= e^{-900}
    philog = hull(philog, Interval(0.0, philog_f(Interval(6.0, 60.0)).hi));
    philog = hull(philog, Interval(0.0, exp(Interval::exact(-900.0)).hi));
    Interval inner_sup = 4.0 * sqr(ln2()) * philog; // |eta2/t|_1 |phi log^+|_inf
    // uniform in x: (l1s)(inner_sup/L + linf_cap (1 - log kappa/L)) <= l1s linf_cap
    // provided inner_sup <= linf_cap log kappa; all caps are the stored uppers
    Interval check = Interval::exact(star_norms.linf.value.hi) *
                         log(Interval::exact(mp.kappa)) - inner_sup;
    if (!(check.lo >= 0.0))
        throw std::logic_error("aux_bounds: eta_star log-moment check failed");
    out.Z_star2_logx_coeff = l1s * star_norms.linf.value;
    out.eta_star_l22_scaled = mp.kappa * sqr(star_norms.l2.value);
    return out;
}

// eq-by-eq assembly of the total major-arc lower bound (coefficient of x^2/kappa)
inline MajorBound nefumo_total(const MajorParams& mp, const Interval& odd_phi_sum,
                               const NormSet& circ_norms, const NormSet& plus_norms,
                               const NormSet& star_norms, const ConvergentProducts& conv,
                               const PhiSumBounds& phib, const Interval& c0_low) {
    validate_pinned(mp.pinned);
    const PinnedConstants& pc = mp.pinned;
    MajorBound out;
    L2MajorResult l2 = l2_major(mp, odd_phi_sum, circ_norms, plus_norms);
    out.L = l2.L;
    out.A = l2.A;
    out.C0_low = c0_low;

    // first line: massacre * |eta_circ|_2^2 (2 + eps0) eps0
    //           + (2*gat1o |eta_circ|_2^2 + 0.0012 |eta'''|_1^2/delta0^5)/r
    Interval d = pc.eta_plus.dist_eta_circ_l2; // >= eps0 |eta_circ|_2
    Interval line1 = conv.massacre * d * (2.0 * circ_norms.l2.value + d) +
                     (2.0 * phib.gat1o_const * sqr(circ_norms.l2.value) +
                      Interval::ratio(12, 10000) * sqr(circ_norms.l1_d3.value) /
                          pow_int(Interval::exact(mp.delta0), 5)) /
                         (double)mp.r;
    out.eps0_line = Interval(0.0, line1.hi);

    // second line: E_star A + E_plus sqrt(massacre)(sqrt A + sqrt(massacre)|eta_plus|_2)|eta_star|_2
    // as coefficient of x^2/kappa (E_star and |eta_star|_2 carry 1/kappa, 1/sqrt(kappa))
    Interval sqrt_mas = sqrt(conv.massacre);
    Interval l2_star_scaled = sqrt(Interval(0.0, (mp.kappa * sqr(star_norms.l2.value)).hi)); // sqrt(kappa)|eta_star|_2
    Interval line2 = pc.e_eta_star_kappa * Interval(0.0, out.A.hi) +
                     pc.e_eta_plus * sqrt_mas *
                         (sqrt(Interval(0.0, out.A.hi)) + sqrt_mas * plus_norms.l2.value) *
                         l2_star_scaled * sqrt(Interval::exact(mp.kappa));
    out.ea_line = Interval(0.0, line2.hi);

    // third line: (2 Z_plus LS_star + 4 sqrt(Z_plus Z_star) LS_plus) x, at x = x_+,
    // divided by x^2/kappa; decreasing in x (poly(log x)/x)
    AuxBounds aux = aux_bounds(mp, star_norms, plus_norms);
    Interval Lx = log(Interval::exact(pc.x_plus));
    Interval zp = aux.Z_plus2_logx_coeff * Lx;
    Interval zs = aux.Z_star2_logx_coeff * Lx;
    Interval ls_star = aux.LS_eta_star_logx * Lx + aux.LS_eta_star_const;
    Interval ls_plus = aux.LS_eta_plus_logx * Lx + aux.LS_eta_plus_const;
    Interval line3 = (2.0 * zp * ls_star + 4.0 * sqrt(zp * zs) * ls_plus) * mp.kappa /
                     Interval::exact(pc.x_plus);
    out.ls_line_coeff = Interval(0.0, line3.hi);

    // main term: C0 * kappa * C_{eta_circ,eta_star}
    CEtaStarResult ces = C_eta_star(mp.kappa, circ_norms);
    out.C_eta_scaled = ces.lower_scaled;
    Interval main = c0_low * ces.lower_scaled;
    Interval errors = out.eps0_line * (sqrt(pi() / 2.0)) + out.ea_line + out.ls_line_coeff;
    out.total_coeff = Interval((main - errors).lo, main.hi);
    return out;
}

} // namespace goldbach
