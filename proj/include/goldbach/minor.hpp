// minor.hpp
//
// Minor-arc bound functions and their aggregation.
//
//   R_{z,t}   = 0.27125 log(1 + log 4t / (2 log(9 z^{1/3}/(2.004 t)))) + 0.41415
//   L_t       = F(t)(log(2^{7/4} t^{13/4}) + 80/9) + log(2^{16/9} t^{80/9}) + 111/5
//   g_z(r)    = ((R_{z,2r} log 2r + 0.5) sqrt(F(r)) + 2.5)/sqrt(2r) + L_r/r + 3.2 z^{-1/6}
//   h(z)      = 0.2727 z^{-1/6} (log z)^{3/2} + 1218 z^{-1/3} log z
//
// g_{y,phi}(r) blends R at scales y and y/K through the Mellin weight
// c_phi = (C_{phi,2,K}/|phi|_1)/log K, K = (log y)/2.
//
// The aggregate over the complement of the arcs is
//   Z <= ( sqrt(|phi|_1 (M+T) x/kappa) + sqrt(S_star(0,x) E) )^2 .
//
// Every x-dependent bound is produced as a certified supremum over
// x >= x_+: bisection over log x on a finite window, plus closed-form
// decreasing-tail checks on [window end, infinity).  Functions of a scale z
// are parameterized by log z so that semi-infinite boxes stay evaluable.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "goldbach/interval.hpp"
#include "goldbach/major.hpp"
#include "goldbach/prove.hpp"
#include "goldbach/quadrature.hpp"
#include "goldbach/smoothing.hpp"

namespace goldbach {

inline Interval inf_interval(double lo) {
    return Interval(lo, std::numeric_limits<double>::infinity());
}

// sup of log t / t over [t0, inf): needs log t0 >= 1
inline Interval log_over_t_sup(double t0) {
    Interval chk = 1.0 - log(inf_interval(t0));
    if (!(chk.hi < 0.0)) throw std::logic_error("log_over_t_sup: t0 too small");
    Interval at = log(Interval::exact(t0)) / Interval::exact(t0);
    return Interval(0.0, at.hi);
}

// sup of exp(c_log log t - c_lin t) over [t0, inf): decreasing when
// c_log / t0 < c_lin
inline Interval exp_poly_sup(const Interval& c_log, const Interval& c_lin, double t0) {
    Interval chk = c_log / inf_interval(t0) - c_lin;
    if (!(chk.hi < 0.0)) throw std::logic_error("exp_poly_sup: not decreasing on the box");
    Interval T = Interval::exact(t0);
    Interval at = exp(c_log * log(T) - c_lin * T);
    return Interval(0.0, at.hi);
}

// ---------------------------------------------------------------------------
// elementary bound functions (log-z parameterization)

inline Interval R_of_logz(const Interval& Lz, const Interval& t) {
    Interval den = 2.0 * (log(Interval::exact(9.0)) + Lz / 3.0 -
                          log(Interval::ratio(2004, 1000) * t));
    if (!(den.lo > 0.0))
        throw std::domain_error("R: t too large against z^(1/3)");
    Interval ratio = log(4.0 * t) / den;
    return Interval::ratio(27125, 100000) * log(1.0 + ratio) + Interval::ratio(41415, 100000);
}

inline Interval R_xt(const Interval& x, const Interval& t) { return R_of_logz(log(x), t); }

// F(r) = e^gamma log log r + 2.50637/log log r, as a function of log r
inline Interval digammaF_of_logr(const Interval& Lr) {
    Interval ll = log(Lr);
    return e_gamma() * ll + Interval::ratio(250637, 100000) / ll;
}

inline Interval L_of_logt(const Interval& Lt, const Interval& F) {
    Interval a = Interval::ratio(7, 4) * ln2() + Interval::ratio(13, 4) * Lt +
                 Interval::ratio(80, 9);
    Interval b = Interval::ratio(16, 9) * ln2() + Interval::ratio(80, 9) * Lt +
                 Interval::ratio(111, 5);
    return F * a + b;
}

inline Interval L_t(const Interval& t, const Interval& F) { return L_of_logt(log(t), F); }

inline Interval g_plain_of_logx(const Interval& Lx, const Interval& r) {
    Interval F = digammaF_of_logr(log(r));
    Interval R = R_of_logz(Lx, 2.0 * r);
    Interval main = ((R * log(2.0 * r) + 0.5) * sqrt(F) + 2.5) / sqrt(2.0 * r);
    return main + L_t(r, F) / r + Interval::ratio(32, 10) * exp(-Lx / 6.0);
}

inline Interval g_plain(double x, double r) {
    return g_plain_of_logx(log(Interval::exact(x)), Interval::exact(r));
}

inline Interval h_of_logx(const Interval& Lx) {
    return Interval::ratio(2727, 10000) * exp(-Lx / 6.0) * pow_real(Lx, Interval::ratio(3, 2)) +
           Interval::exact(1218.0) * exp(-Lx / 3.0) * Lx;
}

inline Interval h_fn(double x) { return h_of_logx(log(Interval::exact(x))); }

// uniform-in-z bound for R_{y, 2 r1(y)}, r1 = (3/8) y^{4/15}: the log ratio
// ((4/15)L + log 3)/((2/15)L + 2 log(6/2.004... )) increases to (4/15)/(2/15) = 2
inline Interval R_r1_uniform_y() {
    Interval b = log(Interval::exact(3.0));
    Interval d = 2.0 * log(Interval::exact(9.0) / (Interval::ratio(2004, 1000) *
                                                   Interval::ratio(3, 4)));
    // (aL+b)/(cL+d) increasing iff b c <= a d
    Interval chk = b * Interval::ratio(2, 15) - Interval::ratio(4, 15) * d;
    if (!(chk.hi <= 0.0)) throw std::logic_error("R_r1_uniform: monotone check failed");
    return Interval::ratio(27125, 100000) * log(Interval::exact(3.0)) +
           Interval::ratio(41415, 100000);
}

// ---------------------------------------------------------------------------
// closed-form integral toolkit

struct ClosedIntegrals {
    Interval inv_r32;      // int r^{-3/2} over [r0,inf) = 2/sqrt(r0)
    Interval log_over_r2;  // int log r/r^2 = log(e r0)/r0
    Interval inv_r2;       // int 1/r^2 = 1/r0
    Interval log_ratio;    // int 1/r over [r0,r1] = log(r1/r0)
    Interval P2_term;      // P2(log 2r0)/sqrt(r0) - P2(log 2r1)/sqrt(r1)
    Interval I1;           // F(log r0) + 2 e^gamma/log r0
    Interval J;            // F(log r0) + e^gamma/log r0
    Interval E1_lo, E1_hi; // brackets for E_1(log r0)
};

inline Interval P2_poly(const Interval& t) { return sqr(t) + 4.0 * t + 8.0; }
inline Interval P3_poly(const Interval& t) { return pow_int(t, 3) + 6.0 * sqr(t) + 24.0 * t + 48.0; }
inline Interval P2_minus(const Interval& t) { return 2.0 * sqr(t) + 16.0 * t + 48.0; }

// c_gamma = 2.50637/log log 1e5, making F(t) = e^gamma log t + c_gamma an
// upper envelope of digamma_F for r >= 1e5
inline Interval c_gamma_const() {
    return Interval::ratio(250637, 100000) / log_log(Interval::exact(1e5));
}

inline Interval F_cap(const Interval& logr) { return e_gamma() * log(logr) + c_gamma_const(); }

inline ClosedIntegrals closed_integrals(double r0, double r1) {
    if (r0 < 1e5) throw std::invalid_argument("closed_integrals: r0 >= 1e5 required");
    ClosedIntegrals out;
    Interval R0 = Interval::exact(r0), R1 = Interval::exact(r1);
    Interval lr0 = log(R0);
    out.inv_r32 = 2.0 / sqrt(R0);
    out.log_over_r2 = (lr0 + 1.0) / R0;
    out.inv_r2 = 1.0 / R0;
    out.log_ratio = log(R1 / R0);
    out.P2_term = P2_poly(log(2.0 * R0)) / sqrt(R0) - P2_poly(log(2.0 * R1)) / sqrt(R1);
    Interval F = F_cap(lr0);
    out.I1 = F + 2.0 * e_gamma() / lr0;
    out.J = F + e_gamma() / lr0;
    out.E1_lo = 1.0 / (R0 * (lr0 + 1.0));
    out.E1_hi = 1.0 / (R0 * lr0);
    return out;
}

// ---------------------------------------------------------------------------
// parameters and result records

struct MinorParams {
    double kappa = 49.0;
    uint64_t r0 = 150000;
    double delta0 = 8.0;
    double x_plus = 4.9e26;
    double window_log10 = 150.0; // bisection window upper end, in log10 y
    int bisect_depth = 44;
    PinnedConstants pinned;
    Interval cE = Interval(1.332582275 - 4e-10, 1.332582275 + 4e-10);

    double y_plus() const { return x_plus / kappa; }
};

struct MinorBound {
    Interval C_plus_0, C_plus_1, C_plus_2; // prime-power strip constants
    Interval E_coeff;                      // E/x, sup over x >= x_+
    Interval JE;                           // (sqrt J - sqrt E)^2/x lower bound
    Interval T_coeff;                      // T/x, sup
    Interval g_r0;                         // sup over y of g_{y,phi}(r0)
    Interval hasmo;                        // sup of the f0 bracket
    Interval f0, f1, f2, int_g;            // pieces of int g/r (Cauchy-Schwarz form)
    Interval int_g_direct;                 // direct quadrature sup of int g/r
    Interval M_coeff;                      // M/x, sup
    Interval star_E;                       // S_star(0,x) E as coeff of x^2/kappa
    Interval Z_coeff;                      // Z as coeff of x^2/kappa
};

// ---------------------------------------------------------------------------
// the assembled chain

class MinorChain {
public:
    MinorChain(const MinorParams& mp, const NormSet& circ, const NormSet& plus,
               const Interval& A_major)
        : p_(mp), circ_(circ), plus_(plus), A_(A_major) {
        Ly0_ = log(Interval::exact(p_.y_plus()));
        Lx0_ = log(Interval::exact(p_.x_plus));
        log_kappa_ = log(Interval::exact(p_.kappa));
        r0_ = Interval::exact((double)p_.r0);
        lr0_ = log(r0_);
        l2r0_ = log(2.0 * r0_);
        cphi2_ = compute_cphi2();
        m0_ = p_.pinned.malavita_m0 + p_.pinned.malavita_eps; // 0.640209
        m1_ = p_.pinned.malavita_m1;
        window_hi_ = std::log(10.0) * p_.window_log10;
        if (p_.r0 < 100000) throw std::invalid_argument("MinorChain: r0 >= 1e5");
    }

    const Interval& cphi2() const { return cphi2_; }
    const Interval& Ly0() const { return Ly0_; }
    const Interval& Lx0() const { return Lx0_; }
    const MinorParams& params() const { return p_; }

    // C_{phi,2,K} two-sided: the full integral minus the [0,1/K) head,
    //   head = int_0^a w^2 e^{-w^2/2} (-log w) dw
    //        = a^3 (log K/3 + 1/9) * [e^{-a^2/2}, 1],  a = 1/K
    Interval c_phi(const Interval& Ly) const {
        Interval Klo = Interval::exact(Ly.lo) / 2.0;
        Interval Khi = std::isinf(Ly.hi) ? Klo : Interval::exact(Ly.hi) / 2.0;
        Interval a_lo = 1.0 / Khi, a_hi = 1.0 / Klo; // head is decreasing in K
        auto head_of = [](const Interval& a, const Interval& Kv) {
            return pow_int(a, 3) * (log(Kv) / 3.0 + Interval::ratio(1, 9)) *
                   Interval(exp(-sqr(a) / 2.0).lo, 1.0);
        };
        Interval h_hi = head_of(a_hi, Klo);
        Interval h_lo = std::isinf(Ly.hi) ? Interval::exact(0.0) : head_of(a_lo, Khi);
        Interval head(std::max(0.0, std::min(h_lo.lo, h_hi.lo)), h_hi.hi);
        Interval c2(std::max(0.0, (cphi2_ - head).lo), (cphi2_ - head).hi);
        Interval c = (c2 / sqrt(pi() / 2.0)) / log(Ly / 2.0);
        return Interval(std::max(0.0, c.lo), c.hi);
    }

    // log(y/K): increasing in log y, so a semi-infinite box maps cleanly
    Interval logz_yK(const Interval& Ly) const {
        Interval chk = 1.0 - 1.0 / Ly;
        if (!(chk.lo > 0.0)) throw std::logic_error("logz_yK: monotone check failed");
        Interval at_lo = Interval::exact(Ly.lo) + ln2() - log(Interval::exact(Ly.lo));
        if (std::isinf(Ly.hi)) return inf_interval(at_lo.lo);
        Interval at_hi = Interval::exact(Ly.hi) + ln2() - log(Interval::exact(Ly.hi));
        return Interval(at_lo.lo, at_hi.hi);
    }

    Interval R_blend(const Interval& Ly, const Interval& t) const {
        Interval c = c_phi(Ly);
        Interval Ry = R_of_logz(Ly, t);
        Interval RyK = R_of_logz(logz_yK(Ly), t);
        return Ry + (RyK - Ry) * c;
    }

    // 3.2 (Ly/2)^{1/6} e^{-Ly/6}: decreasing (log-derivative 1/(6L) - 1/6 < 0)
    Interval third_term(const Interval& Ly) const {
        if (std::isinf(Ly.hi)) {
            Interval d = 1.0 / (6.0 * Ly) - Interval::ratio(1, 6);
            if (!(d.hi < 0.0)) throw std::logic_error("third_term: monotone check failed");
            Interval at = third_term(Interval::exact(Ly.lo));
            return Interval(0.0, at.hi);
        }
        return Interval::ratio(32, 10) * pow_real(Ly / 2.0, Interval::ratio(1, 6)) *
               exp(-Ly / 6.0);
    }

    // g_{y,phi}(r), K = (log y)/2
    Interval g_conv(const Interval& Ly, const Interval& r) const {
        Interval F = digammaF_of_logr(log(r));
        Interval R = R_blend(Ly, 2.0 * r);
        Interval main = ((R * log(2.0 * r) + 0.5) * sqrt(F) + 2.5) / sqrt(2.0 * r);
        return main + L_t(r, F) / r + third_term(Ly);
    }

    // sup over y >= y_+: bisection over the window (the semi-infinite box
    // decouples the R blend too much), closed tail box beyond
    Interval g_r0_sup() const {
        double win = prove_sup(
            [&](const Interval& Ly) {
                return guarded([&](const Interval& b) { return g_conv(b, r0_); }, Ly);
            },
            Interval(Ly0_.lo, window_hi_), p_.bisect_depth, 2e-6);
        Interval tail = g_conv(inf_interval(window_hi_), r0_);
        return Interval(0.0, std::max(win, tail.hi));
    }

    Interval log_r1(const Interval& Ly) const {
        return log(Interval::ratio(3, 8)) + Interval::ratio(4, 15) * Ly;
    }

    // I_{0,r0,r1,z}, z given by its log
    Interval I0(const Interval& Ly, const Interval& Lz) const {
        Interval lr1 = log_r1(Ly);
        Interval l2r1 = lr1 + ln2();
        Interval sr0 = sqrt(r0_), sr1 = exp(lr1 / 2.0);
        Interval R0 = R_of_logz(Lz, 2.0 * r0_);
        Interval R1 = R_of_logz(Lz, 2.0 * exp(lr1));
        Interval dP2 = P2_poly(l2r0_) / sr0 - P2_poly(l2r1) / sr1;
        Interval dR2 = sqr(R1) - sqr(R0);
        Interval second = (dR2 / (lr1 - lr0_)) *
                          (P2_minus(l2r0_) / sr0 -
                           (P3_poly(l2r1) - l2r0_ * P2_poly(l2r1)) / sr1);
        return sqr(R0) * dP2 + second;
    }

    // crude I0: negative tails dropped, R1 replaced by its uniform-in-y bounds;
    // evaluates on semi-infinite Ly boxes.  R1_cap must dominate R_{z,2 r1}.
    Interval I0_crude(const Interval& Ly, const Interval& Lz, const Interval& R1_cap) const {
        Interval sr0 = sqrt(r0_);
        Interval R0 = R_of_logz(Lz, 2.0 * r0_);
        Interval lratio = log_r1(Ly) - lr0_;
        Interval v = sqr(R0) * P2_poly(l2r0_) / sr0 +
                     ((sqr(R1_cap) - sqr(Interval::ratio(41415, 100000))) /
                      Interval::exact(lratio.lo)) *
                         P2_minus(l2r0_) / sr0;
        return Interval(0.0, v.hi);
    }

    // uniform cap for R_{y/K, 2 r1}: 0.27125 log(3 + f_sup) + 0.41415 where
    // f_sup bounds ((4/3) log t - c)/((2/15) t - (2/3) log t + 2 log(12*2^(1/3)/2.004))
    // over all t > 0 (bisection on [180, 30000], signs outside)
    Interval R_r1_uniform_yK() const {
        Interval c12 = 12.0 * cbrt(Interval::exact(2.0)) / Interval::ratio(2004, 1000);
        Interval cc = 4.0 * log(c12) - log(Interval::exact(3.0));
        auto f = [&](const Interval& t) {
            Interval num = Interval::ratio(4, 3) * log(t) - cc;
            Interval den = Interval::ratio(2, 15) * t - Interval::ratio(2, 3) * log(t) +
                           2.0 * log(c12);
            return num / den;
        };
        double fsup = 0.0;
        // t <= 180: numerator negative (4/3 log 180 < c), denominator positive
        Interval neg = Interval::ratio(4, 3) * log(Interval::exact(180.0)) - cc;
        if (!(neg.hi < 0.0)) throw std::logic_error("R_r1_uniform_yK: sign check failed");
        Interval denlo = Interval::ratio(2, 15) * 3.0 - Interval::ratio(2, 3) *
                         log(Interval::exact(180.0)) + 2.0 * log(c12);
        if (!(denlo.lo > 0.0)) throw std::logic_error("R_r1_uniform_yK: denominator check");
        // main window
        fsup = prove_sup([&](const Interval& t) { return f(t); },
                         Interval(180.0, 30000.0), 40, 1e-8);
        // t >= 30000: f <= (4/3) log t / ((2/15 - (2/3) sup(log t/t)) t)
        Interval lot = log_over_t_sup(30000.0);
        Interval denc = Interval::ratio(2, 15) - Interval::ratio(2, 3) * lot;
        if (!(denc.lo > 0.0)) throw std::logic_error("R_r1_uniform_yK: tail denominator");
        Interval tail = (Interval::ratio(4, 3) / denc) * lot;
        fsup = std::max(fsup, tail.hi);
        return Interval::ratio(27125, 100000) * log(3.0 + Interval(0.0, fsup)) +
               Interval::ratio(41415, 100000);
    }

    Interval hasmo_bracket(const Interval& Ly) const {
        Interval c = c_phi(Ly);
        Interval i0y = I0(Ly, Ly);
        Interval i0k = I0(Ly, logz_yK(Ly));
        Interval a = sqrt(Interval(std::max(0.0, i0y.lo), std::max(0.0, i0y.hi)));
        Interval b = sqrt(Interval(std::max(0.0, i0k.lo), std::max(0.0, i0k.hi)));
        return a + (b - a) * c;
    }

    Interval hasmo_bracket_crude(const Interval& Ly) const {
        Interval c = c_phi(Ly);
        Interval a = sqrt(I0_crude(Ly, Ly, R_r1_uniform_y()));
        Interval b = sqrt(I0_crude(Ly, logz_yK(Ly), R_r1_uniform_yK()));
        return hull(a, a + (b - a) * c);
    }

    // wide boxes can violate the R domain guard (decoupled log z vs r1);
    // report them as unresolvable so the bisection splits
    template <typename F>
    static Interval guarded(F&& f, const Interval& box) {
        try {
            return f(box);
        } catch (const std::domain_error&) {
            return Interval::whole();
        }
    }

    Interval hasmo_sup() const {
        if (hasmo_cache_.present) return hasmo_cache_.value;
        double win = prove_sup([&](const Interval& L) {
                         return guarded([&](const Interval& b) { return hasmo_bracket(b); }, L);
                     }, Interval(Ly0_.lo, window_hi_), p_.bisect_depth, 5e-8);
        Interval tail = hasmo_bracket_crude(inf_interval(window_hi_));
        hasmo_cache_ = NormEntry(Interval(0.0, std::max(win, tail.hi)), Provenance::computed);
        return hasmo_cache_.value;
    }

    Interval f0_radical() const {
        return sqrt((2.0 / sqrt(r0_)) * (F_cap(lr0_) + 2.0 * e_gamma() / lr0_));
    }

    Interval f0_sup() const { return hasmo_sup() * f0_radical(); }

    Interval f0_at(const Interval& Ly) const { return hasmo_bracket(Ly) * f0_radical(); }

    Interval f1_const() const {
        Interval F = F_cap(lr0_);
        Interval term1 = (sqrt(F) / sqrt(2.0 * r0_)) * (1.0 + e_gamma() / (F * lr0_));
        Interval term2 = 5.0 / sqrt(2.0 * r0_);
        Interval Jr = F + e_gamma() / lr0_;
        Interval term3 =
            ((Interval::ratio(13, 4) * (lr0_ + 1.0) + Interval::ratio(10102, 1000)) * Jr +
             Interval::ratio(80, 9) * (lr0_ + 1.0) + Interval::ratio(23433, 1000)) /
            r0_;
        return term1 + term2 + term3;
    }

    Interval f2_at(const Interval& Ly) const {
        return Interval::ratio(32, 10) * pow_real(Ly / 2.0, Interval::ratio(1, 6)) *
               exp(-Ly / 6.0) * (log_r1(Ly) - lr0_);
    }

    Interval f2_sup() const {
        Interval L = inf_interval(Ly0_.lo);
        Interval alpha = lr0_ - log(Interval::ratio(3, 8));
        Interval at_start = Interval::ratio(4, 15) * Interval::exact(Ly0_.lo) - alpha;
        if (!(at_start.lo > 0.0)) throw std::logic_error("f2_sup: r1 <= r0 at window start");
        Interval d = 1.0 / (6.0 * L) - Interval::ratio(1, 6) +
                     Interval::ratio(4, 15) / (Interval::ratio(4, 15) * L - alpha);
        if (!(d.hi < 0.0)) throw std::logic_error("f2_sup: monotone check failed");
        return Interval(0.0, f2_at(Interval::exact(Ly0_.lo)).hi);
    }

    Interval int_g_sup() const { return f0_sup() + f1_const() + f2_sup(); }

    // direct enclosure quadrature of int_{r0}^{r1} g(r)/r dr = int g(e^u) du,
    // sharper than the Cauchy-Schwarz split f0 + f1 + f2
    Interval int_g_direct(const Interval& Ly, int panels = 1 << 14) const {
        Interval lr1 = log_r1(Ly);
        double a = lr0_.hi, b = lr1.lo;
        if (b <= a) return Interval::exact(0.0);
        Interval tot = Interval::exact(0.0), blk = Interval::exact(0.0);
        double h = (b - a) / panels;
        for (int i = 0; i < panels; ++i) {
            double u0 = a + h * i, u1 = (i == panels - 1) ? b : a + h * (i + 1);
            Interval r = exp(Interval(u0, u1));
            blk = blk + g_conv(Ly, r) * (Interval::exact(u1) - Interval::exact(u0));
            if ((i + 1) % 1024 == 0 || i == panels - 1) {
                tot = tot + blk;
                blk = Interval::exact(0.0);
            }
        }
        // the [lr0 interval, lr1 interval] slivers
        Interval s0 = g_conv(Ly, exp(Interval(lr0_.lo, lr0_.hi))) * (lr0_ - lr0_.lo);
        Interval s1 = g_conv(Ly, exp(Interval(lr1.lo, lr1.hi))) * (lr1 - lr1.lo);
        return tot + Interval(0.0, std::max(0.0, s0.hi)) + Interval(0.0, std::max(0.0, s1.hi));
    }

    Interval int_g_direct_sup() const {
        double win = prove_sup(
            [&](const Interval& Ly) {
                return guarded([&](const Interval& b) { return int_g_direct(b, 1 << 12); }, Ly);
            },
            Interval(Ly0_.lo, window_hi_), 30, 5e-4);
        // beyond the window the Cauchy-Schwarz form is already far below
        Interval tail = hasmo_bracket_crude(inf_interval(window_hi_)) * f0_radical() +
                        f1_const() + Interval(0.0, f2_at(Interval::exact(window_hi_)).hi);
        return Interval(0.0, std::max(win, tail.hi));
    }

    // ---- x-chains -----------------------------------------------------------

    struct EtaPlusStrip { Interval C0, C1, C2; };

    EtaPlusStrip strip_constants() const {
        EtaPlusStrip s;
        Interval linf = plus_.linf.value, linft = plus_.linf_t.value;
        Interval c7131 = Interval::ratio(7131, 10000);
        s.C0 = Interval(0.0, (c7131 * (2.0 * sqr(linf) + Interval::ratio(2, 3) * sqr(linft))).hi);
        s.C1 = Interval(0.0, (c7131 * sqr(linft) * Interval::ratio(4, 9)).hi);
        s.C2 = Interval(0.0, (Interval::ratio(51942, 100000) * sqr(linf)).hi);
        return s;
    }

    Interval E_coeff_sup() const {
        EtaPlusStrip s = strip_constants();
        // the envelope uses the upper strip constants; monotonicity is a
        // property of that envelope
        Interval a = Interval::exact((s.C0 + s.C2).hi), c = Interval::exact((2.0 * s.C0 + s.C1).hi);
        Interval chk = a * inf_interval(Lx0_.lo) + c - 2.0 * a;
        if (!(chk.lo > 0.0)) throw std::logic_error("E_coeff: monotone check failed");
        Interval at = (a * Interval::exact(Lx0_.lo) + c) * exp(-Interval::exact(Lx0_.lo) / 2.0);
        return Interval(0.0, at.hi);
    }

    Interval JE_lower() const {
        Interval E = E_coeff_sup();
        Interval d = sqrt(Interval::exact(A_.lo)) - sqrt(Interval::exact(E.hi));
        return Interval(std::max(0.0, sqr(d).lo), std::max(0.0, A_.lo));
    }

    Interval S_coeff(const Interval& Lx) const { return m0_ * Lx - m1_; }

    Interval T_at(const Interval& Lx, const Interval& JE) const {
        Interval Ly = Lx - log_kappa_;
        Interval cphi3 = Interval(
            0.0, (Interval::ratio(104488, 100000) / (3.0 * sqrt(pi() / 2.0)) *
                  pow_int(2.0 / Ly, 3)).hi);
        Interval inner = S_coeff(Lx) - JE;
        return cphi3 * Interval(std::max(0.0, inner.lo), std::max(0.0, inner.hi));
    }

    Interval T_sup() const {
        Interval JE = JE_lower();
        Interval b = Interval::exact(JE.lo) + m1_ + m0_ * log_kappa_;
        Interval chk = 3.0 * b - 2.0 * m0_ * inf_interval(Lx0_.lo - log_kappa_.hi);
        if (!(chk.hi < 0.0)) throw std::logic_error("T_sup: monotone check failed");
        return Interval(0.0, T_at(Interval::exact(Lx0_.lo), Interval::exact(JE.lo)).hi);
    }

    // arc l^2 factor over the parity arcs, Q = sqrt(x/16):
    // H(r) = (log(2(r+1)) + c_+)/(log(sqrt(x)/2) + c_E)
    Interval H_at(const Interval& Lx, const Interval& r) const {
        Interval num = log(r + 1.0) + ln2() + Interval::ratio(136, 100);
        Interval den = Lx / 2.0 - ln2() + p_.cE;
        return num / den;
    }

    Interval jump_at(const Interval& Lx) const {
        Interval Ly = Lx - log_kappa_;
        Interval r1 = exp(log_r1(Ly));
        Interval j = 1.0 - H_at(Lx, r1);
        return Interval(std::max(0.0, j.lo), std::max(0.0, j.hi));
    }

    struct MPieces { Interval roussel, comrade, casbah, total; };

    MPieces M_at(const Interval& Lx, const Interval& JE) const {
        Interval Ly = Lx - log_kappa_;
        MPieces m;
        Interval S = S_coeff(Lx);
        Interval HS = H_at(Lx, r0_) * S - JE;
        m.roussel = g_conv(Ly, r0_) * Interval(std::max(0.0, HS.lo), std::max(0.0, HS.hi));
        Interval r1 = exp(log_r1(Ly));
        m.comrade = jump_at(Lx) * g_conv(Ly, r1) * S;
        Interval intg = f0_at(Ly) + f1_const() + f2_at(Ly);
        m.casbah = (2.0 * S / (Lx + 2.0 * (p_.cE - ln2()))) * intg;
        m.total = m.roussel + m.comrade + m.casbah;
        return m;
    }

    // closed-form bound for x beyond the window end
    Interval M_tail(const Interval& JE) const {
        Interval Ly_box = inf_interval(window_hi_);
        // H S/x <= 2 m0 (log(r0+1)+log2+c_+)   (valid since m1 >= 0, c_E >= log 2)
        Interval ce_chk = p_.cE - ln2();
        if (!(ce_chk.lo > 0.0) || !(m1_.lo >= 0.0))
            throw std::logic_error("M_tail: H uniformization check failed");
        Interval hs_unif = 2.0 * m0_ * (log(r0_ + 1.0) + ln2() + Interval::ratio(136, 100));
        Interval rous = g_conv(Ly_box, r0_) * (hs_unif - JE.lo);
        Interval intg = hasmo_bracket_crude(Ly_box) * f0_radical() + f1_const() +
                        Interval(0.0, f2_at(Interval::exact(Ly_box.lo)).hi);
        Interval cas = 2.0 * m0_ * intg;
        Interval com = comrade_tail(Ly_box.lo);
        return Interval(0.0, (rous + cas + com).hi);
    }

    // comrade piece for y beyond the window: jump <= 1 and each additive piece
    // of g(r1) S/x is dominated by a decreasing exp(a log l - b l) shape
    Interval comrade_tail(double Ly_lo) const {
        Interval l0 = log_r1(Interval::exact(Ly_lo));
        double l0d = l0.lo;
        Interval lbox = inf_interval(l0d);
        // digamma_F(r1) <= e^gamma l: requires e^g log l + 2.50637/log l <= e^g l,
        // i.e. l - log l - 1.4074/log l > 0; the left side increases in l
        // (derivative 1 - 1/l + positive), so the check at l0 covers the box
        Interval l0i = Interval::exact(l0d);
        Interval chk_at = l0i - log(l0i) -
                          Interval::ratio(250637, 100000) / (e_gamma() * log(l0i));
        Interval chk_deriv = 1.0 - 1.0 / lbox;
        if (!(chk_at.lo > 0.0 && chk_deriv.lo > 0.0))
            throw std::logic_error("comrade_tail: F domination failed");
        // S/x <= m0 ((15/4) l + c_s), from log x = (15/4)(l - log(3/8)) + log kappa
        Interval cs = Interval::ratio(15, 4) * (-log(Interval::ratio(3, 8))) + log_kappa_;
        // R_blend <= hull of the two uniform caps
        Interval Rcap = hull(R_r1_uniform_y(), R_r1_uniform_yK());
        // piece 1: ((Rcap (l + log2) + 0.5) sqrt(e^g l) + 2.5)/sqrt(2*(3/8) e^l)
        //   * m0((15/4)l + c_s)  <=  K1 l^{5/2} e^{-l/2}
        Interval K1 = (sqrt(e_gamma()) * (Rcap * (1.0 + ln2() / lbox) + 0.5 / lbox) +
                       2.5 / pow_real(lbox, Interval::ratio(3, 2))) *
                      m0_ * (Interval::ratio(15, 4) + cs / lbox) /
                      sqrt(Interval::ratio(3, 4));
        Interval v1 = Interval(0.0, K1.hi) *
                      exp_poly_sup(Interval::ratio(5, 2), Interval::ratio(1, 2), l0d);
        // piece 2: (L_{r1}/r1) S/x <= K2 l^3 e^{-l}
        Interval K2 = (e_gamma() * (Interval::ratio(13, 4) + Interval::ratio(10102, 1000) / lbox) +
                       (Interval::ratio(80, 9) + Interval::ratio(23433, 1000) / lbox) / lbox) *
                      m0_ * (Interval::ratio(15, 4) + cs / lbox);
        Interval v2 = Interval(0.0, K2.hi) * exp_poly_sup(Interval::exact(3.0),
                                                          Interval::exact(1.0), l0d);
        // piece 3: 3.2 (Ly/2)^{1/6} e^{-Ly/6} S/x <= K3 Ly^{7/6} e^{-Ly/6}
        Interval Lybox = inf_interval(Ly_lo);
        Interval K3 = Interval::ratio(32, 10) / pow_real(Interval::exact(2.0), Interval::ratio(1, 6)) *
                      m0_ * (1.0 + log_kappa_ / Lybox);
        Interval v3 = Interval(0.0, K3.hi) *
                      exp_poly_sup(Interval::ratio(7, 6), Interval::ratio(1, 6), Ly_lo);
        return Interval(0.0, (v1 + v2 + v3).hi);
    }

    Interval M_sup() const {
        Interval JE = JE_lower();
        Interval JEc = Interval::exact(JE.lo);
        double win = prove_sup(
            [&](const Interval& Lx) {
                return guarded([&](const Interval& b) { return M_at(b, JEc).total; }, Lx);
            },
            Interval(Lx0_.lo, window_hi_ + log_kappa_.hi), p_.bisect_depth, 2e-4);
        Interval tail = M_tail(JE);
        return Interval(0.0, std::max(win, tail.hi));
    }

    Interval star_E_coeff() const {
        return Interval(0.0, ((sqrt(pi() / 2.0) + p_.pinned.err_eta_star_chi0) *
                              E_coeff_sup()).hi);
    }

    MinorBound ostop_total() const {
        MinorBound out;
        EtaPlusStrip s = strip_constants();
        out.C_plus_0 = s.C0;
        out.C_plus_1 = s.C1;
        out.C_plus_2 = s.C2;
        out.E_coeff = E_coeff_sup();
        out.JE = JE_lower();
        out.T_coeff = T_sup();
        out.g_r0 = g_r0_sup();
        out.hasmo = hasmo_sup();
        out.f0 = f0_sup();
        out.f1 = f1_const();
        out.f2 = f2_sup();
        out.int_g = out.f0 + out.f1 + out.f2;
        out.int_g_direct = int_g_direct_sup();
        out.M_coeff = M_sup();
        out.star_E = star_E_coeff();
        Interval mt = out.M_coeff + out.T_coeff;
        Interval z = sqr(sqrt(Interval(0.0, (sqrt(pi() / 2.0) * mt).hi)) +
                         sqrt(out.star_E));
        out.Z_coeff = Interval(0.0, z.hi);
        return out;
    }

private:
    Interval compute_cphi2() const {
        auto f = [](const Interval& w) {
            return -sqr(w) * exp(-sqr(w) / 2.0) * log(w);
        };
        auto df = [](const Interval& w) {
            return -exp(-sqr(w) / 2.0) * ((2.0 * w - pow_int(w, 3)) * log(w) + w);
        };
        double eps = 1e-6;
        QuadOptions opt;
        opt.initial_panels = 1 << 12;
        opt.max_panels = 1 << 20;
        Interval main = integrate_enclose(f, df, eps, 1.0, 1e-9, opt).value;
        Interval epsI = Interval::exact(eps);
        Interval head = pow_int(epsI, 3) * (1.0 - log(epsI)) / 3.0;
        return main + Interval(0.0, head.hi);
    }

    MinorParams p_;
    NormSet circ_, plus_;
    Interval A_;
    Interval Ly0_, Lx0_, log_kappa_, r0_, lr0_, l2r0_, cphi2_, m0_, m1_;
    double window_hi_;
    mutable NormEntry hasmo_cache_;
};

// ---------------------------------------------------------------------------
// the certificate bundle behind the chain's monotone/convex steps

// g_{y,phi}(r1(y)) >= h(2y/log y): window bisection, then a ratio-form tail.
// With l = log r1 = (4/15)Ly - beta (beta = -log(3/8)), the g floor
//   g >= 0.41415 l sqrt(e^gamma log l) / sqrt(2 r1) =: K_G Ly e^{-(2/15)Ly}
// decays strictly slower than both h terms (e^{-Ly/6} and e^{-Ly/3}), so the
// ratios C Ly^a e^{-b Ly} are summed and checked < 1 beyond the window.
inline ProofOutcome gosia_cert(const MinorChain& chain) {
    double L0 = chain.Ly0().lo;
    double W = std::log(10.0) * chain.params().window_log10;
    ProofOutcome win = bisect_prove(
        [&](const Interval& Ly) {
            try {
                Interval r1 = exp(chain.log_r1(Ly));
                Interval z = 2.0 * exp(Ly) / Ly;
                Interval diff = chain.g_conv(Ly, r1) - h_of_logx(log(z));
                return diff.lo >= 0.0 ? BoxVerdict::certified : BoxVerdict::unknown;
            } catch (const std::domain_error&) {
                return BoxVerdict::unknown;
            }
        },
        Interval(L0, W), chain.params().bisect_depth);
    if (!win.proven) return win;
    Interval Wi = Interval::exact(W);
    Interval beta = -log(Interval::ratio(3, 8));
    Interval l0 = Interval::ratio(4, 15) * Wi - beta;
    Interval Kg = Interval::ratio(41415, 100000) *
                  sqrt(e_gamma() * log(Interval::exact(l0.lo))) / sqrt(Interval::exact(2.0));
    Interval KG = Kg * exp(beta / 2.0) * Interval::ratio(4, 15) *
                  (1.0 - beta / (Interval::ratio(4, 15) * Wi));
    if (!(KG.lo > 0.0)) { win.proven = false; win.failure_box = Interval(W, W); return win; }
    Interval KG_lo = Interval::exact(KG.lo);
    Interval lz_fac = 1.0 + ln2() / Wi; // Lz <= (1 + log2/W) Ly
    Interval C1 = Interval::ratio(2727, 10000) * pow_real(lz_fac, Interval::ratio(3, 2)) /
                  (pow_real(Interval::exact(2.0), Interval::ratio(1, 6)) * KG_lo);
    Interval r1sup = Interval(0.0, C1.hi) *
                     exp_poly_sup(Interval::ratio(2, 3), Interval::ratio(1, 30), W);
    Interval C2 = Interval::exact(1218.0) * lz_fac /
                  (pow_real(Interval::exact(2.0), Interval::ratio(1, 3)) * KG_lo);
    Interval r2sup = Interval(0.0, C2.hi) *
                     exp_poly_sup(Interval::ratio(1, 3), Interval::ratio(1, 5), W);
    ProofOutcome out = win;
    out.proven = (r1sup + r2sup).hi < 1.0;
    if (!out.proven) out.failure_box = Interval(W, W);
    return out;
}

struct MonotonicityCerts {
    ProofOutcome golrof;          // the f-ratio <= 0.019562618 on [180, 30000]
    ProofOutcome hut;             // the decreasing-g condition < 1 on r in [175, 1e6]
    ProofOutcome convet;          // h(x) >= g_x(x^{1/3}/6) on [5832, e^34]
    ProofOutcome convog;          // convexity region covers t >= 3 log 6r
    ProofOutcome gosia;           // g_{y,phi}(r1) >= h(2y/log y) for y >= y_+
    ProofOutcome hasmo;           // f0 bracket <= 0.4153461 on the window
};

inline MonotonicityCerts monotonicity_certs(const MinorChain& chain) {
    MonotonicityCerts out;
    Interval c12 = 12.0 * cbrt(Interval::exact(2.0)) / Interval::ratio(2004, 1000);
    Interval cc = 4.0 * log(c12) - log(Interval::exact(3.0));
    out.golrof = prove_le(
        [&](const Interval& t) {
            return (Interval::ratio(4, 3) * log(t) - cc) /
                   (Interval::ratio(2, 15) * t - Interval::ratio(2, 3) * log(t) +
                    2.0 * log(c12));
        },
        0.019562618, Interval(180.0, 30000.0), 40);
    out.hut = prove_le(
        [](const Interval& r) {
            Interval u = log(8.0 * r) / Interval::ratio(52, 10);
            return (2.0 / Interval::ratio(26, 10)) / ((1.0 + u) * log(1.0 + u)) +
                   1.0 / (log(r) * log_log(r));
        },
        1.0, Interval(175.0, 1e6), 30);
    out.convet = bisect_prove(
        [](const Interval& x) {
            try {
                Interval lx = log(x);
                Interval r = exp(lx / 3.0) / 6.0;
                Interval diff = h_of_logx(lx) - g_plain_of_logx(lx, r);
                return diff.lo >= 0.0 ? BoxVerdict::certified : BoxVerdict::unknown;
            } catch (const std::domain_error&) {
                return BoxVerdict::unknown;
            }
        },
        Interval(5832.0, std::exp(34.0)), 34);
    // convexity of t -> R_{e^t, r} holds for t >= 3 log(2.004 r/9); the stated
    // region t >= 3 log 6r sits inside it iff 6 >= 2.004/9
    {
        Interval lhs = Interval::exact(6.0);
        Interval rhs = Interval::ratio(2004, 1000) / 9.0;
        out.convog.proven = lhs.lo >= rhs.hi;
        out.convog.max_depth_used = 0;
    }
    out.gosia = gosia_cert(chain);
    Interval hs = chain.hasmo_sup();
    out.hasmo.proven = hs.hi <= 0.4153461;
    out.hasmo.max_depth_used = chain.params().bisect_depth;
    return out;
}

struct MinorIntegral { Interval f0, f1, f2, total; };

inline MinorIntegral minor_integral(const MinorChain& chain) {
    MinorIntegral mi;
    mi.f0 = chain.f0_sup();
    mi.f1 = chain.f1_const();
    mi.f2 = chain.f2_sup();
    mi.total = mi.f0 + mi.f1 + mi.f2;
    return mi;
}

// ---------------------------------------------------------------------------
// Lemma-style combination: sum f(r) g(r) <= g(r0)(H(r0)-I0) + int g dH + jump

struct PalanH {
    std::vector<std::pair<double, double>> knots; // (r, H(r)), piecewise linear
    double value(double r) const {
        if (r <= knots.front().first) return knots.front().second;
        for (size_t i = 1; i < knots.size(); ++i)
            if (r <= knots[i].first) {
                double t = (r - knots[i - 1].first) / (knots[i].first - knots[i - 1].first);
                return knots[i - 1].second + t * (knots[i].second - knots[i - 1].second);
            }
        return knots.back().second;
    }
};

inline Interval palan_combine(const PalanH& H, const std::function<Interval(double)>& g,
                              const Interval& I0, double r0, double r1) {
    if (H.knots.size() < 2 || H.knots.front().first > r0)
        throw std::invalid_argument("palan_combine: H must cover [r0, r1]");
    for (size_t i = 1; i < H.knots.size(); ++i)
        if (H.knots[i].second < H.knots[i - 1].second)
            throw std::invalid_argument("palan_combine: H must be nondecreasing");
    Interval total = g(r0) * (Interval::exact(H.value(r0)) - I0);
    for (size_t i = 1; i < H.knots.size(); ++i) {
        double a = std::max(r0, H.knots[i - 1].first);
        double b = std::min(r1, H.knots[i].first);
        if (b <= a) continue;
        double slope = (H.knots[i].second - H.knots[i - 1].second) /
                       (H.knots[i].first - H.knots[i - 1].first);
        int panels = 256;
        Interval acc = Interval::exact(0.0);
        for (int k = 0; k < panels; ++k) {
            double lo = a + (b - a) * k / panels, hi = a + (b - a) * (k + 1) / panels;
            acc = acc + hull(g(lo), g(hi)) * Interval::exact(slope) * (hi - lo);
        }
        total = total + acc;
    }
    double Hend = H.value(r1);
    if (Hend < 1.0) total = total + (1.0 - Interval::exact(Hend)) * g(r1);
    return total;
}

} // namespace goldbach
