// smoothing.hpp
//
// The smoothing-function family and its verified facts:
//
//   eta1       = 2 * indicator([1/2, 1])
//   eta2       = eta1 *_M eta1 = 4 max(log 2 - |log 2t|, 0)      (tent in log t)
//   eta_circ   = t^3 (2-t)^3 e^{-(t-1)^2/2}  on [0,2]            (symmetric about 1)
//   h_poly     = t^3 (2-t)^3 e^{t-1/2}       on [0,2]
//   phi_gauss  = t^2 e^{-t^2/2}
//   eta_star   = (eta2 *_M phi_gauss)(kappa t)
//   eta_plus   = h_H(t) t e^{-t^2/2},  h_H = band-limited h, H = 200
//
// plus pointwise enclosures, norm sets (computed or pinned), closed-form
// Mellin transforms, the Fourier decay bound |f^(k)|_1/(2 pi t)^k, and the
// slow-degradation checks for Cauchy-Schwarz and the autocorrelation of
// eta_circ.

#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "goldbach/interval.hpp"
#include "goldbach/prove.hpp"
#include "goldbach/quadrature.hpp"

namespace goldbach {

// ---------------------------------------------------------------------------
// kinds

struct SmoothingKind {
    enum Tag { eta1, eta2, eta_circ, h_poly, phi_gauss, eta_star, eta_plus } tag;
    double kappa = 1.0; // eta_star scale
    double H = 200.0;   // eta_plus band limit

    static SmoothingKind make(Tag t) { return SmoothingKind{t}; }
    static SmoothingKind make_star(double kappa) { return SmoothingKind{eta_star, kappa}; }
    static SmoothingKind make_plus(double H) { return SmoothingKind{eta_plus, 1.0, H}; }
};

// ---------------------------------------------------------------------------
// pointwise pieces

namespace smoothing_detail {

// clip an interval against a support [a,b]; returns false if disjoint
inline bool clip(const Interval& t, double a, double b, Interval& out, bool& partial) {
    if (t.hi < a || t.lo > b) return false;
    out = Interval(std::max(t.lo, a), std::min(t.hi, b));
    partial = (t.lo < a || t.hi > b);
    return true;
}

inline Interval eval_eta2_core(const Interval& t) { // on (0, inf)
    Interval a = ln2() - abs(log(2.0 * t));
    Interval scaled = 4.0 * a;
    return Interval(std::max(0.0, scaled.lo), std::max(0.0, scaled.hi));
}

inline Interval poly_cube(const Interval& t) { // t^3 (2-t)^3
    return pow_int(t, 3) * pow_int(2.0 - t, 3);
}

inline Interval eval_eta_circ_core(const Interval& t) {
    return poly_cube(t) * exp(-sqr(t - 1.0) / 2.0);
}

inline Interval eval_h_core(const Interval& t) {
    return poly_cube(t) * exp(t - 0.5);
}

// h with the t^2 front factor used by the band-limited construction
inline Interval eval_h2_core(const Interval& t) {
    return pow_int(t, 2) * pow_int(2.0 - t, 3) * exp(t - 0.5);
}

inline Interval eval_phi_gauss(const Interval& t) {
    return sqr(t) * exp(-sqr(t) / 2.0);
}

// derivatives of eta_circ (used by quadrature and the |eta'''|_1 bound)
inline Interval eta_circ_d1(const Interval& t) {
    Interval P = poly_cube(t);
    Interval dP = 6.0 * sqr(t) * sqr(2.0 - t) * (1.0 - t);
    return exp(-sqr(t - 1.0) / 2.0) * (dP - (t - 1.0) * P);
}

inline Interval eta_circ_d2(const Interval& t) {
    Interval P = poly_cube(t);
    Interval dP = 6.0 * sqr(t) * sqr(2.0 - t) * (1.0 - t);
    Interval d2P = 6.0 * (2.0 - t) * (4.0 * t * sqr(1.0 - t) - 2.0 * sqr(t) + pow_int(t, 3));
    Interval u = t - 1.0;
    return exp(-sqr(u) / 2.0) * (d2P - 2.0 * u * dP + (sqr(u) - 1.0) * P);
}

// sin(H u)/u with a series enclosure near u = 0
inline Interval sinc_scaled(const Interval& u, double H) {
    Interval v = H * u;
    if (v.mag() < 0.5) {
        // sin v / v in [1 - v^2/6, 1] for |v| <= sqrt(6)
        Interval s = 1.0 - sqr(v) / 6.0;
        return H * Interval(std::min(s.lo, 1.0), 1.0);
    }
    if (u.contains_zero()) {
        // wide box across 0: |sin(Hu)/u| <= H
        return Interval(-H, H);
    }
    return sin(v) / u;
}

// band-limited h_H(t) = (1/pi) integral over u of h2(t e^{-u}) sin(Hu)/u du
inline Interval band_limited_h(const Interval& t, double H, double tol = 0.02) {
    if (t.hi <= 0.0) return Interval::exact(0.0);
    double lo_lim = std::max(std::log(std::max(t.lo, 1e-300) / 2.0) - 1e-9, -40.0);
    double hi_lim = 6.0;
    // whole support of the u-integrand sits beyond u = 6:
    // |h_H| <= (1/(6 pi)) integral of h2(s)/s ds over (0,2)  < 0.13
    if (lo_lim >= hi_lim) return Interval(-0.13, 0.13);
    auto f = [&](const Interval& u) {
        return eval_h2_core(t * exp(-u)) * sinc_scaled(u, H);
    };
    auto df = [&](const Interval& u) {
        Interval s = t * exp(-u);
        Interval h2 = eval_h2_core(s);
        // d/ds h2 = e^{s-1/2} s (2-s)^2 (4 - 3s - s^2) ... for the t^2 variant:
        // h2(s) = s^2 (2-s)^3 e^{s-1/2}
        // h2'(s) = e^{s-1/2} s (2-s)^2 (s^2 - 2s? ) -- expand directly:
        Interval E = exp(s - 0.5);
        Interval d_h2 = E * (2.0 * s * pow_int(2.0 - s, 3) - 3.0 * sqr(s) * sqr(2.0 - s) +
                             sqr(s) * pow_int(2.0 - s, 3));
        Interval q = sinc_scaled(u, H);
        // q'(u) = (Hu cos(Hu) - sin(Hu))/u^2, bounded by H^2/2 near zero
        Interval v = H * u;
        Interval dq;
        if (v.mag() < 0.5) {
            Interval d = -v / 3.0 + pow_int(v, 3) / 30.0;
            dq = H * H * hull(d, -v / 3.0);
        } else if (u.contains_zero()) {
            dq = Interval(-H * H, H * H);
        } else {
            dq = (v * cos(v) - sin(v)) / sqr(u);
        }
        return -s * d_h2 * q + h2 * dq;
    };
    QuadOptions opt;
    opt.initial_panels = 1 << 14;
    opt.max_panels = 1 << 19;
    QuadResult r = integrate_enclose(f, df, lo_lim, hi_lim, tol * 3.0, opt);
    // u > 6 tail: |h2(s)| <= 8 e^{3/2} s^2 with s = t e^{-u}
    Interval t2 = sqr(abs(t));
    Interval tail = (8.0 * exp(Interval::exact(1.5)) / 6.0) * t2 *
                    exp(Interval::exact(-12.0)) / 2.0;
    Interval total = (r.value + Interval(-tail.hi, tail.hi)) / pi();
    return total;
}

} // namespace smoothing_detail

// ---------------------------------------------------------------------------
// pointwise evaluation

inline Interval eval(const SmoothingKind& k, const Interval& t_in) {
    using namespace smoothing_detail;
    Interval t = t_in, core;
    bool partial = false;
    switch (k.tag) {
    case SmoothingKind::eta1: {
        if (!clip(t_in, 0.5, 1.0, t, partial)) return Interval::exact(0.0);
        Interval v = Interval::exact(2.0);
        // interior of clipped box has value 2 except possibly at boundary kinks
        return partial ? hull(Interval::exact(0.0), v) : v;
    }
    case SmoothingKind::eta2: {
        if (!clip(t_in, 0.25, 1.0, t, partial)) return Interval::exact(0.0);
        core = eval_eta2_core(t);
        return partial ? hull(Interval::exact(0.0), core) : core;
    }
    case SmoothingKind::eta_circ: {
        if (!clip(t_in, 0.0, 2.0, t, partial)) return Interval::exact(0.0);
        core = eval_eta_circ_core(t);
        return partial ? hull(Interval::exact(0.0), core) : core;
    }
    case SmoothingKind::h_poly: {
        if (!clip(t_in, 0.0, 2.0, t, partial)) return Interval::exact(0.0);
        core = eval_h_core(t);
        return partial ? hull(Interval::exact(0.0), core) : core;
    }
    case SmoothingKind::phi_gauss: {
        if (t_in.hi < 0.0) return Interval::exact(0.0);
        Interval tp(std::max(t_in.lo, 0.0), std::max(t_in.hi, 0.0));
        return eval_phi_gauss(tp);
    }
    case SmoothingKind::eta_star: {
        // (eta2 *_M phi)(kappa t) = integral over w in [1/4,1] of
        // eta2(w) phi(kappa t / w) dw/w, evaluated in u = log w
        Interval x = k.kappa * t_in;
        if (x.hi <= 0.0) return Interval::exact(0.0);
        auto f = [&](const Interval& u) {
            Interval w = exp(u);
            return eval_eta2_core(w) * eval_phi_gauss(x / w);
        };
        QuadOptions opt;
        opt.initial_panels = 1 << 12;
        opt.max_panels = 1 << 16;
        double a = -std::log(4.0) - 1e-12;
        QuadResult r = integrate_enclose(f, IvlFn{}, a, 0.0, 1e-3, opt);
        return r.value;
    }
    case SmoothingKind::eta_plus: {
        if (t_in.hi <= 0.0) return Interval::exact(0.0);
        Interval hh = band_limited_h(t_in, k.H);
        return hh * t_in * exp(-sqr(t_in) / 2.0);
    }
    }
    throw std::logic_error("eval: bad kind");
}

// ---------------------------------------------------------------------------
// norms

enum class Provenance { computed, pinned };

struct NormEntry {
    Interval value;
    Provenance prov = Provenance::computed;
    std::string citation; // data-file key for pinned entries
    bool present = false;

    NormEntry() = default;
    NormEntry(Interval v, Provenance p, std::string c = {})
        : value(v), prov(p), citation(std::move(c)), present(true) {}
};

struct NormSet {
    NormEntry l1;        // |eta|_1
    NormEntry l2;        // |eta|_2
    NormEntry linf;      // |eta|_inf
    NormEntry l2_deriv;  // |eta'|_2^2
    NormEntry l1_d3;     // |eta'''|_1
    NormEntry linf_t;    // |eta(t) * t|_inf
};

// pinned values for eta_plus (external norm table; see data/pinned_constants.txt)
struct PinnedEtaPlus {
    Interval l1{0.0, 1.062319};
    Interval l2{0.0, 0.800132};
    Interval linf{0.0, 1.079955};
    Interval linf_t{0.0, 1.19073};
    Interval dist_eta_circ_l2{0.0, 2.42942e-6}; // |eta_plus - eta_circ|_2
};

inline NormSet norms(const SmoothingKind& k, const PinnedEtaPlus& pinned = {}) {
    using namespace smoothing_detail;
    NormSet n;
    switch (k.tag) {
    case SmoothingKind::eta1: {
        n.l1 = NormEntry(Interval::exact(1.0), Provenance::computed);
        n.linf = NormEntry(Interval::exact(2.0), Provenance::computed);
        n.l2 = NormEntry(sqrt(Interval::exact(2.0)), Provenance::computed);
        n.linf_t = NormEntry(Interval::exact(2.0), Provenance::computed);
        return n;
    }
    case SmoothingKind::eta2: {
        auto f = [](const Interval& t) { return eval_eta2_core(t); };
        QuadOptions opt; opt.initial_panels = 1 << 14; opt.max_panels = 1 << 20;
        n.l1 = NormEntry(integrate_enclose(f, 0.25, 1.0, 2e-6, opt).value, Provenance::computed);
        auto f2 = [](const Interval& t) { Interval v = eval_eta2_core(t); return sqr(v); };
        n.l2 = NormEntry(sqrt(integrate_enclose(f2, 0.25, 1.0, 2e-6, opt).value),
                         Provenance::computed);
        n.linf = NormEntry(4.0 * ln2(), Provenance::computed);
        n.linf_t = NormEntry(prove_max([&](const Interval& t) {
            return eval(SmoothingKind::make(SmoothingKind::eta2), t) * t; },
            Interval(0.25, 1.0), 40, 1e-7), Provenance::computed);
        return n;
    }
    case SmoothingKind::eta_circ: {
        QuadOptions opt; opt.initial_panels = 1 << 12; opt.max_panels = 1 << 22;
        n.l1 = NormEntry(integrate_enclose(
                             [](const Interval& t) { return eval_eta_circ_core(t); },
                             [](const Interval& t) { return eta_circ_d1(t); },
                             0.0, 2.0, 1e-8, opt).value,
                         Provenance::computed);
        n.l2 = NormEntry(sqrt(integrate_enclose(
                                  [](const Interval& t) { return sqr(eval_eta_circ_core(t)); },
                                  [](const Interval& t) {
                                      return 2.0 * eval_eta_circ_core(t) * eta_circ_d1(t); },
                                  0.0, 2.0, 1e-8, opt).value),
                         Provenance::computed);
        n.l2_deriv = NormEntry(integrate_enclose(
                                   [](const Interval& t) { return sqr(eta_circ_d1(t)); },
                                   [](const Interval& t) {
                                       return 2.0 * eta_circ_d1(t) * eta_circ_d2(t); },
                                   0.0, 2.0, 4e-9, opt).value,
                               Provenance::computed);
        // |eta'''|_1 = 4 max_{[0,1/2]} eta'' + 14  (shape of eta'': up, down to -7
        // at t=1, up symmetrically, down to 0)
        Interval m = prove_max([](const Interval& t) { return eta_circ_d2(t); },
                               Interval(0.0, 0.5), 30, 1e-7);
        n.l1_d3 = NormEntry(4.0 * m + 14.0, Provenance::computed);
        n.linf = NormEntry(prove_max([](const Interval& t) { return eval_eta_circ_core(t); },
                                     Interval(0.0, 2.0), 30, 1e-9),
                           Provenance::computed);
        n.linf_t = NormEntry(prove_max([](const Interval& t) {
                                 return eval_eta_circ_core(t) * t; },
                                 Interval(0.0, 2.0), 30, 1e-9),
                             Provenance::computed);
        return n;
    }
    case SmoothingKind::phi_gauss: {
        Interval half_pi = pi() / 2.0;
        n.l1 = NormEntry(sqrt(half_pi), Provenance::computed);           // sqrt(pi/2)
        n.l2 = NormEntry(sqrt(sqrt(pi()) * 3.0 / 8.0), Provenance::computed);
        n.linf = NormEntry(2.0 / exp(Interval::exact(1.0)), Provenance::computed);
        n.linf_t = NormEntry(pow_real(Interval::exact(3.0), Interval::ratio(3, 2)) *
                                 exp(Interval::ratio(-3, 2)),
                             Provenance::computed);
        return n;
    }
    case SmoothingKind::eta_star: {
        Interval kap = Interval::exact(k.kappa);
        n.l1 = NormEntry(sqrt(pi() / 2.0) / kap, Provenance::computed); // |eta2|_1 |phi|_1 / kappa
        // |eta2 *_M phi|_2^2 <= (3/4)|eta2/sqrt t|_2^2 |phi|_2^2 = (3/4)(32/3)(log 2)^3 (3/8)sqrt(pi)
        Interval l22 = (3.0 / 4.0) * ((32.0 / 3.0) * pow_int(ln2(), 3)) *
                       ((3.0 / 8.0) * sqrt(pi())) / kap;
        n.l2 = NormEntry(Interval(0.0, sqrt(Interval(0.0, l22.hi)).hi), Provenance::computed);
        // |eta_star|_inf <= |eta2(t)/t|_1 |phi|_inf = 4(log 2)^2 * 2/e
        Interval linf = 4.0 * sqr(ln2()) * (2.0 / exp(Interval::exact(1.0)));
        n.linf = NormEntry(Interval(0.0, linf.hi), Provenance::computed);
        Interval linft = pow_real(Interval::exact(3.0), Interval::ratio(3, 2)) *
                         exp(Interval::ratio(-3, 2)) / kap;
        n.linf_t = NormEntry(Interval(0.0, linft.hi), Provenance::computed);
        return n;
    }
    case SmoothingKind::eta_plus: {
        n.l1 = NormEntry(pinned.l1, Provenance::pinned, "eq:sazar.l1");
        n.l2 = NormEntry(pinned.l2, Provenance::pinned, "eq:sazar.l2");
        n.linf = NormEntry(pinned.linf, Provenance::pinned, "eq:sazar.linf");
        n.linf_t = NormEntry(pinned.linf_t, Provenance::pinned, "eq:muthit.linf_t");
        return n;
    }
    default:
        throw std::logic_error("norms: unsupported kind");
    }
}

// Slow opt-in: recompute coarse eta_plus norm enclosures from the pointwise
// band-limited evaluation (each point is itself a truncated oscillatory
// integral, so this is minutes, not milliseconds).  Tails use
// |eta_plus(t)| <= 0.17 t e^{-t^2/2} outside [0.02, 4].
inline NormSet recompute_eta_plus_norms(double H, int panels = 48) {
    using namespace smoothing_detail;
    SmoothingKind k = SmoothingKind::make_plus(H);
    double a = 0.02, b = 4.0;
    Interval l1 = Interval::exact(0.0), l22 = Interval::exact(0.0);
    double sup = 0.0;
    for (int i = 0; i < panels; ++i) {
        double t0 = a + (b - a) * i / panels, t1 = a + (b - a) * (i + 1) / panels;
        Interval v = eval(k, Interval(t0, t1));
        Interval av = abs(v);
        l1 = l1 + av * (t1 - t0);
        l22 = l22 + sqr(av) * (t1 - t0);
        sup = std::max(sup, av.hi);
    }
    // head: |h_H| <= (1/(pi |log(t/2)|)) int h2(s)/s ds < 0.17 for t <= 0.02
    Interval head_l1 = Interval(0.0, 0.17 * 0.02 * 0.02);
    // tail: 0.17 int_4^inf t e^{-t^2/2} dt = 0.17 e^{-8}
    Interval tail_l1 = Interval(0.0, (0.17 * exp(Interval::exact(-8.0))).hi);
    Interval tail_l22 = Interval(0.0, (0.0289 * exp(Interval::exact(-16.0)) / 2.0).hi);
    NormSet n;
    n.l1 = NormEntry(l1 + head_l1 + tail_l1, Provenance::computed);
    n.l2 = NormEntry(sqrt(l22 + tail_l22), Provenance::computed);
    n.linf = NormEntry(Interval(0.0, sup), Provenance::computed);
    return n;
}

// ---------------------------------------------------------------------------
// Mellin transforms (closed forms)

struct CInterval {
    Interval re, im;
};

inline CInterval cmul(const CInterval& a, const CInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline CInterval cdiv(const CInterval& a, const CInterval& b) {
    Interval den = sqr(b.re) + sqr(b.im);
    if (den.contains_zero()) throw std::domain_error("cdiv: denominator contains zero");
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

// c^s for real c > 0: c^s = e^{s log c}
inline CInterval cpow_base(double c, const CInterval& s) {
    if (c == 0.0) return {Interval::exact(0.0), Interval::exact(0.0)};
    Interval lc = log(Interval::exact(c));
    Interval a = s.re * lc, b = s.im * lc;
    Interval ea = exp(a);
    return {ea * cos(b), ea * sin(b)};
}

// real Gamma(x) for x > 0 by Stirling with explicit remainder
inline Interval gamma_real(const Interval& x_in) {
    if (x_in.lo <= 0.0) throw std::domain_error("gamma_real: x > 0 required");
    Interval x = x_in;
    Interval shift = Interval::exact(1.0);
    while (x.lo < 12.0) { shift = shift * x; x = x + 1.0; }
    // ln Gamma(x) = (x-1/2) ln x - x + ln(2 pi)/2 + sum B_2k/(2k(2k-1) x^{2k-1}) + R
    Interval lg = (x - 0.5) * log(x) - x + log(2.0 * pi()) / 2.0;
    const double B[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30};
    for (int k = 1; k <= 4; ++k)
        lg = lg + Interval::exact(B[k - 1]) /
                      (Interval::exact((double)(2 * k * (2 * k - 1))) * pow_int(x, 2 * k - 1));
    // |R_4| <= |B_10| / (10*9*x^9), B_10 = 5/66
    Interval rbound = Interval::exact(5.0 / 66.0) / (90.0 * pow_int(x, 9));
    lg = lg + Interval(-rbound.hi, rbound.hi);
    return exp(lg) / shift;
}

struct MellinKind {
    enum Tag { eta2, eta4, indicator, exp_decay } tag;
    double a = 0.0, b = 1.0; // indicator limits
    double z = 1.0;          // exp_decay rate
};

inline CInterval mellin(const MellinKind& k, const CInterval& s) {
    Interval smag = sqr(s.re) + sqr(s.im);
    if (smag.contains_zero()) throw std::domain_error("mellin: s must not enclose 0");
    switch (k.tag) {
    case MellinKind::eta2:
    case MellinKind::eta4: {
        CInterval one{Interval::exact(1.0), Interval::exact(0.0)};
        CInterval half_pow = cpow_base(2.0, {-s.re, -s.im});
        CInterval num{one.re - half_pow.re, -half_pow.im};
        CInterval base = cdiv(num, s);
        CInterval r = cmul(base, base);
        if (k.tag == MellinKind::eta4) r = cmul(r, r);
        return r;
    }
    case MellinKind::indicator: {
        CInterval bs = cpow_base(k.b, s);
        CInterval as = k.a > 0.0 ? cpow_base(k.a, s)
                                 : CInterval{Interval::exact(0.0), Interval::exact(0.0)};
        if (k.a == 0.0 && s.re.lo <= 0.0)
            throw std::domain_error("mellin indicator: a = 0 needs Re s > 0");
        return cdiv({bs.re - as.re, bs.im - as.im}, s);
    }
    case MellinKind::exp_decay: {
        // Gamma(s)/z^s, real s only
        if (!(s.im.lo == 0.0 && s.im.hi == 0.0))
            throw std::invalid_argument("mellin exp_decay: real s only");
        if (k.z <= 0.0) throw std::domain_error("mellin exp_decay: z > 0 required");
        Interval g = gamma_real(s.re);
        Interval zp = pow_real(Interval::exact(k.z), s.re);
        return {g / zp, Interval::exact(0.0)};
    }
    }
    throw std::logic_error("mellin: bad kind");
}

// ---------------------------------------------------------------------------
// Fourier decay: |f^(k)|_1 / (2 pi t)^k

inline Interval fourier_decay(const NormSet& n, int k, double t) {
    if (k == 0) {
        if (!n.l1.present) throw std::invalid_argument("fourier_decay: |f|_1 unavailable");
        return n.l1.value;
    }
    if (k == 3) {
        if (!n.l1_d3.present) throw std::invalid_argument("fourier_decay: |f'''|_1 unavailable");
        return n.l1_d3.value / pow_int(2.0 * pi() * Interval::exact(t), 3);
    }
    throw std::invalid_argument("fourier_decay: only k in {0,3} supported");
}

// ---------------------------------------------------------------------------
// Cauchy-Schwarz degradation:  <v,w> = |v||w| + O*(2.71 |v-w|^2)

struct DegradeResult {
    bool applicable = false; // precondition |w-v| <= |v|/2
    bool pass = false;
    Interval lhs, rhs;
};

inline DegradeResult cauchy_degrade_check(const std::vector<double>& v,
                                          const std::vector<double>& w) {
    if (v.size() != w.size()) throw std::invalid_argument("cauchy_degrade_check: size mismatch");
    Interval dot = Interval::exact(0.0), nv2 = Interval::exact(0.0),
             nw2 = Interval::exact(0.0), nd2 = Interval::exact(0.0);
    for (size_t i = 0; i < v.size(); ++i) {
        Interval vi = Interval::exact(v[i]), wi = Interval::exact(w[i]);
        dot = dot + vi * wi;
        nv2 = nv2 + sqr(vi);
        nw2 = nw2 + sqr(wi);
        nd2 = nd2 + sqr(wi - vi);
    }
    DegradeResult r;
    // precondition: |w - v|_2 <= |v|_2 / 2
    if (!(sqrt(nd2).hi <= (sqrt(nv2) / 2.0).lo)) return r;
    r.applicable = true;
    r.lhs = abs(dot - sqrt(nv2) * sqrt(nw2));
    r.rhs = Interval::ratio(271, 100) * nd2;
    r.pass = r.lhs.hi <= r.rhs.lo || r.lhs.certainly_le(r.rhs);
    return r;
}

// ---------------------------------------------------------------------------
// autocorrelation of eta_circ:
//   (eta_circ * eta_circ)(rho) = |eta_circ|_2^2 + O*(2.71 (2-rho)^2 |eta_circ'|_2^2)

struct AutocorrResult {
    bool certified = false;  // |value - center| <= radius proven
    bool consistent = false; // membership cannot be refuted (equality cases)
    Interval value, center, radius;
};

inline AutocorrResult autocorr_check(double rho, const NormSet& circ_norms) {
    if (rho < 0.0 || rho > 2.0) throw std::invalid_argument("autocorr_check: rho in [0,2]");
    if (!circ_norms.l2.present || !circ_norms.l2_deriv.present)
        throw std::invalid_argument("autocorr_check: need |eta|_2 and |eta'|_2^2");
    using namespace smoothing_detail;
    double a = std::max(0.0, rho - 2.0), b = std::min(2.0, rho);
    Interval R = Interval::exact(rho);
    auto f = [&](const Interval& t) {
        return eval(SmoothingKind::make(SmoothingKind::eta_circ), t) *
               eval(SmoothingKind::make(SmoothingKind::eta_circ), R - t);
    };
    auto df = [&](const Interval& t) {
        Interval u1 = t, u2 = R - t;
        Interval e1 = eval(SmoothingKind::make(SmoothingKind::eta_circ), u1);
        Interval e2 = eval(SmoothingKind::make(SmoothingKind::eta_circ), u2);
        Interval d1 = u1.hi < 0.0 || u1.lo > 2.0 ? Interval::exact(0.0)
                      : hull(Interval::exact(0.0), eta_circ_d1(intersect(u1, Interval(0.0, 2.0))));
        Interval d2 = u2.hi < 0.0 || u2.lo > 2.0 ? Interval::exact(0.0)
                      : hull(Interval::exact(0.0), eta_circ_d1(intersect(u2, Interval(0.0, 2.0))));
        return d1 * e2 - e1 * d2;
    };
    QuadOptions opt; opt.initial_panels = 1 << 12; opt.max_panels = 1 << 18;
    AutocorrResult r;
    r.value = a < b ? integrate_enclose(f, df, a, b, 1e-6, opt).value : Interval::exact(0.0);
    r.center = sqr(circ_norms.l2.value);
    r.radius = Interval::ratio(271, 100) * sqr(Interval::exact(2.0 - rho)) *
               circ_norms.l2_deriv.value;
    Interval diff = abs(r.value - r.center);
    r.certified = diff.hi <= r.radius.lo;
    r.consistent = diff.lo <= r.radius.hi;
    return r;
}

} // namespace goldbach
