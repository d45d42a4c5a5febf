// quadrature.hpp
//
// Enclosure quadrature: interval-evaluated midpoint rule on uniform panels
// with a first-derivative remainder, refined until the enclosure width meets
// tolerance.  With a derivative the remainder per panel is
//   +- width(f'(panel)) * h^2 / 8        (centered mean-value form)
// and without one it degrades to plain interval evaluation f(panel) * h.
//
// Improper upper limits are handled by a caller-supplied closed-form tail
// majorant (the Gaussian tail (y + 2/y) e^{-y^2/2} is provided as a helper).

#pragma once

#include <functional>
#include <stdexcept>

#include "goldbach/interval.hpp"

namespace goldbach {

using IvlFn = std::function<Interval(const Interval&)>;

struct QuadResult {
    Interval value;
    bool width_met = false;   // enclosure width <= tol achieved
    int panels = 0;

    operator Interval() const { return value; }
};

struct QuadOptions {
    int initial_panels = 1 << 10;
    int max_panels = 1 << 22;
    int refine_factor = 4;
};

// integral of f over [a, b]; df (optional) is an enclosure of f' used for
// the centered remainder
inline QuadResult integrate_enclose(const IvlFn& f, const IvlFn& df,
                                    double a, double b, double tol,
                                    QuadOptions opt = {}) {
    if (!(a <= b)) throw std::invalid_argument("integrate_enclose: a > b");
    if (std::isinf(a) || std::isinf(b))
        throw std::invalid_argument("integrate_enclose: infinite endpoint needs a tail bound");
    QuadResult res;
    for (int n = opt.initial_panels;; n *= opt.refine_factor) {
        // panel boundaries on a double grid (exactly tiling [a, b]); block
        // subtotals keep the per-add rounding from accumulating over n
        double hd = (b - a) / n;
        Interval h_iv = (Interval::exact(b) - Interval::exact(a)) / (double)n;
        Interval total = Interval::exact(0.0);
        Interval block = Interval::exact(0.0);
        const int block_size = 2048;
        for (int i = 0; i < n; ++i) {
            double x0 = (i == 0) ? a : a + hd * i;
            double x1 = (i == n - 1) ? b : a + hd * (i + 1);
            if (x1 < x0) x1 = x0;
            Interval panel(x0, x1);
            Interval dx = Interval::exact(x1) - Interval::exact(x0);
            if (df) {
                Interval fm = f(Interval::exact(panel.mid()));
                Interval d = df(panel);
                double halfw = 0.5 * d.width();
                Interval rem = Interval(-halfw, halfw) * sqr(h_iv) / 8.0;
                block = block + fm * dx + rem;
            } else {
                block = block + f(panel) * dx;
            }
            if ((i + 1) % block_size == 0 || i == n - 1) {
                total = total + block;
                block = Interval::exact(0.0);
            }
        }
        res.value = total;
        res.panels = n;
        if (total.width() <= tol) { res.width_met = true; return res; }
        if (n >= opt.max_panels) { res.width_met = false; return res; }
    }
}

inline QuadResult integrate_enclose(const IvlFn& f, double a, double b, double tol,
                                    QuadOptions opt = {}) {
    return integrate_enclose(f, IvlFn{}, a, b, tol, opt);
}

// integral over [a, +inf): tail(y) must enclose the integral of f over
// [y, +inf) for every y >= a
inline QuadResult integrate_to_inf(const IvlFn& f, const IvlFn& df, double a,
                                   double tol, const std::function<Interval(double)>& tail,
                                   QuadOptions opt = {}) {
    if (!tail) throw std::invalid_argument("integrate_to_inf: tail bound required");
    double cut = std::max(a + 1.0, 2.0 * std::fabs(a) + 8.0);
    Interval t = tail(cut);
    for (int tries = 0; tries < 60 && t.width() + std::fabs(t.hi) > 0.25 * tol; ++tries) {
        cut *= 1.5;
        t = tail(cut);
    }
    QuadResult main = integrate_enclose(f, df, a, cut, 0.5 * tol, opt);
    main.value = main.value + t;
    main.width_met = main.value.width() <= tol;
    return main;
}

// Gaussian tail majorant: integral over [y, inf) of t^2 e^{-t^2/2} dt
// is < (y + 2/y) e^{-y^2/2} for y > 0.
inline Interval gaussian_moment2_tail(double y) {
    Interval Y = Interval::exact(y);
    Interval m = (Y + 2.0 / Y) * exp(-sqr(Y) / 2.0);
    return Interval(0.0, m.hi);
}

} // namespace goldbach
