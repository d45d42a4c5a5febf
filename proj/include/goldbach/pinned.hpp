// pinned.hpp
//
// Error constants imported from the companion exponential-sum estimates.
// They enter the evaluation chains as inputs; each carries the raw pieces of
// its derivation so the stated inequality can be re-checked in interval
// arithmetic before use (validate_pinned).
//
// Values are shipped both as in-code defaults and as a versioned text file
// (data/pinned_constants.txt): lines "key lo hi citation", '#' comments.

#pragma once

#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>

#include "goldbach/interval.hpp"
#include "goldbach/smoothing.hpp"

namespace goldbach {

struct PinnedConstants {
    // trivial-character error, eta_plus:  a + b/sqrt(x_+)  <= et_eta_plus
    Interval zakone1_a{3.34e-11, 3.34e-11};
    Interval zakone1_b{251100.0, 251100.0};
    Interval et_eta_plus{0.0, 1.1377e-8};

    // sqrt(q)-weighted error, eta_plus:  a + b/sqrt(2) + (c + d sqrt(300000))/sqrt(x_+)
    Interval zakone2_a{6.18e-12, 6.18e-12};
    Interval zakone2_b{1.14e-10, 1.14e-10};
    Interval zakone2_c{499100.0, 499100.0};
    Interval zakone2_d{52.0, 52.0};
    Interval e_eta_plus{0.0, 2.3921e-8};

    // sqrt(q)-weighted error, eta_star (per unit kappa):
    //   a + (c + d sqrt(300000))/sqrt(x_+)
    Interval fabienne_a{4.269e-14, 4.269e-14};
    Interval fabienne_c{380600.0, 380600.0};
    Interval fabienne_d{76.0, 76.0};
    Interval e_eta_star_kappa{0.0, 1.9075e-8};
    Interval err_eta_star_chi0{0.0, 1.71973e-8}; // at delta = 0, per unit kappa

    // sum Lambda(n) log(n) eta^2(n/x) = (m0 + O*(m_eps)) x log x - m1 x
    Interval malavita_m0{0.640206, 0.640206};
    Interval malavita_eps{0.0, 3e-6};
    Interval malavita_m1{0.021095, 0.021095};

    // eta_plus norms and the L2 distance to eta_circ
    PinnedEtaPlus eta_plus;

    double x_plus = 4.9e26;
    double H = 200.0;

    // verified-zeros hypothesis inputs
    double T0 = 3.061e10;
    Interval kappa1{0.0463, 0.0463};
    Interval kappa2{0.00167, 0.00167};
    Interval kappa3{0.0000744, 0.0000744};
};

// Re-derive each pinned headline constant from its pieces; throws on mismatch.
inline void validate_pinned(const PinnedConstants& c) {
    Interval rx = sqrt(Interval::exact(c.x_plus));
    Interval v1 = c.zakone1_a + c.zakone1_b / rx;
    if (!(v1.hi <= c.et_eta_plus.hi))
        throw std::invalid_argument("pinned: trivial-character eta_plus bound fails recheck");
    Interval v2 = c.zakone2_a + c.zakone2_b / sqrt(Interval::exact(2.0)) +
                  (c.zakone2_c + c.zakone2_d * sqrt(Interval::exact(300000.0))) / rx;
    if (!(v2.hi <= c.e_eta_plus.hi))
        throw std::invalid_argument("pinned: eta_plus error bound fails recheck");
    Interval v3 = c.fabienne_a +
                  (c.fabienne_c + c.fabienne_d * sqrt(Interval::exact(300000.0))) / rx;
    if (!(v3.hi <= c.e_eta_star_kappa.hi))
        throw std::invalid_argument("pinned: eta_star error bound fails recheck");
    Interval v4 = c.fabienne_a + (c.fabienne_c + c.fabienne_d) / rx;
    if (!(v4.hi <= c.err_eta_star_chi0.hi))
        throw std::invalid_argument("pinned: eta_star chi0 bound fails recheck");
    // |eta_plus|_2 <= 0.800129 + 274.8569/H^{7/2} and the eta_circ distance
    Interval h72 = pow_real(Interval::exact(c.H), Interval::ratio(7, 2));
    Interval l2 = Interval::exact(0.800129) + Interval::exact(274.8569) / h72;
    if (!(l2.hi <= c.eta_plus.l2.hi))
        throw std::invalid_argument("pinned: |eta_plus|_2 bound fails recheck");
    Interval dist = Interval::exact(274.856893) / h72;
    if (!(dist.hi <= c.eta_plus.dist_eta_circ_l2.hi))
        throw std::invalid_argument("pinned: |eta_plus - eta_circ|_2 bound fails recheck");
    Interval linf = 1.0 + Interval::exact(2.06440727) *
                              (1.0 + (4.0 / pi()) * log(Interval::exact(c.H))) / c.H;
    if (!(linf.hi <= c.eta_plus.linf.hi))
        throw std::invalid_argument("pinned: |eta_plus|_inf bound fails recheck");
    Interval linft = Interval::exact(1.064735) +
                     Interval::exact(3.25312) *
                         (1.0 + (4.0 / pi()) * log(Interval::exact(c.H))) / c.H;
    if (!(linft.hi <= c.eta_plus.linf_t.hi))
        throw std::invalid_argument("pinned: |eta_plus t|_inf bound fails recheck");
}

// text format: key lo hi [citation...]
inline PinnedConstants load_pinned(const std::string& path) {
    FILE* f = std::fopen(path.c_str(), "r");
    if (!f) throw std::runtime_error("cannot open pinned constants file: " + path);
    PinnedConstants c;
    std::map<std::string, Interval*> keys = {
        {"zakone1.a", &c.zakone1_a}, {"zakone1.b", &c.zakone1_b},
        {"zakone1.bound", &c.et_eta_plus},
        {"zakone2.a", &c.zakone2_a}, {"zakone2.b", &c.zakone2_b},
        {"zakone2.c", &c.zakone2_c}, {"zakone2.d", &c.zakone2_d},
        {"zakone2.bound", &c.e_eta_plus},
        {"fabienne.a", &c.fabienne_a}, {"fabienne.c", &c.fabienne_c},
        {"fabienne.d", &c.fabienne_d}, {"fabienne.bound", &c.e_eta_star_kappa},
        {"fabienne.chi0", &c.err_eta_star_chi0},
        {"malavita.m0", &c.malavita_m0}, {"malavita.eps", &c.malavita_eps},
        {"malavita.m1", &c.malavita_m1},
        {"sazar.l1", &c.eta_plus.l1}, {"sazar.l2", &c.eta_plus.l2},
        {"sazar.linf", &c.eta_plus.linf}, {"muthit.linf_t", &c.eta_plus.linf_t},
        {"sanchez.dist", &c.eta_plus.dist_eta_circ_l2},
        {"shim.kappa1", &c.kappa1}, {"shim.kappa2", &c.kappa2}, {"shim.kappa3", &c.kappa3},
    };
    char line[512];
    while (std::fgets(line, sizeof line, f)) {
        std::string s(line);
        if (s.empty() || s[0] == '#') continue;
        char key[128];
        double lo, hi;
        if (std::sscanf(s.c_str(), "%127s %lf %lf", key, &lo, &hi) == 3) {
            std::string k(key);
            if (k == "x_plus") { c.x_plus = lo; continue; }
            if (k == "T0") { c.T0 = lo; continue; }
            if (k == "H") { c.H = lo; continue; }
            auto it = keys.find(k);
            if (it != keys.end()) *it->second = Interval(lo, hi);
        }
    }
    std::fclose(f);
    return c;
}

} // namespace goldbach
