// zeros.hpp
//
// Consequences of a verified-zeros hypothesis (all nontrivial zeta zeros up
// to height T0 on the critical line):
//
//   |S_m(x)| <= (1/(2 m pi T0^m) + 2.68/T0^{m+1}) x log(e T0/(2 pi)) + kappa_m sqrt(x)
//
//   sum Lambda(n) eta2(n/x) = x + O*(0.135 sqrt(x) + 9.61114/x^2) + rel(T0) x
//
//   direct check for x <= 2000:  sum <= min((1+eps)x + 0.2 sqrt x, 1.04488 x),
//   on the 1/1000 grid with the |eta2'|_inf = 16 Lipschitz slack, exceptional
//   windows re-proved by bisection with a fixed prime-power set.
//
// Appendix ladder: a table of (threshold on log(n-4), Delta) rows replays the
// prime-gap argument to the largest n with (n-4)/Delta <= 4e18 - 4.

#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "goldbach/gsum.hpp"
#include "goldbach/interval.hpp"
#include "goldbach/pinned.hpp"
#include "goldbach/prove.hpp"
#include "goldbach/smoothing.hpp"
#include "goldbach/tables.hpp"

namespace goldbach {

struct ZeroHypothesis {
    double T0 = 3.061e10;
    Interval kappa1{0.0463, 0.0463};
    Interval kappa2{0.00167, 0.00167};
    Interval kappa3{0.0000744, 0.0000744};

    static ZeroHypothesis from_pinned(const PinnedConstants& pc) {
        ZeroHypothesis h;
        h.T0 = pc.T0;
        h.kappa1 = pc.kappa1;
        h.kappa2 = pc.kappa2;
        h.kappa3 = pc.kappa3;
        if (!(h.T0 > 2.0 * 3.15 * std::exp(1.0)))
            throw std::invalid_argument("ZeroHypothesis: T0 > 2 pi e required");
        return h;
    }
};

inline Interval zero_sum_bound(int m, double x, const ZeroHypothesis& hyp) {
    if (m < 1 || m > 3) throw std::invalid_argument("zero_sum_bound: m in {1,2,3}");
    if (x < 1.0) throw std::invalid_argument("zero_sum_bound: x >= 1");
    Interval T = Interval::exact(hyp.T0);
    Interval X = Interval::exact(x);
    Interval kap = m == 1 ? hyp.kappa1 : (m == 2 ? hyp.kappa2 : hyp.kappa3);
    Interval coeff = 1.0 / (2.0 * (double)m * pi() * pow_int(T, m)) +
                     Interval::ratio(268, 100) / pow_int(T, m + 1);
    return coeff * X * log(exp(Interval::exact(1.0)) * T / (2.0 * pi())) + kap * sqrt(X);
}

struct CrepeEstimate {
    Interval main;      // x
    Interval abs_sqrt;  // 0.135 sqrt(x)
    Interval abs_x2;    // inner second-moment constant / x^2
    Interval rel;       // T0-dependent relative term (the "epsilon")
};

inline CrepeEstimate crepe_estimate(double x, const ZeroHypothesis& hyp) {
    if (x < 10.0) throw std::invalid_argument("crepe_estimate: x >= 10");
    CrepeEstimate out;
    Interval X = Interval::exact(x);
    out.main = X;
    out.abs_sqrt = Interval::ratio(135, 1000) * sqrt(X);
    out.abs_x2 = Interval::ratio(961114, 100000) / sqr(X); // proof constant 9.61114
    Interval T = Interval::exact(hyp.T0);
    out.rel = (log(exp(Interval::exact(1.0)) * T / (2.0 * pi())) / T) *
              (Interval::ratio(9, 4) / (2.0 * pi()) + Interval::ratio(603, 100) / T);
    return out;
}

// second-moment inner integral: int eta2(t)/(t(t^2 - 1/100)) dt over [1/4,1],
// split at the tent kink so the centered form applies on smooth pieces
inline Interval crepe_inner_constant() {
    auto den = [](const Interval& t) { return t * (sqr(t) - Interval::ratio(1, 100)); };
    auto dden = [](const Interval& t) { return 3.0 * sqr(t) - Interval::ratio(1, 100); };
    // rising branch: eta2 = 4(log 2 + log 2t), falling: 4(log 2 - log 2t)
    auto make = [&](double sign) {
        auto num = [sign](const Interval& t) {
            return 4.0 * (ln2() + sign * log(2.0 * t));
        };
        auto dnum = [sign](const Interval& t) { return Interval::exact(4.0 * sign) / t; };
        IvlFn f = [=](const Interval& t) { return num(t) / den(t); };
        IvlFn df = [=](const Interval& t) {
            return (dnum(t) * den(t) - num(t) * dden(t)) / sqr(den(t));
        };
        return std::pair<IvlFn, IvlFn>(f, df);
    };
    QuadOptions opt;
    opt.initial_panels = 1 << 12;
    opt.max_panels = 1 << 20;
    auto rise = make(1.0);
    auto fall = make(-1.0);
    return integrate_enclose(rise.first, rise.second, 0.25, 0.5, 5e-7, opt).value +
           integrate_enclose(fall.first, fall.second, 0.5, 1.0, 5e-7, opt).value;
}

// ---------------------------------------------------------------------------
// the direct check for x <= 2000

struct PrimePowerTable {
    std::vector<double> n;        // prime powers
    std::vector<Interval> lam;    // Lambda(n) = log p

    static PrimePowerTable build(uint64_t limit) {
        PrimePowerTable t;
        std::vector<uint32_t> primes = MultTables::small_primes(limit);
        std::vector<std::pair<uint64_t, Interval>> rows;
        for (uint32_t p : primes) {
            Interval lp = log(ivl_u64(p));
            for (uint64_t pk = p; pk <= limit; pk *= p) {
                rows.push_back({pk, lp});
                if (pk > limit / p) break;
            }
        }
        std::sort(rows.begin(), rows.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& r : rows) {
            t.n.push_back((double)r.first);
            t.lam.push_back(r.second);
        }
        return t;
    }

    // sum of Lambda(n) eta2(n/x) over all prime powers (support clips itself)
    Interval weighted_sum(const Interval& x) const {
        Interval s = Interval::exact(0.0);
        double nlo = 0.25 * x.lo - 1.0, nhi = x.hi + 1.0;
        auto lo_it = std::lower_bound(n.begin(), n.end(), nlo);
        for (size_t i = lo_it - n.begin(); i < n.size() && n[i] <= nhi; ++i) {
            Interval w = eval(SmoothingKind::make(SmoothingKind::eta2),
                              Interval::exact(n[i]) / x);
            if (w.hi > 0.0) s = s + lam[i] * w;
        }
        return s;
    }

    // psi(x) - psi(x/4 - 1), used for the Lipschitz slack hypothesis
    Interval window_psi(double x) const {
        Interval s = Interval::exact(0.0);
        for (size_t i = 0; i < n.size() && n[i] <= x; ++i)
            if (n[i] >= 0.25 * x) s = s + lam[i];
        return s;
    }
};

struct AusteriaReport {
    bool proven = false;
    uint64_t grid_points = 0;
    uint64_t grid_failures_first = 0;   // points that needed window refinement
    uint64_t grid_failures_second = 0;
    std::vector<std::pair<double, double>> windows_first;  // re-proved by bisection
    std::vector<std::pair<double, double>> windows_second;
    std::optional<double> unresolved_at;
};

// sum Lambda(n) eta2(n/x) <= min((1+eps) x + 0.2 sqrt x, 1.04488 x) for
// x in [1, x_max], via the 1/1000 grid and window refinement
inline AusteriaReport austeria_check(double x_max, const ZeroHypothesis& hyp,
                                     int per_unit = 1000) {
    AusteriaReport rep;
    if (x_max > 2000.0) throw std::invalid_argument("austeria_check: x_max <= 2000");
    PrimePowerTable pp = PrimePowerTable::build((uint64_t)x_max + 2);
    Interval eps = crepe_estimate(2000.0, hyp).rel; // the relative term at T0
    // |S(x') - S(x)| <= 16 dx * max(x)^2/(x x') * 1 for the windowed Lambda sum
    // bounded by x; with dx = step/2 and x >= 1 this is a constant
    Interval slack = Interval(0.0, (Interval::exact(16.0 * 0.5 / per_unit) /
                                    sqr(1.0 - Interval::exact(0.5 / per_unit))).hi);
    // hypothesis: sum of Lambda over [x/4, x] is at most x; the ratio peaks at
    // prime powers, so checking there suffices
    for (double n : pp.n) {
        Interval w = pp.window_psi(n);
        if (!(w.hi <= n)) throw std::logic_error("austeria_check: window psi exceeds x");
    }
    auto boundA = [&](const Interval& x) {
        return (1.0 + eps) * x + Interval::ratio(2, 10) * sqrt(x);
    };
    auto boundB = [&](const Interval& x) { return Interval::ratio(104488, 100000) * x; };

    double step = 1.0 / per_unit;
    uint64_t kmax = (uint64_t)std::llround(x_max * per_unit);
    std::vector<std::pair<double, double>> pendingA, pendingB;
    for (uint64_t k = per_unit; k <= kmax; ++k) {
        double x = (double)k * step;
        Interval X = Interval::exact(x);
        Interval S = pp.weighted_sum(X);
        Interval margin = S + slack;
        Interval Xlo = Interval::exact(x - 0.5 * step);
        ++rep.grid_points;
        if (!(margin.hi <= boundA(Xlo).lo)) {
            ++rep.grid_failures_first;
            if (!pendingA.empty() && pendingA.back().second >= x - step * 1.5)
                pendingA.back().second = x + step;
            else pendingA.push_back({x - step, x + step});
        }
        if (!(margin.hi <= boundB(Xlo).lo)) {
            ++rep.grid_failures_second;
            if (!pendingB.empty() && pendingB.back().second >= x - step * 1.5)
                pendingB.back().second = x + step;
            else pendingB.push_back({x - step, x + step});
        }
    }
    // window refinement: prove bound - S >= 0 on each pending window by bisection
    auto refine = [&](const std::vector<std::pair<double, double>>& windows,
                      const std::function<Interval(const Interval&)>& bound) {
        for (auto& w : windows) {
            ProofOutcome po = bisect_prove(
                [&](const Interval& box) {
                    Interval diff = bound(box) - pp.weighted_sum(box);
                    return diff.lo >= 0.0 ? BoxVerdict::certified : BoxVerdict::unknown;
                },
                Interval(w.first, w.second), 26);
            if (!po.proven) {
                rep.unresolved_at = po.failure_box ? po.failure_box->lo : w.first;
                return false;
            }
        }
        return true;
    };
    rep.windows_first = pendingA;
    rep.windows_second = pendingB;
    rep.proven = refine(pendingA, boundA) && refine(pendingB, boundB);
    return rep;
}

// ---------------------------------------------------------------------------
// the prime-gap ladder

struct DeltaRow {
    double height;        // verified-zeros height this row belongs to (0 = any)
    double log_threshold; // applicable once n - 4 >= e^threshold
    uint64_t delta;
    std::string citation;
};

struct DeltaTable {
    std::vector<DeltaRow> rows;

    static DeltaTable load(const std::string& path) {
        FILE* f = std::fopen(path.c_str(), "r");
        if (!f) throw std::runtime_error("cannot open delta table: " + path);
        DeltaTable t;
        char line[512];
        while (std::fgets(line, sizeof line, f)) {
            std::string s(line);
            if (s.empty() || s[0] == '#') continue;
            DeltaRow r;
            char cite[256] = {0};
            if (std::sscanf(s.c_str(), "%lf %lf %lu %255s", &r.height, &r.log_threshold,
                            &r.delta, cite) >= 3) {
                r.citation = cite;
                t.rows.push_back(r);
            }
        }
        std::fclose(f);
        if (t.rows.empty()) throw std::runtime_error("delta table: no rows parsed");
        return t;
    }

    static DeltaTable builtin();
};

// shipped rows: the base gap bound plus the tabulated values for the three
// verified heights
inline DeltaTable DeltaTable::builtin() {
    DeltaTable t;
    auto add = [&](double h, double thr, uint64_t d, const char* c) {
        t.rows.push_back({h, thr, d, c});
    };
    add(0.0, 25.329, 28314000, "gap-table:base");
    add(3.061e10, 59.0, 307779681, "gap-table:h3.061e10");
    add(3.061e10, 62.0, 307908668, "gap-table:h3.061e10");
    add(2.419e11, 59.0, 13861486834, "gap-table:h2.419e11");
    add(2.419e11, 66.0, 15392435100, "gap-table:h2.419e11");
    add(2.44e12, 59.0, 52211882224, "gap-table:h2.44e12");
    add(2.44e12, 67.0, 146869130682, "gap-table:h2.44e12");
    add(2.44e12, 68.0, 147674531294, "gap-table:h2.44e12");
    return t;
}

struct LadderResult {
    u128 n0 = 0;              // every odd n <= n0 is a sum of three primes
    std::string n0_sixfig;    // first six significant figures, "d.ddddd e NN"
    std::vector<DeltaRow> used;
};

inline std::string u128_sixfig(u128 v) {
    char buf[64];
    int len = 0;
    if (v == 0) return "0";
    while (v > 0) { buf[len++] = char('0' + (int)(v % 10)); v /= 10; }
    std::string digits;
    for (int i = len - 1; i >= 0; --i) digits.push_back(buf[i]);
    std::string six = digits.substr(0, 6);
    std::string out;
    out.push_back(six[0]);
    out.push_back('.');
    out += six.substr(1);
    out += "e" + std::to_string(len - 1);
    return out;
}

inline LadderResult ladder_n0(const ZeroHypothesis& hyp, const DeltaTable& table,
                              uint64_t two_prime_limit = 4000000000000000000ull) {
    // start: every even m <= two_prime_limit is a sum of two primes, so every
    // odd n <= two_prime_limit + 3 works directly
    const uint64_t M = two_prime_limit - 4; // max allowed (n-4)/Delta
    u128 cover = (u128)two_prime_limit - 1; // covered n-4 so far
    LadderResult out;
    std::vector<DeltaRow> rows;
    for (const DeltaRow& r : table.rows)
        if (r.height == 0.0 || std::fabs(r.height - hyp.T0) / hyp.T0 < 1e-6)
            rows.push_back(r);
    std::sort(rows.begin(), rows.end(),
              [](const DeltaRow& a, const DeltaRow& b) {
                  return a.log_threshold < b.log_threshold;
              });
    bool progress = true;
    while (progress) {
        progress = false;
        for (const DeltaRow& r : rows) {
            Interval thr = exp(Interval::exact(r.log_threshold));
            // applicable if the regime start is already covered
            if (!(ivl_u128(cover).lo + 1.0 >= thr.hi)) continue;
            u128 reach = (u128)r.delta * (u128)M;
            if (reach > cover) {
                cover = reach;
                out.used.push_back(r);
                progress = true;
            }
        }
    }
    out.n0 = cover + 4;
    out.n0_sixfig = u128_sixfig(out.n0);
    return out;
}

} // namespace goldbach
