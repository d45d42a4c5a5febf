// sieve.hpp
//
// Large sieve for primes: the quotient G_q(Q_0/sq)/G_q(Q/sq) machinery.
//
//   digamma_F(r)    = e^gamma log log r + 2.50637/log log r  (upper bound for q/phi(q))
//   trivial bound   (e^gamma log(Q0/sq + log q) + 1.172)/(log(Q/Q0) + 1.312)
//   paniz threshold c(sigma) Q0^{(1-rho) e^{-gamma}} - log q
//   espagn_verify   per-q certificate: for integer R in [varpi(q), lambda(q))
//                   check  err_{q,R} + omega(rho) max(0, -err_{q,tR}) <= (phi/q) kappa(q)
//                   with err_{q,tR} bounded by 7.284 (tR)^{-1/3} f_1(q), t >= 20000
//   large_sieve_factor: the resulting multiplicative l^2 factor
//                   (log Q0 + c_+)/(log Q + c_E), with the trivial fallback 1
//
// omega(rho) is evaluated at rho = 0.6, its maximum over the admissible range,
// so one certificate covers all smaller rho.

#pragma once

#include <atomic>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "goldbach/arithfn.hpp"
#include "goldbach/gsum.hpp"
#include "goldbach/interval.hpp"
#include "goldbach/tables.hpp"

namespace goldbach {

inline Interval digamma_F(const Interval& r) {
    if (r.lo <= std::exp(1.0))
        throw std::domain_error("digamma_F: r > e required");
    Interval ll = log_log(r);
    return e_gamma() * ll + Interval::ratio(250637, 100000) / ll;
}

inline bool merkel_check(uint64_t q, double r, const MultTables& t) {
    if (r < std::max<double>(3.0, (double)q))
        throw std::invalid_argument("merkel_check: r >= max(3, q) required");
    Interval lhs = ivl_u64(q) / ivl_u64(t.phi(q));
    Interval rhs = digamma_F(Interval::exact(r));
    return lhs.hi < rhs.lo;
}

struct SieveParams {
    double Q0 = 1e5;
    double Q = 2e9;
    double rho_max = 0.6;      // certificates are computed at the worst rho
    double c_plus = 1.36;
    double Q0_min = 1e5;
    double delta0 = 8.0;
    double t_min = 20000.0;    // Q >= t_min * Q0
    Interval cE = Interval(1.332582275 - 4e-10, 1.332582275 + 4e-10);
};

// omega(rho) = rho + (c_+ - rho c_E)/(log(Q0_min)/rho + c_E); increasing in rho
inline Interval espagn_omega(const SieveParams& p) {
    Interval rho = Interval::exact(p.rho_max);
    Interval cp = Interval::ratio(136, 100);
    return rho + (cp - rho * p.cE) / (log(Interval::exact(p.Q0_min)) / rho + p.cE);
}

inline Interval quotient_bound_trivial(const SieveParams& p, uint64_t q, double s) {
    if (!(p.Q >= 182.0 * p.Q0)) throw std::invalid_argument("trivial bound: Q >= 182 Q0");
    if (!((double)q <= p.Q0) || !(s >= 1.0) || !(s <= p.Q0 / (double)q))
        throw std::invalid_argument("trivial bound: need q <= Q0 and 1 <= s <= Q0/q");
    Interval arg = Interval::exact(p.Q0) / (Interval::exact(s) * ivl_u64(q)) + log(ivl_u64(q));
    Interval num = e_gamma() * log(arg) + Interval::ratio(1172, 1000);
    Interval den = log(Interval::exact(p.Q) / Interval::exact(p.Q0)) + Interval::ratio(1312, 1000);
    return num / den;
}

// c(sigma) = exp(e^{-gamma} (sigma - sigma^2/5.248 - 1.172))
inline Interval paniz_c(const Interval& sigma) {
    return exp(exp(-euler_gamma()) *
               (sigma - sqr(sigma) / Interval::ratio(5248, 1000) - Interval::ratio(1172, 1000)));
}

inline Interval paniz_threshold(double sigma, double rho, double Q0, uint64_t q) {
    if (!(sigma >= 1.312 * rho))
        throw std::invalid_argument("paniz_threshold: sigma >= 1.312 rho required");
    Interval tau = (1.0 - Interval::exact(rho)) * exp(-euler_gamma());
    Interval thr = paniz_c(Interval::exact(sigma)) * pow_real(Interval::exact(Q0), tau);
    if (q > 1) thr = thr - log(ivl_u64(q));
    return thr;
}

// ---------------------------------------------------------------------------
// the espagn verification

struct QRecord {
    uint64_t q = 0;
    Interval varpi, lambda;
    uint64_t scan_lo = 0, scan_hi = 0; // inclusive integer range scanned (0,0 = vacuous)
    Interval worst_slack;              // min over R of rhs - lhs (>= 0 means pass)
    bool pass = true;
};

struct QuotientCertificate {
    uint64_t q_max_checked = 0;
    SieveParams params;
    std::vector<QRecord> records;
    std::vector<uint64_t> failures;

    bool valid() const { return failures.empty(); }
};

namespace sieve_detail {

struct EspagnContext {
    SieveParams p;
    Interval omega, beta, c_delta, c_rho2, tau, c_cplus, log_Q0min;
    Interval seven284 = Interval::ratio(7284, 1000);

    explicit EspagnContext(const SieveParams& params) : p(params) {
        omega = espagn_omega(p);
        Interval cp = Interval::ratio(136, 100);
        c_delta = cp - p.cE;
        beta = omega / cbrt(Interval::exact(p.t_min));
        // c_rho2 = exp((1.4709 - cE) + omega (cE - 1.312) - c_delta)
        c_rho2 = exp((Interval::ratio(14709, 10000) - p.cE) +
                     omega * (p.cE - Interval::ratio(1312, 1000)) - c_delta);
        tau = (1.0 - Interval::exact(p.rho_max)) * exp(-euler_gamma());
        c_cplus = paniz_c(cp);
        log_Q0min = log(Interval::exact(p.Q0_min));
    }

    Interval kappa(uint64_t q, const Interval& sum_logp_p) const {
        Interval lq = q > 1 ? log(ivl_u64(q)) : Interval::exact(0.0);
        return (1.0 - omega) * (lq - sum_logp_p) + c_delta;
    }

    Interval lambda(uint64_t q, uint64_t phi_q, const Interval& f1,
                    const Interval& kap) const {
        if (kap.lo <= 0.0) return Interval(1e30, 1e30); // no useful analytic regime
        Interval base = (ivl_u64(q) / ivl_u64(phi_q)) * seven284 * (1.0 + beta) * f1 / kap;
        return pow_int(base, 3);
    }

    Interval varpi(uint64_t q) const {
        Interval lq = q > 1 ? log(ivl_u64(q)) : Interval::exact(0.0);
        Interval qv = ivl_u64(q);
        // varpi_0
        Interval cqt = c_cplus * pow_real(qv, tau);
        Interval w0 = Interval::exact(0.0);
        if (cqt.lo > (lq + 1.0).hi) {
            Interval inner = cqt - lq / pow_real(cqt - lq, tau / (1.0 - tau));
            if (inner.lo > 0.0)
                w0 = pow_real(inner, 1.0 / (1.0 - tau));
        }
        Interval w1 = c_cplus * exp(tau * log_Q0min) - lq;
        Interval w2 = Interval::exact(p.Q0_min) /
                      pow_real(c_rho2 * qv, 1.0 / (1.0 - omega));
        double lo = std::max(w0.lo, std::max(w1.lo, w2.lo));
        double hi = std::max(w0.hi, std::max(w1.hi, w2.hi));
        return Interval(lo, hi);
    }
};

// q with its factorization data (q itself may exceed the table limit)
struct QInfo {
    uint64_t q = 1;
    uint64_t phi = 1;
    std::vector<uint64_t> primes;
};

inline QInfo qinfo_from_tables(uint64_t q, const MultTables& t) {
    QInfo inf;
    inf.q = q;
    inf.phi = t.phi(q);
    if (q > 1)
        for (uint32_t p : t.prime_factors(q)) inf.primes.push_back(p);
    return inf;
}

inline QInfo qinfo_by_trial_division(uint64_t q) {
    QInfo inf;
    inf.q = q;
    inf.phi = 1;
    uint64_t n = q;
    for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        inf.primes.push_back(p);
        uint64_t pe = 1;
        while (n % p == 0) { n /= p; pe *= p; }
        inf.phi *= pe / p * (p - 1);
    }
    if (n > 1) { inf.primes.push_back(n); inf.phi *= n - 1; }
    return inf;
}

inline Interval log_p_over_p64(const std::vector<uint64_t>& ps) {
    Interval s = Interval::exact(0.0);
    for (uint64_t p : ps) {
        Interval P = ivl_u64(p);
        s = s + log(P) / P;
    }
    return s;
}

inline Interval f1_of64(const std::vector<uint64_t>& ps) {
    Interval f = Interval::exact(1.0);
    for (uint64_t p : ps) {
        Interval P = ivl_u64(p);
        Interval c = cbrt(P), c2 = sqr(c);
        f = f * (1.0 + 1.0 / c2) / (1.0 + (c + c2) / (P * (P - 1.0)));
    }
    return f;
}

// scan one q; tables must cover lambda(q)
inline QRecord check_q(const QInfo& inf, const EspagnContext& ctx, const MultTables& t) {
    QRecord rec;
    rec.q = inf.q;
    Interval sum_lpp = log_p_over_p64(inf.primes);
    Interval f1 = f1_of64(inf.primes);
    Interval kap = ctx.kappa(inf.q, sum_lpp);
    rec.varpi = ctx.varpi(inf.q);
    rec.lambda = ctx.lambda(inf.q, inf.phi, f1, kap);
    rec.worst_slack = Interval(1e300, 1e300);

    if (rec.varpi.lo >= rec.lambda.hi) return rec; // vacuous pass

    uint64_t R_start = (uint64_t)std::max(1.0, std::ceil(rec.varpi.lo));
    uint64_t R_end = (uint64_t)std::ceil(rec.lambda.hi) - 1; // R < lambda
    if (R_end > t.limit())
        throw std::runtime_error("espagn_verify: tables limit " + std::to_string(t.limit()) +
                                 " too small; need " + std::to_string(R_end));
    rec.scan_lo = R_start;
    rec.scan_hi = R_end;

    Interval phi_over_q = ivl_u64(inf.phi) / ivl_u64(inf.q);
    Interval rhs = phi_over_q * kap;
    Interval model_const = ctx.p.cE + sum_lpp;
    Interval err_t_coeff = ctx.beta * ctx.seven284 * f1;

    FixedSum g;
    double worst = 1e300;
    for (uint64_t r = 1; r <= R_end; ++r) {
        if (t.squarefree(r)) {
            bool coprime = true;
            for (uint64_t p : inf.primes)
                if (r % p == 0) { coprime = false; break; }
            if (coprime) g.add_reciprocal(t.phi(r));
        }
        if (r < R_start) continue;
        Interval G = g.to_interval();
        Interval err = G - phi_over_q * (log(ivl_u64(r)) + model_const);
        Interval lhs = err + err_t_coeff / cbrt(ivl_u64(r));
        double slack = rhs.lo - lhs.hi;
        if (slack < worst) worst = slack;
        if (slack < 0.0) { rec.pass = false; }
    }
    rec.worst_slack = Interval::exact(worst);
    return rec;
}

} // namespace sieve_detail

// size of sieve tables needed for a scan up to q_max; small_tables must cover q_max
inline uint64_t espagn_required_limit(uint64_t q_max, const SieveParams& p,
                                      const MultTables& small_tables) {
    sieve_detail::EspagnContext ctx(p);
    double need = 1.0;
    for (uint64_t q = 1; q <= q_max; ++q) {
        auto inf = sieve_detail::qinfo_from_tables(q, small_tables);
        Interval kap = ctx.kappa(q, sieve_detail::log_p_over_p64(inf.primes));
        Interval lam = ctx.lambda(q, inf.phi, sieve_detail::f1_of64(inf.primes), kap);
        Interval w = ctx.varpi(q);
        if (w.lo < lam.hi) need = std::max(need, lam.hi);
    }
    return (uint64_t)std::ceil(need);
}

inline QuotientCertificate espagn_verify(uint64_t q_max, const SieveParams& p,
                                         const MultTables& t,
                                         unsigned threads = std::thread::hardware_concurrency()) {
    if (q_max > t.limit())
        throw std::runtime_error("espagn_verify: q_max beyond table limit");
    QuotientCertificate cert;
    cert.q_max_checked = q_max;
    cert.params = p;
    cert.records.resize(q_max);

    sieve_detail::EspagnContext ctx(p);
    if (threads == 0) threads = 1;
    std::vector<std::future<void>> fs;
    std::atomic<uint64_t> next{1};
    const uint64_t chunk = 512;
    for (unsigned i = 0; i < threads; ++i) {
        fs.push_back(std::async(std::launch::async, [&]() {
            for (;;) {
                uint64_t lo = next.fetch_add(chunk);
                if (lo > q_max) return;
                uint64_t hi = std::min(q_max, lo + chunk - 1);
                for (uint64_t q = lo; q <= hi; ++q)
                    cert.records[q - 1] =
                        sieve_detail::check_q(sieve_detail::qinfo_from_tables(q, t), ctx, t);
            }
        }));
    }
    for (auto& f : fs) f.get();
    for (const auto& r : cert.records)
        if (!r.pass) cert.failures.push_back(r.q);
    return cert;
}

// Full-scale extension: the regime q in [lo, hi), stride | q (the 210-divisible
// band of the original run).  q may exceed the table limit; factorizations are
// done by trial division.  This is weeks of CPU at the original parameters and
// exists behind the --full-scale flag only.
inline QuotientCertificate espagn_verify_strided(uint64_t lo, uint64_t hi, uint64_t stride,
                                                 const SieveParams& p, const MultTables& t) {
    QuotientCertificate cert;
    cert.q_max_checked = hi;
    cert.params = p;
    sieve_detail::EspagnContext ctx(p);
    uint64_t start = ((lo + stride - 1) / stride) * stride;
    for (uint64_t q = start; q < hi; q += stride) {
        QRecord rec = sieve_detail::check_q(sieve_detail::qinfo_by_trial_division(q), ctx, t);
        if (!rec.pass) cert.failures.push_back(q);
        cert.records.push_back(std::move(rec));
    }
    return cert;
}

// ---------------------------------------------------------------------------
// the resulting l^2 factors

enum class SieveVariant { arcs_plain, arcs_parity, discrete };

struct SieveFactor {
    Interval factor;          // multiplicative l^2 factor (1 = trivial fallback)
    Interval scale;           // (N + Q^2) for the discrete variant, else 1
    bool trivial_fallback = false;
};

inline SieveFactor large_sieve_factor(const SieveParams& p, SieveVariant variant,
                                      double N = 0.0) {
    SieveFactor out;
    out.scale = Interval::exact(1.0);
    Interval cp = Interval::ratio(136, 100);
    bool hyp = p.Q >= p.t_min * p.Q0 && p.Q0 >= p.Q0_min;
    auto factor_of = [&](double q0, double qq) {
        return (log(Interval::exact(q0)) + cp) / (log(Interval::exact(qq)) + p.cE);
    };
    switch (variant) {
    case SieveVariant::arcs_plain: {
        bool cond = hyp && std::log(p.Q0) <= 0.6 * std::log(p.Q);
        if (!cond) { out.factor = Interval::exact(1.0); out.trivial_fallback = true; }
        else out.factor = factor_of(p.Q0, p.Q);
        return out;
    }
    case SieveVariant::arcs_parity: {
        bool cond = hyp && std::log(2.0 * p.Q0) <= 0.6 * std::log(2.0 * p.Q);
        if (!cond) { out.factor = Interval::exact(1.0); out.trivial_fallback = true; }
        else out.factor = factor_of(2.0 * p.Q0, 2.0 * p.Q);
        return out;
    }
    case SieveVariant::discrete: {
        bool cond = hyp && std::log(p.Q0) <= 0.6 * std::log(p.Q);
        if (!cond) { out.factor = Interval::exact(1.0); out.trivial_fallback = true; }
        else out.factor = factor_of(p.Q0, p.Q);
        out.scale = Interval::exact(N) + sqr(Interval::exact(p.Q));
        return out;
    }
    }
    throw std::logic_error("large_sieve_factor: bad variant");
}

// Lemma-style bound: prod_{p|q or p<=m} p/(p-1) <= e^gamma (log(m + log q) + 0.65771)
inline Interval suspiro_bound(uint64_t m, uint64_t q) {
    if (m < 1 || q < 1) throw std::invalid_argument("suspiro_bound: m, q >= 1");
    Interval arg = Interval::exact((double)m) + (q > 1 ? log(ivl_u64(q)) : Interval::exact(0.0));
    return e_gamma() * (log(arg) + Interval::ratio(65771, 100000));
}

} // namespace goldbach
