// Acceptance suite: every criterion with its pinned tolerance, one line each.
//
// Each criterion prints
//   [n] PASS/FAIL  <summary>   (<wall time>)
// and the binary exits nonzero if any criterion fails.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "goldbach/verify.hpp"

using namespace goldbach;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    const char* id;
    bool pass = true;
    double seconds = 0.0;
    std::string note;
};

std::vector<Criterion> g_results;

void record(const char* id, bool pass, double seconds, const std::string& note) {
    g_results.push_back({id, pass, seconds, note});
    std::printf("[%s] %s  %s  (%.2fs)\n", id, pass ? "PASS" : "FAIL", note.c_str(), seconds);
    std::fflush(stdout);
}

VerifyContext& ctx() {
    static Config cfg = [] {
        Config c;
        c.out_dir = "acceptance_results";
        return c;
    }();
    static VerifyContext instance(cfg);
    return instance;
}

double run_and_time(const std::function<bool(std::string&)>& body, const char* id) {
    auto t0 = Clock::now();
    std::string note;
    bool pass = false;
    try {
        pass = body(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(Clock::now() - t0).count();
    record(id, pass, s, note);
    return s;
}

} // namespace

TEST_CASE("1: appendix-B constants") {
    double s = run_and_time(
        [&](std::string& note) {
            ConvergentProducts cp = convergent_products(10'000'000);
            bool ok = cp.nagasa.lo >= 2.591461 && cp.nagasa.hi <= 2.591463 &&
                      cp.massacre.lo >= 2.826419 && cp.massacre.hi <= 2.826421;
            note = "nagasa=" + cp.nagasa.str() + " massacre=" + cp.massacre.str();
            return ok;
        },
        "1-appendix-b");
    CHECK(g_results.back().pass);
    CHECK(s < 10.0);
}

TEST_CASE("2: G-window verification to 1e6") {
    double s = run_and_time(
        [&](std::string& note) {
            WindowReport wr = verify_G_windows(1'000'000, ctx().tables(1'000'000));
            note = wr.proven ? "all integer R in the stated windows"
                             : "violation at R=" + std::to_string(wr.first_violation) +
                                   " (" + wr.which + ")";
            return wr.proven;
        },
        "2-g-windows");
    CHECK(g_results.back().pass);
    CHECK(s < 300.0);
}

TEST_CASE("3: odd phi sum at 150000") {
    run_and_time(
        [&](std::string& note) {
            Interval odd = ctx().odd_sum_150000();
            note = "sum=" + odd.str();
            return odd.lo >= 6.798779 && odd.hi <= 6.798780 && odd.width() < 1e-5;
        },
        "3-odd-phi-sum");
    CHECK(g_results.back().pass);
}

TEST_CASE("4: quotient verification for q <= 1e5") {
    double s = run_and_time(
        [&](std::string& note) {
            SieveParams p;
            const MultTables& small = ctx().tables(150000);
            uint64_t need = espagn_required_limit(100000, p, small);
            const MultTables& t = ctx().tables(need);
            QuotientCertificate cert = espagn_verify(100000, p, t);
            double worst = 1e300;
            uint64_t worst_q = 0;
            for (const auto& r : cert.records)
                if (r.scan_hi && r.worst_slack.lo < worst) {
                    worst = r.worst_slack.lo;
                    worst_q = r.q;
                }
            note = "failures=" + std::to_string(cert.failures.size()) +
                   " worst_slack=" + Report::num(worst) + " at q=" + std::to_string(worst_q);
            return cert.valid();
        },
        "4-sieve-espagn");
    CHECK(g_results.back().pass);
    CHECK(s < 1800.0);
}

TEST_CASE("5: minor-arc chain constants") {
    double s = run_and_time(
        [&](std::string& note) {
            const MinorBound& m = ctx().minor();
            bool ok = true;
            std::string bad;
            auto req = [&](bool c, const char* what) {
                ok = ok && c;
                if (!c) bad += std::string(" ") + what;
            };
            req(m.g_r0.hi <= 0.041014, "g(r0)");
            req(m.f1.lo >= 0.0163662 && m.f1.hi <= 0.0163663 && m.f1.width() < 1e-5, "f1");
            req(m.int_g_direct.hi <= 0.086918, "int-g");
            req(m.M_coeff.hi <= 0.77671, "M");
            req(m.T_coeff.hi <= 3.5776e-4, "T");
            req(m.Z_coeff.hi <= 0.97392, "Z");
            note = "g(r0)<=" + Report::num(m.g_r0.hi) + " f1=" + m.f1.str() +
                   " intg<=" + Report::num(m.int_g_direct.hi) +
                   " M<=" + Report::num(m.M_coeff.hi) + " T<=" + Report::num(m.T_coeff.hi) +
                   " Z<=" + Report::num(m.Z_coeff.hi);
            if (!ok) note += " failing:" + bad;
            return ok;
        },
        "5-minor-chain");
    CHECK(g_results.back().pass);
    CHECK(s < 60.0);
}

TEST_CASE("6: major-arc chain constants") {
    double s = run_and_time(
        [&](std::string& note) {
            const L2MajorResult& l2 = ctx().l2();
            const MajorBound& mb = ctx().major();
            bool ok = l2.L.lo >= 8.70517 && l2.L.hi <= 8.70531 && mb.A.hi <= 8.7806 &&
                      mb.total_coeff.lo >= 1.058259;
            note = "L=" + l2.L.str() + " A<=" + Report::num(mb.A.hi) +
                   " total>=" + Report::num(mb.total_coeff.lo) + " (target 1.058259)";
            return ok;
        },
        "6-major-chain");
    CHECK(g_results.back().pass);
    CHECK(s < 60.0);
}

TEST_CASE("7: final coefficient at N = 1e27") {
    double s = run_and_time(
        [&](std::string& note) {
            Report rep = run_conclude(ctx());
            bool final_ok = false, positive = false;
            double lo = 0.0;
            for (const auto& e : rep.entries) {
                if (e.label == "final") { final_ok = e.pass; lo = e.computed.lo; }
                if (e.label == "final.positive") positive = e.pass;
            }
            note = "final>=" + Report::num(lo) + " (target 0.000422)";
            return final_ok && positive;
        },
        "7-conclude");
    CHECK(g_results.back().pass);
    // sub-results are cached by the earlier criteria, so this is the cheap step
    CHECK(s < 1.0);
}

TEST_CASE("8: smoothing norms") {
    run_and_time(
        [&](std::string& note) {
            const NormSet& circ = ctx().circ_norms();
            bool ok = circ.l2.value.lo >= 0.8001287 && circ.l2.value.hi <= 0.8001288 &&
                      circ.l2_deriv.value.lo >= 2.7375292 &&
                      circ.l2_deriv.value.hi <= 2.7375293 &&
                      circ.l2_deriv.value.width() < 1e-4 && circ.l1_d3.value.hi <= 32.5023;
            note = "|eta|_2=" + circ.l2.value.str() + " |eta'|_2^2=" +
                   circ.l2_deriv.value.str() + " |eta'''|_1<=" + Report::num(circ.l1_d3.value.hi);
            return ok;
        },
        "8-smoothing-norms");
    CHECK(g_results.back().pass);
}

TEST_CASE("9: direct grid check and the relative zero-term") {
    double s = run_and_time(
        [&](std::string& note) {
            ZeroHypothesis hyp = ZeroHypothesis::from_pinned(ctx().pinned());
            CrepeEstimate ce = crepe_estimate(2000.0, hyp);
            AusteriaReport ar = austeria_check(2000.0, hyp);
            note = "grid proven=" + std::string(ar.proven ? "yes" : "no") +
                   " windows=" + std::to_string(ar.windows_first.size() +
                                                ar.windows_second.size()) +
                   " eps<=" + Report::num(ce.rel.hi);
            return ar.proven && ce.rel.hi <= 2.73e-10;
        },
        "9-austeria");
    CHECK(g_results.back().pass);
    CHECK(s < 600.0);
}

TEST_CASE("10: prime-gap ladder at the three heights") {
    run_and_time(
        [&](std::string& note) {
            DeltaTable table = DeltaTable::builtin();
            struct Case { double H; const char* expect; };
            const Case cases[] = {{3.061e10, "1.23163e27"}, {2.419e11, "6.15697e28"},
                                  {2.44e12, "5.90698e29"}};
            bool ok = true;
            for (const Case& c : cases) {
                ZeroHypothesis hyp;
                hyp.T0 = c.H;
                LadderResult lr = ladder_n0(hyp, table);
                ok = ok && lr.n0_sixfig == c.expect;
                note += lr.n0_sixfig + " ";
            }
            return ok;
        },
        "10-ladder");
    CHECK(g_results.back().pass);
}

TEST_CASE("11: property suites") {
    run_and_time(
        [&](std::string& note) {
            // (a) containment fuzzing, 1e5 cases
            std::mt19937_64 rng(2024);
            std::uniform_real_distribution<double> U(-40.0, 40.0);
            int violations = 0;
            for (int i = 0; i < 100000; ++i) {
                double a = U(rng), b = U(rng), c = U(rng), d = U(rng);
                Interval A(std::min(a, b), std::max(a, b)), B(std::min(c, d), std::max(c, d));
                std::uniform_real_distribution<double> PA(A.lo, A.hi), PB(B.lo, B.hi);
                double x = PA(rng), y = PB(rng);
                if (!(A + B).contains(x + y)) ++violations;
                if (!(A * B).contains(x * y)) ++violations;
                if (!B.contains_zero() && !(A / B).contains(x / y)) ++violations;
                if (A.lo > 0.0 && !log(A).contains(std::log(x))) ++violations;
            }
            bool a_ok = violations == 0;

            // (b) bisection prover never certifies 20 known-false inequalities
            bool b_ok = true;
            for (int k = 1; k <= 20; ++k) {
                double eps = 0.002 * k;
                ProofOutcome t = prove_ge([](const Interval& v) { return sqr(v) + 0.01; },
                                          0.0, Interval(-2.0, 2.0), 20);
                ProofOutcome f = prove_le([](const Interval& v) { return exp(v); },
                                          std::exp(1.0) - eps, Interval(0.0, 1.0), 22);
                b_ok = b_ok && t.proven && !f.proven;
            }

            // (c) convolution identity exact for all squarefree q <= 1e4, j in {2,3}
            MultTables t = MultTables::build(10000);
            bool c_ok = true;
            for (int j : {2, 3}) {
                for (uint64_t q = 1; q <= 10000 && c_ok; ++q) {
                    if (!t.squarefree(q)) continue;
                    __int128 phi_j = 1, lhs = 1;
                    for (int k = 0; k < j; ++k) { phi_j *= t.phi(q); lhs *= q; }
                    std::vector<uint32_t> ps =
                        q > 1 ? t.prime_factors(q) : std::vector<uint32_t>{};
                    __int128 rhs = 0;
                    for (uint32_t mask = 0; mask < (1u << ps.size()); ++mask) {
                        __int128 bdiv = 1, fn = 1, fd = 1;
                        for (size_t i = 0; i < ps.size(); ++i) {
                            if (!(mask & (1u << i))) continue;
                            __int128 p = ps[i], pj = 1, pm = 1;
                            for (int k = 0; k < j; ++k) { pj *= p; pm *= p - 1; }
                            bdiv *= p;
                            fn *= pj - pm;
                            fd *= pm * p;
                        }
                        __int128 adiv = q / (unsigned long long)bdiv;
                        __int128 num = fn * phi_j * (__int128)q;
                        if (num % (fd * adiv) != 0) { c_ok = false; break; }
                        rhs += num / (fd * adiv);
                    }
                    c_ok = c_ok && lhs == rhs;
                }
            }

            // (d) autocorrelation membership at 20 grid rho values
            NormSet circ = ctx().circ_norms();
            bool d_ok = true;
            for (int i = 0; i < 20; ++i) {
                double rho = 0.05 + i * 0.096; // [0.05, 1.874]
                AutocorrResult r = autocorr_check(rho, circ);
                d_ok = d_ok && r.certified;
            }

            // (e) inner-product degradation over 1e3 random pairs
            std::normal_distribution<double> N(0.0, 1.0);
            bool e_ok = true;
            for (int trial = 0; trial < 1000; ++trial) {
                std::vector<double> v(24), w(24), dd(24);
                double nv = 0, nd = 0;
                for (auto& z : v) { z = N(rng); nv += z * z; }
                for (auto& z : dd) { z = N(rng); nd += z * z; }
                double scale = 0.4 * std::sqrt(nv) / std::sqrt(nd);
                for (int i = 0; i < 24; ++i) w[i] = v[i] + dd[i] * scale;
                DegradeResult r = cauchy_degrade_check(v, w);
                e_ok = e_ok && r.applicable && r.pass;
            }

            note = std::string("containment=") + (a_ok ? "ok" : "BAD") +
                   " bisect-soundness=" + (b_ok ? "ok" : "BAD") +
                   " convolution=" + (c_ok ? "ok" : "BAD") +
                   " autocorr=" + (d_ok ? "ok" : "BAD") +
                   " degradation=" + (e_ok ? "ok" : "BAD");
            return a_ok && b_ok && c_ok && d_ok && e_ok;
        },
        "11-properties");
    CHECK(g_results.back().pass);
}

TEST_CASE("summary") {
    int failed = 0;
    for (const auto& c : g_results)
        if (!c.pass) ++failed;
    std::printf("\nacceptance: %zu criteria, %d failed\n", g_results.size(), failed);
    CHECK(failed == 0);
}
