#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "goldbach/interval.hpp"
#include "goldbach/prove.hpp"

using namespace goldbach;

TEST_CASE("endpoint arithmetic") {
    Interval a(1.0, 2.0), b(3.0, 4.0);
    Interval s = a + b;
    CHECK(s.lo <= 4.0);
    CHECK(s.hi >= 6.0);
    Interval m = Interval(-1.0, 1.0) * Interval(-1.0, 1.0);
    CHECK(m.contains(Interval(-1.0, 1.0)));
    Interval r = 1.0 / Interval(2.0, 4.0);
    CHECK(r.contains(Interval(0.25, 0.5)));
    CHECK_THROWS_AS(a / Interval(-1.0, 1.0), std::domain_error);
}

TEST_CASE("elementary enclosures") {
    CHECK(exp(Interval::exact(0.0)).contains(1.0));
    CHECK(sqrt(Interval::exact(4.0)).contains(2.0));
    Interval l = log(Interval(1.0, std::exp(1.0)));
    CHECK(l.contains(Interval(0.0, 1.0).lo));
    CHECK(l.lo <= 0.0);
    CHECK(l.hi >= 1.0);
    CHECK_THROWS_AS(log(Interval(-1.0, 1.0)), std::domain_error);
    CHECK_THROWS_AS(sqrt(Interval(-2.0, -1.0)), std::domain_error);
    CHECK_THROWS_AS(log_log(Interval(0.5, 2.0)), std::domain_error);
    // sin over wide and narrow boxes
    CHECK(sin(Interval(0.0, 7.0)).contains(Interval(-1.0, 1.0)));
    Interval s = sin(Interval::exact(1.0));
    CHECK(s.contains(std::sin(1.0)));
    CHECK(s.width() < 1e-14);
    Interval p = pow_real(Interval::exact(2.0), Interval::exact(10.0));
    CHECK(p.contains(1024.0));
}

TEST_CASE("containment fuzzing: 1e5 random point ops stay inside") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> U(-50.0, 50.0);
    int violations = 0;
    for (int i = 0; i < 100000; ++i) {
        double a = U(rng), b = U(rng), c = U(rng), d = U(rng);
        Interval A(std::min(a, b), std::max(a, b));
        Interval B(std::min(c, d), std::max(c, d));
        std::uniform_real_distribution<double> PA(A.lo, A.hi), PB(B.lo, B.hi);
        double x = PA(rng), y = PB(rng);
        if (!(A + B).contains(x + y)) ++violations;
        if (!(A - B).contains(x - y)) ++violations;
        if (!(A * B).contains(x * y)) ++violations;
        if (!B.contains_zero() && !(A / B).contains(x / y)) ++violations;
        if (A.lo > 0.0) {
            if (!log(A).contains(std::log(x))) ++violations;
            if (!sqrt(A).contains(std::sqrt(x))) ++violations;
        }
        if (std::fabs(x) < 30.0 && !exp(Interval::exact(x)).contains(std::exp(x))) ++violations;
        if (!sin(A).contains(std::sin(x))) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("monotone widening: hull of halves is no wider than the whole") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> U(0.1, 20.0);
    for (int i = 0; i < 1000; ++i) {
        double a = U(rng), b = a + U(rng);
        Interval box(a, b);
        double m = box.mid();
        auto f = [](const Interval& t) { return exp(sqrt(t)) * log(t + 1.0) - sqr(t) / 7.0; };
        Interval whole = f(box);
        Interval parts = hull(f(Interval(box.lo, m)), f(Interval(m, box.hi)));
        CHECK(parts.lo >= whole.lo - 1e-12 * std::fabs(whole.lo));
        CHECK(parts.hi <= whole.hi + 1e-12 * std::fabs(whole.hi));
    }
}

TEST_CASE("bisect_prove: simple certificates") {
    ProofOutcome ok = prove_ge([](const Interval& t) { return sqr(t); }, 0.0,
                               Interval(-1.0, 1.0), 10);
    CHECK(ok.proven);
    ProofOutcome bad = bisect_prove(
        [](const Interval& box) {
            return box.hi < 0.0 ? BoxVerdict::certified : BoxVerdict::unknown;
        },
        Interval(-1.0, 1.0), 12);
    CHECK(!bad.proven);
    REQUIRE(bad.failure_box.has_value());
    CHECK(bad.failure_box->hi >= 0.0);
}

TEST_CASE("bisect_prove: never certifies false inequalities") {
    // 20 true and 20 false inequalities on [0, 4]
    for (int k = 1; k <= 20; ++k) {
        double c = 0.05 * k;
        // true: t^2 + c > 0
        ProofOutcome t = prove_ge([c](const Interval& x) { return sqr(x) + c; }, 1e-12,
                                  Interval(0.0, 4.0), 24);
        CHECK(t.proven);
        // false: sin(t) <= 1 - c/30 fails near pi/2 for every k
        ProofOutcome f = prove_le([c](const Interval& x) { return sin(x); }, 1.0 - c / 30.0,
                                  Interval(0.0, 4.0), 24);
        CHECK(!f.proven);
    }
}

TEST_CASE("chain-style certificate: decreasing left side of the r-inequality") {
    // (2/2.6)/((1+u) log(1+u)) + 1/(log r log log r) < 1 on [175, 1e6],
    // u = log(8r)/5.2
    auto lhs = [](const Interval& r) {
        Interval u = log(8.0 * r) / Interval::ratio(52, 10);
        return (Interval::ratio(2, 1) / Interval::ratio(26, 10)) / ((1.0 + u) * log(1.0 + u)) +
               1.0 / (log(r) * log_log(r));
    };
    ProofOutcome po = prove_le(lhs, 1.0, Interval(175.0, 1e6), 30);
    CHECK(po.proven);
}
