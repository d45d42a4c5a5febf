#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "goldbach/quadrature.hpp"

using namespace goldbach;

TEST_CASE("ten analytically integrable functions are enclosed") {
    struct Case {
        IvlFn f, df;
        double a, b, exact;
    };
    std::vector<Case> cases = {
        {[](const Interval& t) { return t; },
         [](const Interval&) { return Interval::exact(1.0); }, 0.0, 1.0, 0.5},
        {[](const Interval& t) { return sqr(t); },
         [](const Interval& t) { return 2.0 * t; }, 0.0, 2.0, 8.0 / 3.0},
        {[](const Interval& t) { return exp(t); },
         [](const Interval& t) { return exp(t); }, 0.0, 1.0, std::exp(1.0) - 1.0},
        {[](const Interval& t) { return sin(t); },
         [](const Interval& t) { return cos(t); }, 0.0, 3.141592653589793,
         1.0 - std::cos(3.141592653589793)},
        {[](const Interval& t) { return 1.0 / t; },
         [](const Interval& t) { return -1.0 / sqr(t); }, 1.0, 4.0, std::log(4.0)},
        {[](const Interval& t) { return log(t); },
         [](const Interval& t) { return 1.0 / t; }, 1.0, 2.0, 2.0 * std::log(2.0) - 1.0},
        {[](const Interval& t) { return sqrt(t); },
         [](const Interval& t) { return 0.5 / sqrt(t); }, 1.0, 4.0, 14.0 / 3.0},
        {[](const Interval& t) { return pow_int(t, 3) - t; },
         [](const Interval& t) { return 3.0 * sqr(t) - 1.0; }, 0.0, 1.0, -0.25},
        {[](const Interval& t) { return exp(-t); },
         [](const Interval& t) { return -exp(-t); }, 0.0, 5.0, 1.0 - std::exp(-5.0)},
        {[](const Interval& t) { return t * exp(-sqr(t) / 2.0); },
         [](const Interval& t) { return (1.0 - sqr(t)) * exp(-sqr(t) / 2.0); }, 0.0, 3.0,
         1.0 - std::exp(-4.5)},
    };
    for (auto& c : cases) {
        QuadResult r = integrate_enclose(c.f, c.df, c.a, c.b, 1e-9);
        CHECK(r.width_met);
        CHECK(r.value.contains(c.exact));
        CHECK(r.value.width() < 1e-8);
    }
}

TEST_CASE("derivative-free fallback still encloses") {
    QuadResult r = integrate_enclose([](const Interval& t) { return sqr(t); }, 0.0, 1.0, 1e-3);
    CHECK(r.value.contains(1.0 / 3.0));
}

TEST_CASE("infinite endpoint requires a tail bound") {
    CHECK_THROWS_AS(integrate_enclose([](const Interval& t) { return t; },
                                      0.0, std::numeric_limits<double>::infinity(), 1e-6),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate_to_inf([](const Interval& t) { return t; }, IvlFn{}, 0.0, 1e-6,
                                     std::function<Interval(double)>{}),
                    std::invalid_argument);
}

TEST_CASE("gaussian second moment over [0, inf) hits sqrt(pi/2)") {
    auto f = [](const Interval& t) { return sqr(t) * exp(-sqr(t) / 2.0); };
    auto df = [](const Interval& t) { return (2.0 * t - pow_int(t, 3)) * exp(-sqr(t) / 2.0); };
    QuadResult r = integrate_to_inf(f, df, 0.0, 1e-7,
                                    [](double y) { return gaussian_moment2_tail(y); });
    Interval expect = sqrt(pi() / 2.0);
    CHECK(r.value.contains(expect.mid()));
    CHECK(r.value.width() < 1e-6);
}

TEST_CASE("log-weighted gaussian moment stays under the chain bound") {
    // -int_0^1 w^2 e^{-w^2/2} log w dw <= 0.093426
    auto f = [](const Interval& w) { return -sqr(w) * exp(-sqr(w) / 2.0) * log(w); };
    auto df = [](const Interval& w) {
        return -exp(-sqr(w) / 2.0) * ((2.0 * w - pow_int(w, 3)) * log(w) + w);
    };
    QuadResult r = integrate_enclose(f, df, 1e-6, 1.0, 1e-8);
    Interval head(0.0, 1.3e-17); // eps^3 (1 - log eps)/3 at eps = 1e-6
    Interval total = r.value + head;
    CHECK(total.hi <= 0.093426);
    CHECK(total.lo >= 0.09342);
}
