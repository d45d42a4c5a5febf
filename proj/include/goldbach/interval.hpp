// interval.hpp
//
// Directed-rounding interval arithmetic over double endpoints.
//
// Every operation returns an enclosure of the exact image set.  Outward
// rounding is implemented by stepping each computed endpoint to the next
// representable value (round-to-nearest error is < 1 ulp, so a 1-ulp step
// outward is sound for +,-,*,/ and sqrt).  Library elementary functions
// (exp, log, sin) are widened by LIBM_ULPS steps, covering the documented
// worst-case errors of glibc libm with margin.
//
// Endpoints may be +/-infinity.  NaN endpoints are never produced from
// valid inputs; domain violations throw.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <algorithm>
#include <iosfwd>
#include <sstream>

namespace goldbach {

inline double next_up(double x) {
    if (std::isinf(x) && x > 0) return x;
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}

inline double next_down(double x) {
    if (std::isinf(x) && x < 0) return x;
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

inline double step_up(double x, int n) {
    for (int i = 0; i < n; ++i) x = next_up(x);
    return x;
}

inline double step_down(double x, int n) {
    for (int i = 0; i < n; ++i) x = next_down(x);
    return x;
}

// widening applied to libm results (glibc documents <= 2 ulp for the
// functions we use; 4 is margin)
inline constexpr int LIBM_ULPS = 4;

// outward step for a round-to-nearest result; IEEE rounding preserves the
// sign into signed zeros, so +0 is already a valid lower end and -0 a valid
// upper end
inline double out_lo(double x) {
    if (x == 0.0 && !std::signbit(x)) return 0.0;
    return next_down(x);
}

inline double out_hi(double x) {
    if (x == 0.0 && std::signbit(x)) return -0.0;
    return next_up(x);
}

struct Interval {
    double lo;
    double hi;

    Interval() : lo(0.0), hi(0.0) {}
    Interval(double l, double h) : lo(l), hi(h) {
        if (!(lo <= hi)) throw std::invalid_argument("Interval: lo > hi");
    }

    static Interval exact(double x) { return Interval(x, x); }

    // enclosure of the rational num/den
    static Interval ratio(long long num, long long den) {
        if (den == 0) throw std::domain_error("Interval::ratio: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        double q = static_cast<double>(num) / static_cast<double>(den);
        return Interval(next_down(q), next_up(q));
    }

    static Interval whole() {
        return Interval(-std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity());
    }

    double width() const { return hi - lo; }
    double mid() const {
        if (std::isinf(lo) || std::isinf(hi)) return 0.0;
        double m = 0.5 * (lo + hi);
        if (m < lo) m = lo;
        if (m > hi) m = hi;
        return m;
    }
    double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }

    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool inside(const Interval& o) const { return o.contains(*this); }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }

    // certain comparisons (false means "not provable", not negation)
    bool certainly_le(double c) const { return hi <= c; }
    bool certainly_ge(double c) const { return lo >= c; }
    bool certainly_lt(const Interval& o) const { return hi < o.lo; }
    bool certainly_le(const Interval& o) const { return hi <= o.lo; }
    bool certainly_ge(const Interval& o) const { return lo >= o.hi; }

    std::string str() const;
};

inline Interval hull(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

inline Interval intersect(const Interval& a, const Interval& b) {
    double l = std::max(a.lo, b.lo), h = std::min(a.hi, b.hi);
    if (l > h) throw std::domain_error("intersect: empty intersection");
    return Interval(l, h);
}

inline Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

inline Interval operator+(const Interval& a, const Interval& b) {
    return Interval(out_lo(a.lo + b.lo), out_hi(a.hi + b.hi));
}

inline Interval operator-(const Interval& a, const Interval& b) {
    return Interval(out_lo(a.lo - b.hi), out_hi(a.hi - b.lo));
}

namespace detail {
// product of endpoints with the convention 0 * inf = 0 (exact zero endpoints
// annihilate; the exact image of {0} x anything is {0})
inline double eprod(double x, double y) {
    if (x == 0.0 || y == 0.0) return 0.0;
    return x * y;
}
} // namespace detail

inline Interval operator*(const Interval& a, const Interval& b) {
    double p1 = detail::eprod(a.lo, b.lo);
    double p2 = detail::eprod(a.lo, b.hi);
    double p3 = detail::eprod(a.hi, b.lo);
    double p4 = detail::eprod(a.hi, b.hi);
    double lo = std::min(std::min(p1, p2), std::min(p3, p4));
    double hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return Interval(out_lo(lo), out_hi(hi));
}

inline Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero())
        throw std::domain_error("interval division by interval containing zero");
    double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
    double lo = std::min(std::min(q1, q2), std::min(q3, q4));
    double hi = std::max(std::max(q1, q2), std::max(q3, q4));
    return Interval(out_lo(lo), out_hi(hi));
}

inline Interval operator+(const Interval& a, double b) { return a + Interval::exact(b); }
inline Interval operator+(double a, const Interval& b) { return Interval::exact(a) + b; }
inline Interval operator-(const Interval& a, double b) { return a - Interval::exact(b); }
inline Interval operator-(double a, const Interval& b) { return Interval::exact(a) - b; }
inline Interval operator*(const Interval& a, double b) { return a * Interval::exact(b); }
inline Interval operator*(double a, const Interval& b) { return Interval::exact(a) * b; }
inline Interval operator/(const Interval& a, double b) { return a / Interval::exact(b); }
inline Interval operator/(double a, const Interval& b) { return Interval::exact(a) / b; }

inline Interval abs(const Interval& a) {
    if (a.lo >= 0.0) return a;
    if (a.hi <= 0.0) return -a;
    return Interval(0.0, std::max(-a.lo, a.hi));
}

inline Interval sqr(const Interval& a) {
    Interval b = abs(a);
    double lo = b.lo == 0.0 ? 0.0 : std::max(0.0, next_down(b.lo * b.lo));
    return Interval(lo, next_up(b.hi * b.hi));
}

inline Interval pow_int(const Interval& a, int n) {
    if (n == 0) return Interval::exact(1.0);
    if (n < 0) return Interval::exact(1.0) / pow_int(a, -n);
    Interval r = Interval::exact(1.0);
    Interval base = a;
    int e = n;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e > 1) ? sqr(base) : base;
        e >>= 1;
    }
    // even powers are nonnegative even when a straddles zero
    if (n % 2 == 0 && r.lo < 0.0) r.lo = 0.0;
    return r;
}

inline Interval sqrt(const Interval& a) {
    if (a.lo < 0.0) throw std::domain_error("interval sqrt of negative");
    return Interval(std::max(0.0, step_down(std::sqrt(a.lo), 1)),
                    step_up(std::sqrt(a.hi), 1));
}

inline Interval cbrt(const Interval& a) {
    return Interval(step_down(std::cbrt(a.lo), LIBM_ULPS), step_up(std::cbrt(a.hi), LIBM_ULPS));
}

inline Interval exp(const Interval& a) {
    double lo = std::isinf(a.lo) && a.lo < 0 ? 0.0
                : std::max(0.0, step_down(std::exp(a.lo), LIBM_ULPS));
    double hi = std::isinf(a.hi) ? a.hi : step_up(std::exp(a.hi), LIBM_ULPS);
    return Interval(lo, hi);
}

inline Interval log(const Interval& a) {
    if (a.lo <= 0.0) throw std::domain_error("interval log of non-positive");
    double hi = std::isinf(a.hi) ? a.hi : step_up(std::log(a.hi), LIBM_ULPS);
    return Interval(step_down(std::log(a.lo), LIBM_ULPS), hi);
}

inline Interval log_log(const Interval& a) {
    if (a.lo <= 1.0) throw std::domain_error("interval log log needs lo > 1");
    return log(log(a));
}

// a^b = exp(b log a); requires a.lo > 0 (a == [0,c] allowed for b.lo > 0)
inline Interval pow_real(const Interval& a, const Interval& b) {
    if (a.lo < 0.0) throw std::domain_error("interval pow of negative base");
    if (a.lo == 0.0) {
        if (b.lo <= 0.0) throw std::domain_error("interval pow 0^b with b <= 0");
        if (a.hi == 0.0) return Interval::exact(0.0);
        Interval rest = exp(b * log(Interval(a.hi, a.hi)));
        return hull(Interval::exact(0.0), rest);
    }
    return exp(b * log(a));
}

// pi from above/below (nearest double to pi is below; 1 ulp up covers)
inline Interval pi() {
    double p = 3.14159265358979323846264338327950288;
    return Interval(p, next_up(p));
}

// Euler-Mascheroni constant
inline Interval euler_gamma() {
    double g = 0.57721566490153286060651209008240243;
    return Interval(next_down(g), next_up(g));
}

inline Interval e_gamma() { return exp(euler_gamma()); } // e^gamma

inline Interval ln2() { return log(Interval::exact(2.0)); }

namespace detail {
// sin on an interval, via quadrant analysis; k*pi/2 boundaries handled with
// the interval value of pi
inline Interval sin_impl(const Interval& a) {
    if (std::isinf(a.lo) || std::isinf(a.hi)) return Interval(-1.0, 1.0);
    Interval two_pi = 2.0 * pi();
    if (a.width() >= two_pi.hi) return Interval(-1.0, 1.0);
    double slo = step_down(std::sin(a.lo), LIBM_ULPS);
    double shi_at_lo = step_up(std::sin(a.lo), LIBM_ULPS);
    double slo2 = step_down(std::sin(a.hi), LIBM_ULPS);
    double shi2 = step_up(std::sin(a.hi), LIBM_ULPS);
    double lo = std::min(slo, slo2), hi = std::max(shi_at_lo, shi2);
    // does [a.lo, a.hi] contain a point pi/2 + 2k*pi (max) or -pi/2 + 2k*pi (min)?
    // check k in a small range around a/2pi
    double approx = a.lo / (2.0 * 3.14159265358979323846);
    long long k0 = (long long)std::floor(approx) - 2;
    for (long long k = k0; k <= k0 + 4 + (long long)(a.width() / 6.28) ; ++k) {
        Interval kk = Interval::exact((double)k);
        Interval maxpt = (2.0 * kk + 0.5) * pi();   // sin = +1
        Interval minpt = (2.0 * kk - 0.5) * pi();   // sin = -1
        if (maxpt.lo >= a.lo && maxpt.hi <= a.hi) hi = 1.0;
        else if (maxpt.hi >= a.lo && maxpt.lo <= a.hi) hi = 1.0; // straddles: be safe
        if (minpt.lo >= a.lo && minpt.hi <= a.hi) lo = -1.0;
        else if (minpt.hi >= a.lo && minpt.lo <= a.hi) lo = -1.0;
    }
    lo = std::max(lo, -1.0);
    hi = std::min(hi, 1.0);
    return Interval(lo, hi);
}
} // namespace detail

inline Interval sin(const Interval& a) { return detail::sin_impl(a); }

inline Interval cos(const Interval& a) { return sin(a + pi() / 2.0); }

inline std::string Interval::str() const {
    std::ostringstream os;
    os.precision(17);
    os << "[" << lo << ", " << hi << "]";
    return os.str();
}

} // namespace goldbach
