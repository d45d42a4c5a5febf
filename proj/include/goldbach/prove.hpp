// prove.hpp
//
// Bisection certificates: prove that a predicate holds everywhere on a
// one-dimensional interval domain by depth-limited midpoint subdivision.
// A "certified" answer on a box must be sound (the property holds at every
// point of the box); "unknown" triggers a split.  An unproven outcome
// carries a concrete box that could not be certified; it never asserts
// the property is false.

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "goldbach/interval.hpp"

namespace goldbach {

enum class BoxVerdict { certified, unknown };

struct ProofOutcome {
    bool proven = false;
    int max_depth_used = 0;
    std::optional<Interval> failure_box;

    explicit operator bool() const { return proven; }
};

// Depth-limited midpoint bisection.  A literature-style "N iterations"
// certificate maps to max_depth = N.
inline ProofOutcome bisect_prove(const std::function<BoxVerdict(const Interval&)>& predicate,
                                 Interval domain, int max_depth) {
    ProofOutcome out;
    struct Node { Interval box; int depth; };
    std::vector<Node> stack;
    stack.push_back({domain, 0});
    while (!stack.empty()) {
        Node n = stack.back();
        stack.pop_back();
        out.max_depth_used = std::max(out.max_depth_used, n.depth);
        if (predicate(n.box) == BoxVerdict::certified) continue;
        if (n.depth >= max_depth) {
            out.proven = false;
            out.failure_box = n.box;
            return out;
        }
        double m = n.box.mid();
        if (!(n.box.lo < m && m < n.box.hi)) {
            // box no longer splittable at double precision
            out.proven = false;
            out.failure_box = n.box;
            return out;
        }
        stack.push_back({Interval(m, n.box.hi), n.depth + 1});
        stack.push_back({Interval(n.box.lo, m), n.depth + 1});
    }
    out.proven = true;
    return out;
}

// Convenience: certify f(t) <= bound for all t in domain.
inline ProofOutcome prove_le(const std::function<Interval(const Interval&)>& f,
                             double bound, Interval domain, int max_depth) {
    return bisect_prove(
        [&](const Interval& box) {
            return f(box).certainly_le(bound) ? BoxVerdict::certified : BoxVerdict::unknown;
        },
        domain, max_depth);
}

inline ProofOutcome prove_ge(const std::function<Interval(const Interval&)>& f,
                             double bound, Interval domain, int max_depth) {
    return bisect_prove(
        [&](const Interval& box) {
            return f(box).certainly_ge(bound) ? BoxVerdict::certified : BoxVerdict::unknown;
        },
        domain, max_depth);
}

// Certified upper bound for sup f over the domain, by branch and bound:
// midpoint evaluations raise the known lower bound, boxes that cannot beat
// it are retired at their current enclosure.
inline double prove_sup(const std::function<Interval(const Interval&)>& f,
                        Interval domain, int max_depth, double abs_tol) {
    struct Node { Interval box; int depth; };
    std::vector<Node> stack;
    stack.push_back({domain, 0});
    double sup = -std::numeric_limits<double>::infinity();
    double best = f(Interval::exact(domain.mid())).lo; // certified lower bound
    while (!stack.empty()) {
        Node n = stack.back();
        stack.pop_back();
        Interval v = f(n.box);
        best = std::max(best, f(Interval::exact(n.box.mid())).lo);
        if (v.hi <= best + abs_tol || v.width() <= abs_tol || n.depth >= max_depth) {
            sup = std::max(sup, v.hi);
            continue;
        }
        double m = n.box.mid();
        if (!(n.box.lo < m && m < n.box.hi)) { sup = std::max(sup, v.hi); continue; }
        stack.push_back({Interval(m, n.box.hi), n.depth + 1});
        stack.push_back({Interval(n.box.lo, m), n.depth + 1});
    }
    return sup;
}

// Certified maximum of f over domain (enclosure of max value).
inline Interval prove_max(const std::function<Interval(const Interval&)>& f,
                          Interval domain, int max_depth, double abs_tol) {
    // lower bound: midpoint samples, upper bound: prove_sup
    double hi = prove_sup(f, domain, max_depth, abs_tol);
    double lo = -std::numeric_limits<double>::infinity();
    int samples = 4096;
    for (int i = 0; i <= samples; ++i) {
        double t = domain.lo + (domain.hi - domain.lo) * i / samples;
        Interval v = f(Interval::exact(t));
        lo = std::max(lo, v.lo);
    }
    return Interval(lo, hi);
}

} // namespace goldbach
