// gsum.hpp
//
// The sieve sums G_q(R) = sum over r <= R, (r,q)=1 of mu^2(r)/phi(r).
//
// Partial sums are accumulated in 64.64 fixed point: each term contributes
// floor(2^64/phi) to a lower accumulator and ceil(2^64/phi) to an upper one.
// Both accumulators are exact integers, so two summations of the same terms
// agree bit for bit regardless of grouping; conversion to a double Interval
// happens only at the boundary.  The gap between the accumulators after n
// terms is at most n * 2^-64.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "goldbach/interval.hpp"
#include "goldbach/tables.hpp"

namespace goldbach {

using u128 = unsigned __int128;

// exact conversion helpers
inline Interval ivl_u64(uint64_t v) {
    double hi32 = (double)(v >> 32);          // exact (< 2^32)
    double lo32 = (double)(v & 0xffffffffull);
    return Interval::exact(hi32) * 4294967296.0 + Interval::exact(lo32);
}

inline Interval ivl_u128(u128 v) {
    uint64_t top = (uint64_t)(v >> 64);
    uint64_t bot = (uint64_t)v;
    Interval two64 = Interval::exact(18446744073709551616.0); // 2^64 exact
    return ivl_u64(top) * two64 + ivl_u64(bot);
}

// 64.64 fixed-point enclosure of a sum of reciprocals
struct FixedSum {
    u128 lo = 0; // sum of floor(2^64 / phi)
    u128 hi = 0; // sum of ceil(2^64 / phi)

    void add_reciprocal(uint64_t phi) {
        u128 one = (u128)1 << 64;
        u128 q = one / phi;
        u128 r = one % phi;
        lo += q;
        hi += q + (r ? 1 : 0);
    }

    void merge(const FixedSum& o) { lo += o.lo; hi += o.hi; }

    bool operator==(const FixedSum& o) const { return lo == o.lo && hi == o.hi; }

    Interval to_interval() const {
        Interval two64 = Interval::exact(18446744073709551616.0);
        Interval l = ivl_u128(lo) / two64;
        Interval h = ivl_u128(hi) / two64;
        return Interval(l.lo, h.hi);
    }
};

// Direct evaluation of G_q(R).
inline FixedSum gq_fixed(uint64_t q, uint64_t R, const MultTables& t) {
    if (R > t.limit()) throw std::invalid_argument("gq_fixed: R beyond table limit");
    std::vector<uint32_t> ps = q > 1 ? t.prime_factors(q) : std::vector<uint32_t>{};
    FixedSum s;
    for (uint64_t r = 1; r <= R; ++r) {
        if (!t.squarefree(r)) continue;
        bool coprime = true;
        for (uint32_t p : ps)
            if (r % p == 0) { coprime = false; break; }
        if (coprime) s.add_reciprocal(t.phi(r));
    }
    return s;
}

inline Interval G_q(uint64_t q, double R, const MultTables& t) {
    if (R < 0) return Interval::exact(0.0);
    uint64_t Rf = (uint64_t)R;
    if (Rf > t.limit()) throw std::invalid_argument("G_q: R beyond table limit");
    return gq_fixed(q, Rf, t).to_interval();
}

// Cumulative table of G_q over r = 1..R_max; partial sums are nondecreasing.
class GTable {
public:
    GTable(uint64_t q, uint64_t r_max, const MultTables& t) : q_(q) {
        if (r_max > t.limit()) throw std::invalid_argument("GTable: range beyond table limit");
        std::vector<uint32_t> ps = q > 1 ? t.prime_factors(q) : std::vector<uint32_t>{};
        cum_.reserve(r_max + 1);
        FixedSum s;
        cum_.push_back(s);
        for (uint64_t r = 1; r <= r_max; ++r) {
            if (t.squarefree(r)) {
                bool coprime = true;
                for (uint32_t p : ps)
                    if (r % p == 0) { coprime = false; break; }
                if (coprime) s.add_reciprocal(t.phi(r));
            }
            cum_.push_back(s);
        }
    }

    uint64_t q() const { return q_; }
    uint64_t r_max() const { return cum_.size() - 1; }
    const FixedSum& at(uint64_t R) const { return cum_.at(R); }
    Interval value(uint64_t R) const { return cum_.at(R).to_interval(); }

private:
    uint64_t q_;
    std::vector<FixedSum> cum_;
};

// sum over q <= r, q odd, of mu^2(q)/phi(q)   (the 6.798779... sum at r = 150000)
inline FixedSum odd_phi_sum_fixed(uint64_t r, const MultTables& t) {
    if (r > t.limit()) throw std::invalid_argument("odd_phi_sum: beyond table limit");
    FixedSum s;
    for (uint64_t q = 1; q <= r; q += 2)
        if (t.squarefree(q)) s.add_reciprocal(t.phi(q));
    return s;
}

// sum over q <= 2r, q even, of mu^2(q)/phi(q); equals the odd sum at r exactly
inline FixedSum even_phi_sum_fixed(uint64_t two_r, const MultTables& t) {
    if (two_r > t.limit()) throw std::invalid_argument("even_phi_sum: beyond table limit");
    FixedSum s;
    for (uint64_t q = 2; q <= two_r; q += 2)
        if (t.squarefree(q)) s.add_reciprocal(t.phi(q));
    return s;
}

} // namespace goldbach
