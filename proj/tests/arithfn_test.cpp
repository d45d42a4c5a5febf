#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goldbach/arithfn.hpp"

using namespace goldbach;

TEST_CASE("zeta enclosures against classical values") {
    Interval z2 = zeta_int(2);
    CHECK(z2.contains(1.6449340668482264));
    Interval ratio24 = z2 / zeta_int(4);
    Interval fifteen_pi2 = 15.0 / sqr(pi());
    CHECK(ratio24.lo <= fifteen_pi2.hi);
    CHECK(ratio24.hi >= fifteen_pi2.lo);
    Interval ratio36 = zeta_int(3) / zeta_int(6);
    CHECK(ratio36.lo >= 1.181564);
    CHECK(ratio36.hi <= 1.181565);
}

TEST_CASE("squarefree tail bound dominates brute-force tails") {
    MultTables t = MultTables::build(200);
    // j=2, A=1, m=1 encloses zeta(2)/zeta(4)
    Interval full = tail_bound_sidio(2, 1.0, 1, t);
    CHECK(full.hi >= 1.5198);
    CHECK(full.lo <= 1.5199);
    // j=2, A=10, m=2 dominates the direct tail over squarefree odd a >= 10
    double direct = 0.0;
    for (uint64_t a = 10; a <= 10'000'000; ++a) {
        if (a % 2 == 0) continue;
        bool sf = true;
        for (uint64_t p = 2; p * p <= a && sf; ++p)
            if (a % (p * p) == 0) sf = false;
        if (sf) direct += 1.0 / ((double)a * (double)a);
    }
    Interval bound = tail_bound_sidio(2, 10.0, 2, t);
    CHECK(bound.hi >= direct);
    // j=3, A=7 dominates too, and shrinks like A^-2
    Interval b3 = tail_bound_sidio(3, 7.0, 1, t);
    CHECK(b3.hi <= (zeta_int(3) / zeta_int(6) / 49.0).hi * 1.0001);
    CHECK_THROWS_AS(tail_bound_sidio(1, 1.0, 1, t), std::invalid_argument);
}

TEST_CASE("c_E matches the classical constant") {
    Interval ce = c_E(200000);
    CHECK(ce.contains(1.332582275));
    CHECK(ce.width() < 1e-6);
}

TEST_CASE("Ramare approximation of G_d with explicit radius") {
    MultTables t = MultTables::build(2'000'000);
    Interval ce = c_E(200000);
    CHECK(f1_of(1, t).contains(1.0));
    // |G(R) - estimate| <= radius, via the exact sieved sum
    for (double R : {1000.0, 50000.0, 1'000'000.0}) {
        RamareGd gd = ramare_Gd(1, R, t, ce);
        Interval exact = G_q(1, R, t);
        Interval err = abs(exact - gd.estimate);
        CHECK(err.lo <= gd.radius.hi);
    }
    for (uint64_t d : {2ull, 6ull, 30ull, 210ull}) {
        RamareGd gd = ramare_Gd(d, 500000.0, t, ce);
        Interval exact = G_q(d, 500000.0, t);
        CHECK(abs(exact - gd.estimate).lo <= gd.radius.hi);
    }
}

TEST_CASE("convolution identity: mu^2(q) q^{j-1}/phi(q)^j as a divisor sum") {
    // exact rational check through integer cross-multiplication:
    // phi(q)^j * q * sum_{ab=q} f_j(b)/a  ==  q^j * prod over p|q pieces
    MultTables t = MultTables::build(10000);
    for (int j : {2, 3}) {
        for (uint64_t q = 1; q <= 10000; ++q) {
            if (!t.squarefree(q)) continue;
            // lhs = mu^2(q) q^{j-1}/phi(q)^j, scaled by phi(q)^j q -> q^j
            // rhs = sum_{ab=q} f_j(b)/a with f_j(p) = (p^j - (p-1)^j)/((p-1)^j p),
            // scaled by the same factor; both sides stay integral
            __int128 phi_j = 1;
            for (int k = 0; k < j; ++k) phi_j *= t.phi(q);
            __int128 lhs = 1;
            for (int k = 0; k < j; ++k) lhs *= q; // q^j
            // divisor sum over squarefree q: enumerate divisors b via bitmask
            std::vector<uint32_t> ps = q > 1 ? t.prime_factors(q) : std::vector<uint32_t>{};
            __int128 rhs = 0;
            for (uint32_t mask = 0; mask < (1u << ps.size()); ++mask) {
                __int128 b = 1, fj_num = 1, fj_den = 1;
                for (size_t i = 0; i < ps.size(); ++i) {
                    if (!(mask & (1u << i))) continue;
                    __int128 p = ps[i];
                    __int128 pj = 1, pm1j = 1;
                    for (int k = 0; k < j; ++k) { pj *= p; pm1j *= (p - 1); }
                    b *= p;
                    fj_num *= (pj - pm1j);
                    fj_den *= pm1j * p;
                }
                __int128 a = q / (unsigned long long)b;
                // term = f_j(b)/a * phi^j * q = fj_num * phi^j * q / (fj_den * a)
                __int128 term_num = fj_num * phi_j * (__int128)q;
                REQUIRE(term_num % (fj_den * a) == 0);
                rhs += term_num / (fj_den * a);
            }
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("window verification on a modest prefix") {
    MultTables t = MultTables::build(20000);
    WindowReport rep = verify_G_windows(20000, t);
    CHECK(rep.proven);
}

TEST_CASE("phi-sum closed forms dominate exact sieved tails at desk scale") {
    MultTables t = MultTables::build(2'000'000);
    PhiSumBounds pb = phi_sum_bounds_constants(10'000'000);
    // constants are a touch above their infinite products
    CHECK(pb.gat1_const.hi <= 6.7345);
    CHECK(pb.gat1o_const.hi <= 2.15502);
    for (uint64_t r : {100ull, 1000ull, 150000ull}) {
        Interval tail = musq_phi2_tail(r, t, pb.gat1_const);
        CHECK(tail.hi <= (pb.gat1_const / (double)r).hi);
    }
    // odd mu^2 q / phi sum against 0.64787 r + log r/4 + 0.425
    for (uint64_t r : {1000ull, 100000ull}) {
        Interval lhs = odd_q_over_phi_sum(r, t);
        Interval rhs = Interval::ratio(64787, 100000) * (double)r +
                       log(ivl_u64(r)) / 4.0 + Interval::ratio(425, 1000);
        CHECK(lhs.hi <= rhs.lo);
    }
}

TEST_CASE("trivial bound G(R) > log R on a sample") {
    MultTables t = MultTables::build(100000);
    for (uint64_t R : {2ull, 10ull, 1234ull, 99999ull}) {
        Interval g = G_q(1, (double)R, t);
        CHECK(g.lo > std::log((double)R));
    }
}
