#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <random>

#include "goldbach/gsum.hpp"
#include "goldbach/tables.hpp"

using namespace goldbach;

static uint64_t phi_direct(uint64_t n) {
    uint64_t result = n;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

static bool squarefree_direct(uint64_t n) {
    for (uint64_t p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0) return false;
    return true;
}

TEST_CASE("sieve tables match direct factorization") {
    MultTables t = MultTables::build(100000);
    CHECK(t.phi(1) == 1);
    CHECK(t.mu_sq(1) == 1);
    CHECK(t.phi(12) == 4);
    CHECK(t.mu_sq(12) == 0);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<uint64_t> U(2, 100000);
    for (int i = 0; i < 2000; ++i) {
        uint64_t n = U(rng);
        CHECK(t.phi(n) == phi_direct(n));
        CHECK((t.mu_sq(n) != 0) == squarefree_direct(n));
        CHECK(n % t.lpf(n) == 0);
        for (uint64_t p = 2; p < t.lpf(n); ++p) CHECK(n % p != 0);
    }
}

TEST_CASE("segmented construction agrees across segment boundaries") {
    // limit chosen to straddle the 2^22 segment size
    MultTables t = MultTables::build((1u << 22) + 1000);
    uint64_t base = (1u << 22) - 3;
    for (uint64_t n = base; n < base + 10; ++n) {
        CHECK(t.phi(n) == phi_direct(n));
        CHECK((t.mu_sq(n) != 0) == squarefree_direct(n));
    }
}

TEST_CASE("over-budget limit is a resource error") {
    CHECK_THROWS_AS(MultTables::build(1000, 100), std::runtime_error);
}

TEST_CASE("binary cache round-trips and rejects corruption") {
    MultTables t = MultTables::build(50000);
    std::string path = "tables_test_cache.bin";
    REQUIRE(t.save(path));
    MultTables u;
    REQUIRE(MultTables::load(path, u));
    CHECK(u.limit() == t.limit());
    for (uint64_t n : {1ull, 2ull, 49999ull, 50000ull}) {
        CHECK(u.phi(n) == t.phi(n));
        CHECK(u.mu_sq(n) == t.mu_sq(n));
        CHECK(u.lpf(n) == t.lpf(n));
    }
    // flip one payload byte: checksum must fail
    FILE* f = std::fopen(path.c_str(), "r+b");
    REQUIRE(f);
    std::fseek(f, 64, SEEK_SET);
    int c = std::fgetc(f);
    std::fseek(f, 64, SEEK_SET);
    std::fputc(c ^ 0x5a, f);
    std::fclose(f);
    MultTables v;
    CHECK(!MultTables::load(path, v));
    std::remove(path.c_str());
}

TEST_CASE("fixed-point G sums: brute-force rational oracle at small R") {
    MultTables t = MultTables::build(1000);
    // G_1(10) = 1 + 1 + 1/2 + 1/4 + 1/2 + 1/6 + 1/4 = 11/3
    Interval g10 = G_q(1, 10.0, t);
    CHECK(g10.contains(Interval::ratio(11, 3).mid()));
    CHECK(g10.width() < 1e-12);
    // G_1(1) = 1 exactly
    CHECK(G_q(1, 1.0, t).contains(1.0));
    // exact micro-rational check: sum over squarefree r <= 30 coprime to 6
    // of 1/phi(r) = 1 + 1/4 + 1/6 + 1/10 + 1/12 + 1/16 + 1/22 + 1/28 + 1/30
    long long num = 0, den = 1;
    for (uint64_t r = 1; r <= 30; ++r) {
        if (!t.squarefree(r) || r % 2 == 0 || r % 3 == 0) continue;
        long long p = t.phi(r);
        num = num * p + den;
        den *= p;
        long long g = std::__gcd(num, den);
        num /= g; den /= g;
    }
    Interval expect = Interval::ratio(num, den);
    CHECK(G_q(6, 30.0, t).contains(expect.mid()));
}

TEST_CASE("GTable cumulative values equal direct summation bit for bit") {
    MultTables t = MultTables::build(10000);
    // every q <= 1e4 at a fixed range, plus random deeper ranges
    int mismatches = 0;
    for (uint64_t q = 1; q <= 10000; ++q) {
        GTable gt(q, 600, t);
        if (!(gt.at(600) == gq_fixed(q, 600, t))) ++mismatches;
    }
    CHECK(mismatches == 0);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<uint64_t> Q(1, 10000), R(1, 3000);
    for (int i = 0; i < 25; ++i) {
        uint64_t q = Q(rng), rmax = R(rng);
        GTable gt(q, rmax, t);
        CHECK(gt.at(rmax) == gq_fixed(q, rmax, t));
        for (uint64_t r = 1; r <= rmax; r += 97)
            CHECK(gt.at(r).lo >= gt.at(r > 97 ? r - 97 : 0).lo);
    }
}

TEST_CASE("even-q sum at 2r equals odd-q sum at r exactly") {
    MultTables t = MultTables::build(200000);
    for (uint64_t r : {100ull, 1577ull, 99999ull}) {
        FixedSum odd = odd_phi_sum_fixed(r, t);
        FixedSum even = even_phi_sum_fixed(2 * r, t);
        CHECK(odd == even);
    }
}
