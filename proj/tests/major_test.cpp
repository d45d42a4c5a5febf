#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goldbach/major.hpp"
#include "goldbach/verify.hpp"

using namespace goldbach;

TEST_CASE("pinned inputs pass their own derivation recheck") {
    PinnedConstants pc;
    CHECK_NOTHROW(validate_pinned(pc));
    // a corrupted pinned value must be caught
    PinnedConstants bad = pc;
    bad.et_eta_plus = Interval(0.0, 1e-9);
    CHECK_THROWS_AS(validate_pinned(bad), std::invalid_argument);
    PinnedConstants bad2 = pc;
    bad2.eta_plus.l2 = Interval(0.0, 0.79);
    CHECK_THROWS_AS(validate_pinned(bad2), std::invalid_argument);
}

TEST_CASE("pinned constants file round trip") {
    PinnedConstants pc;
    std::string path = "pinned_test.txt";
    FILE* f = std::fopen(path.c_str(), "w");
    std::fprintf(f, "# test pinned file\n");
    std::fprintf(f, "sazar.l1 0 1.062319 companion-norm-table\n");
    std::fprintf(f, "T0 3.061e10 3.061e10\n");
    std::fclose(f);
    PinnedConstants loaded = load_pinned(path);
    CHECK(loaded.eta_plus.l1.hi == 1.062319);
    CHECK(loaded.T0 == 3.061e10);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_pinned("no_such_file.txt"), std::runtime_error);
}

TEST_CASE("singular series: lower bound and exact form") {
    Interval c0 = C0_lower(3'000'000);
    CHECK(c0.lo >= 1.320);
    CHECK(c0.hi <= 1.3204);
    // even N: the factor at p = 2 kills the product
    CHECK(C0_exact({2, 3}).contains(0.0));
    // N = 15: compare against a truncated direct product
    Interval c15 = C0_exact({3, 5}, 1'000'000);
    double direct = 1.0;
    std::vector<uint32_t> primes = MultTables::small_primes(100000);
    for (uint32_t p : primes) {
        double pm = p - 1.0;
        if (p == 3 || p == 5) direct *= 1.0 - 1.0 / (pm * pm);
        else direct *= 1.0 + 1.0 / (pm * pm * pm);
    }
    CHECK(std::fabs(c15.mid() - direct) < 1e-4);
    // C0_exact for odd N always at least the generic lower bound
    for (auto& ps : std::vector<std::vector<uint64_t>>{{3}, {5, 7}, {3, 11, 13}, {101}}) {
        Interval ex = C0_exact(ps, 200000);
        CHECK(ex.hi >= c0.lo);
    }
}

TEST_CASE("the full major-chain report is green") {
    Config cfg;
    VerifyContext ctx(cfg);
    Report rep = run_major_chain(ctx);
    for (const auto& e : rep.entries) {
        INFO(e.label, " computed=", e.computed.str());
        CHECK((e.pass || e.informational));
    }
}

TEST_CASE("K_{r,2} coefficient is small and certified decreasing") {
    MajorParams mp;
    NormSet plus = norms(SmoothingKind::make_plus(200.0), mp.pinned.eta_plus);
    Interval k = k_r2_over_x(mp, plus);
    CHECK(k.hi <= 9.71e-21);
}
