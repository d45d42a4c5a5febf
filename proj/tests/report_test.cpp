#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goldbach/report.hpp"
#include "goldbach/verify.hpp"

using namespace goldbach;

TEST_CASE("entry directions") {
    ReportEntry below = ReportEntry::le("a", Interval(0.0, 1.0), 1.5, "");
    CHECK(below.pass);
    ReportEntry below_bad = ReportEntry::le("b", Interval(0.0, 2.0), 1.5, "");
    CHECK(!below_bad.pass);
    ReportEntry above = ReportEntry::ge("c", Interval(2.0, 3.0), 1.5, "");
    CHECK(above.pass);
    ReportEntry win = ReportEntry::window("d", Interval(1.1, 1.2), 1.0, 1.3, "");
    CHECK(win.pass);
    ReportEntry win_bad = ReportEntry::window("e", Interval(0.9, 1.2), 1.0, 1.3, "");
    CHECK(!win_bad.pass);
}

TEST_CASE("report verdict ignores informational entries") {
    Report rep;
    rep.task = "t";
    rep.add(ReportEntry::le("x", Interval(0.0, 1.0), 2.0, ""));
    rep.add(ReportEntry::le("y", Interval(0.0, 3.0), 2.0, "").info());
    CHECK(rep.pass());
    rep.add(ReportEntry::le("z", Interval(0.0, 3.0), 2.0, ""));
    CHECK(!rep.pass());
    CHECK(rep.failures() == 1);
}

TEST_CASE("serialization is deterministic") {
    Report rep;
    rep.task = "demo";
    rep.config.push_back({"qmax", "100"});
    rep.add(ReportEntry::le("val", Interval(0.25, 0.5), 1.0, "a check"));
    rep.wall_seconds = 1.23; // must not appear in the output
    std::string a = rep.str();
    rep.wall_seconds = 9.87;
    std::string b = rep.str();
    CHECK(a == b);
    CHECK(a.find("task demo") != std::string::npos);
    CHECK(a.find("entry val pass") != std::string::npos);
    CHECK(a.find("1.23") == std::string::npos);
}

TEST_CASE("config file parsing and unknown keys") {
    std::string path = "cfg_test.txt";
    FILE* f = std::fopen(path.c_str(), "w");
    std::fprintf(f, "qmax 512\ntables-limit 100000\nfull-scale 0\n");
    std::fclose(f);
    Config c = Config::from_file(path);
    CHECK(c.qmax == 512);
    CHECK(c.tables_limit == 100000);
    CHECK(!c.full_scale);
    std::remove(path.c_str());
    f = std::fopen(path.c_str(), "w");
    std::fprintf(f, "bogus 1\n");
    std::fclose(f);
    CHECK_THROWS_AS(Config::from_file(path), std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("unknown task is a usage error") {
    Config cfg;
    VerifyContext ctx(cfg);
    CHECK_THROWS_AS(run_task(ctx, "no-such-task"), std::invalid_argument);
}
