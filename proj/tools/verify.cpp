// verify: command-line driver for the verification tasks.
//
//   verify <task> [--qmax N] [--tables-limit N] [--config PATH]
//                 [--delta-table PATH] [--full-scale] [--out PATH]
//
// tasks: appendix-b, g-windows, sieve-espagn, minor-chain, major-chain,
//        austeria, ladder, conclude, all
//
// exit codes: 0 = all checks pass, 1 = a verification failed, 2 = usage error.

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "goldbach/verify.hpp"

int main(int argc, char** argv) {
    CLI::App app{"rigorous verification of the explicit three-primes bound chains"};
    app.name("verify");

    std::string task;
    app.add_option("task", task,
                   "appendix-b | g-windows | sieve-espagn | minor-chain | major-chain | "
                   "austeria | ladder | conclude | all")
        ->required();

    goldbach::Config cfg;
    std::string config_path, out_dir, delta_path, pinned_path, cache_path;
    uint64_t qmax = 0, tables_limit = 0;
    bool full_scale = false;
    app.add_option("--qmax", qmax, "quotient-scan cap (default 100000)");
    app.add_option("--tables-limit", tables_limit, "minimum sieve-table limit");
    app.add_option("--config", config_path, "key-value config file");
    app.add_option("--delta-table", delta_path, "prime-gap table file");
    app.add_option("--pinned", pinned_path, "pinned constants file");
    app.add_option("--tables-cache", cache_path, "binary cache for the sieve tables");
    app.add_option("--out", out_dir, "results directory");
    app.add_flag("--full-scale", full_scale,
                 "run the original (non-desk) ranges; this is weeks of CPU");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) cfg = goldbach::Config::from_file(config_path);
        if (qmax) cfg.qmax = qmax;
        if (tables_limit) cfg.tables_limit = tables_limit;
        if (full_scale) cfg.full_scale = true;
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (!delta_path.empty()) cfg.delta_table_path = delta_path;
        if (!pinned_path.empty()) cfg.pinned_path = pinned_path;
        if (!cache_path.empty()) cfg.tables_cache = cache_path;

        goldbach::VerifyContext ctx(cfg);
        goldbach::Report rep = goldbach::run_task(ctx, task);
        std::string path = goldbach::write_report(rep, cfg);
        rep.write(std::cout);
        std::fprintf(stderr, "[%s] %.2fs, report written to %s\n", rep.task.c_str(),
                     rep.wall_seconds, path.c_str());
        return rep.pass() ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
