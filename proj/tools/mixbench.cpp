// mixbench: benchmark harness for the mixed-oracle solvers.
//
//   mixbench solve --approach minmax-small --config problem.cfg --seed 1 \
//            --eps 1e-3 --sigma 0.25 --out run.csv
//   mixbench bench --config grid.cfg --out results.csv --jobs 4
//
// Exit codes: 0 success, 1 target missed, 2 usage/config error,
// 3 numerical failure.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mixoracle/experiment.hpp"

namespace {

constexpr const char* kVersion = "mixbench 1.0.0";

int write_records(const std::vector<mixoracle::RunRecord>& records, const std::string& path,
                  bool no_timing) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot open output file: " << path << "\n";
        return 2;
    }
    mixoracle::write_csv(records, out, no_timing);
    return 0;
}

bool is_numerical_error(const std::string& msg) {
    return msg.find("non-finite") != std::string::npos ||
           msg.find("line search") != std::string::npos ||
           msg.find("interior") != std::string::npos ||
           msg.find("positive definite") != std::string::npos ||
           msg.find("exceeded") != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mixed-oracle min-min / min-max benchmark harness"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string config_path, out_path;
    std::uint64_t seed = 0;
    double eps = 0.0, sigma = 0.0;
    std::string approach;
    int jobs = 1;
    bool no_timing = false;

    auto* solve = app.add_subcommand("solve", "Run one approach on one problem spec");
    solve->add_option("--approach", approach, "minmin-small | minmax-small | minmax-large")
        ->required();
    solve->add_option("--config", config_path, "problem spec config file")->required();
    solve->add_option("--seed", seed, "run seed")->default_val(0);
    solve->add_option("--eps", eps, "target accuracy (overrides config)");
    solve->add_option("--sigma", sigma, "target confidence (overrides config)");
    solve->add_option("--out", out_path, "output CSV path")->required();
    solve->add_flag("--no-timing", no_timing, "write wall_ms as 0 for stable output");

    auto* bench = app.add_subcommand("bench", "Run a (problem x approach x seed) grid");
    bench->add_option("--config", config_path, "experiment grid config file")->required();
    bench->add_option("--out", out_path, "output CSV path")->required();
    bench->add_option("--jobs", jobs, "worker pool size")->default_val(1);
    bench->add_flag("--no-timing", no_timing, "write wall_ms as 0 for stable output");

    CLI11_PARSE(app, argc, argv);

    try {
        auto cells = mixoracle::load_experiment_config(config_path);
        if (cells.empty() && solve->parsed()) {
            std::cerr << "error: config defines no problem sections\n";
            return 2;
        }

        if (solve->parsed()) {
            if (approach != "minmin-small" && approach != "minmax-small" &&
                approach != "minmax-large") {
                std::cerr << "error: unknown approach '" << approach << "'\n";
                return 2;
            }
            mixoracle::ExperimentCell cell = cells.front();
            cell.approach = approach;
            cell.seeds = {seed};
            if (eps > 0.0) cell.eps = eps;
            if (sigma > 0.0) cell.sigma = sigma;
            mixoracle::ExperimentOutcome outcome =
                mixoracle::run_experiment({cell}, {.jobs = 1, .no_timing = no_timing});
            const int wr = write_records(outcome.records, out_path, no_timing);
            if (wr != 0) return wr;
            const auto& rec = outcome.records.front();
            if (!rec.error.empty()) {
                std::cerr << "run failed: " << rec.error << "\n";
                return 3;
            }
            std::cout << "gap=" << rec.gap << " first_calls=" << rec.first_calls
                      << " zeroth_calls=" << rec.zeroth_calls << " ok=" << rec.ok << "\n";
            return rec.ok ? 0 : 1;
        }

        // bench
        mixoracle::ExperimentOutcome outcome =
            mixoracle::run_experiment(cells, {.jobs = jobs, .no_timing = no_timing});
        const int wr = write_records(outcome.records, out_path, no_timing);
        if (wr != 0) return wr;
        std::size_t failed = 0;
        for (const auto& r : outcome.records)
            if (!r.ok) ++failed;
        std::cout << outcome.records.size() - failed << "/" << outcome.records.size()
                  << " cells met their gap target\n";
        return outcome.all_ok ? 0 : 1;
    } catch (const mixoracle::InvalidSpec& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const mixoracle::InvalidParameter& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_numerical_error(e.what()) ? 3 : 2;
    }
}
