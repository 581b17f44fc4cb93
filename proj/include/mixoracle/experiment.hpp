#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mixoracle/approaches.hpp"
#include "mixoracle/problems.hpp"

namespace mixoracle {

/// One grid cell: a synthetic problem, an approach, a target, and the seeds
/// to run it under.
struct ExperimentCell {
    std::string name;
    ProblemSpec spec;
    std::string approach;  // minmin-small | minmax-small | minmax-large
    double eps = 1e-3;
    double sigma = 0.25;
    std::vector<std::uint64_t> seeds = {0};
    ApproachParams params;
};

struct RunRecord {
    std::string spec_id;
    std::string approach;
    double eps = 0.0;
    double sigma = 0.0;
    std::uint64_t seed = 0;
    double gap = 0.0;  // against the stored closed-form optimum
    std::uint64_t first_calls = 0;
    std::uint64_t zeroth_calls = 0;
    double wall_ms = 0.0;
    bool ok = false;
    std::string error;  // empty unless the cell failed with an exception
};

/// Plain-text config: `[name]` opens a cell, `key = value` lines fill it,
/// `#` starts a comment. A `[defaults]` section seeds every later cell.
std::vector<ExperimentCell> parse_experiment_config(std::istream& in);
std::vector<ExperimentCell> load_experiment_config(const std::string& path);

/// One (cell, seed) run, with its own rng and ledger.
RunRecord run_cell_seed(const ExperimentCell& cell, std::uint64_t seed);

struct ExperimentOptions {
    int jobs = 1;
    bool no_timing = false;  // write wall_ms as 0 for byte-stable output
};

struct ExperimentOutcome {
    std::vector<RunRecord> records;
    bool all_ok = true;
};

/// Executes the (cell x seed) grid; cells are independent and may run on a
/// worker pool. Record order matches the input grid regardless of jobs.
ExperimentOutcome run_experiment(const std::vector<ExperimentCell>& cells,
                                 const ExperimentOptions& opts);

extern const char* const kCsvHeader;  // spec,approach,eps,...,ok

void write_csv(const std::vector<RunRecord>& records, std::ostream& out, bool no_timing);

}  // namespace mixoracle
