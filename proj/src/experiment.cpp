#include "mixoracle/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <thread>

namespace mixoracle {

const char* const kCsvHeader = "spec,approach,eps,sigma,seed,gap,first_calls,zeroth_calls,wall_ms,ok";

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::uint64_t> parse_seed_list(const std::string& v, int line) {
    std::vector<std::uint64_t> seeds;
    std::stringstream ss(v);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        try {
            seeds.push_back(std::stoull(tok));
        } catch (...) {
            throw InvalidSpec("config line " + std::to_string(line) + ": bad seed '" + tok + "'");
        }
    }
    if (seeds.empty())
        throw InvalidSpec("config line " + std::to_string(line) + ": empty seed list");
    return seeds;
}

void apply_key(ExperimentCell& cell, const std::string& key, const std::string& value,
               int line) {
    auto num = [&]() {
        try {
            return std::stod(value);
        } catch (...) {
            throw InvalidSpec("config line " + std::to_string(line) + ": bad number '" + value +
                              "' for " + key);
        }
    };
    auto integer = [&]() { return static_cast<std::int64_t>(num()); };

    if (key == "family") cell.spec.family = problem_family_from_string(value);
    else if (key == "approach") cell.approach = value;
    else if (key == "n_x") cell.spec.n_x = static_cast<int>(integer());
    else if (key == "n_y") cell.spec.n_y = static_cast<int>(integer());
    else if (key == "mu_x") cell.spec.mu_x = num();
    else if (key == "mu_y") cell.spec.mu_y = num();
    else if (key == "L_xx") cell.spec.L_xx = num();
    else if (key == "L_yy") cell.spec.L_yy = num();
    else if (key == "L_xy") cell.spec.L_xy = num();
    else if (key == "box_halfwidth") cell.spec.box_halfwidth = num();
    else if (key == "lse_temperature") cell.spec.lse_temperature = num();
    else if (key == "problem_seed") cell.spec.seed = static_cast<std::uint64_t>(integer());
    else if (key == "eps") cell.eps = num();
    else if (key == "sigma") cell.sigma = num();
    else if (key == "seeds") cell.seeds = parse_seed_list(value, line);
    else if (key == "vaidya_iterations") cell.params.vaidya.iterations = integer();
    else if (key == "iteration_factor") cell.params.practical_iteration_factor = num();
    else if (key == "inner_sigma") cell.params.sigma_inner = num();
    else if (key == "max_restarts") cell.params.inner.max_restarts = integer();
    else if (key == "safety") cell.params.safety = num();
    else if (key == "eps_tilde_factor") cell.params.eps_tilde_factor = num();
    else
        throw InvalidSpec("config line " + std::to_string(line) + ": unknown key '" + key + "'");
}

}  // namespace

std::vector<ExperimentCell> parse_experiment_config(std::istream& in) {
    std::vector<ExperimentCell> cells;
    ExperimentCell defaults;
    bool in_defaults = false;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        const auto hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw InvalidSpec("config line " + std::to_string(line) + ": unterminated section");
            const std::string name = trim(s.substr(1, s.size() - 2));
            if (name.empty())
                throw InvalidSpec("config line " + std::to_string(line) + ": empty section name");
            if (name == "defaults") {
                in_defaults = true;
            } else {
                in_defaults = false;
                ExperimentCell cell = defaults;
                cell.name = name;
                cells.push_back(std::move(cell));
            }
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw InvalidSpec("config line " + std::to_string(line) + ": expected key = value");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty() || value.empty())
            throw InvalidSpec("config line " + std::to_string(line) + ": empty key or value");
        if (in_defaults) {
            apply_key(defaults, key, value, line);
        } else {
            if (cells.empty())
                throw InvalidSpec("config line " + std::to_string(line) +
                                  ": key outside of any [section]");
            apply_key(cells.back(), key, value, line);
        }
    }
    return cells;
}

std::vector<ExperimentCell> load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidSpec("cannot open config file: " + path);
    return parse_experiment_config(in);
}

RunRecord run_cell_seed(const ExperimentCell& cell, std::uint64_t seed) {
    RunRecord rec;
    rec.spec_id = cell.name;
    rec.approach = cell.approach;
    rec.eps = cell.eps;
    rec.sigma = cell.sigma;
    rec.seed = seed;

    const auto t0 = std::chrono::steady_clock::now();
    try {
        SeededRng gen_rng(cell.spec.seed);
        GeneratedProblem gen = generate_problem(cell.spec, gen_rng);
        ApproachParams params = cell.params;
        params.inner.R_y0_sq = gen.R_y0_sq;

        SeededRng rng(seed);
        OracleLedger ledger;
        ApproachReport rep;
        if (cell.approach == "minmin-small") {
            rep = solve_minmin_small(gen.problem, cell.eps, params, rng, ledger);
            rec.gap = gen.outer_gap(rep.x_hat);
        } else if (cell.approach == "minmax-small") {
            rep = solve_minmax_small(gen.problem, cell.eps, params, rng, ledger);
            rec.gap = gen.outer_gap(rep.x_hat);
        } else if (cell.approach == "minmax-large") {
            rep = solve_minmax_large(gen.problem, cell.eps, cell.sigma, params, rng, ledger);
            rec.gap = gen.inner_gap(rep.y_hat);
        } else {
            throw InvalidSpec("unknown approach: " + cell.approach);
        }
        rec.first_calls = ledger.first_calls;
        rec.zeroth_calls = ledger.zeroth_calls;
        rec.ok = rec.gap <= cell.eps;
    } catch (const std::exception& e) {
        rec.ok = false;
        rec.gap = std::numeric_limits<double>::quiet_NaN();
        rec.error = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rec;
}

ExperimentOutcome run_experiment(const std::vector<ExperimentCell>& cells,
                                 const ExperimentOptions& opts) {
    struct Item {
        const ExperimentCell* cell;
        std::uint64_t seed;
    };
    std::vector<Item> items;
    for (const auto& cell : cells)
        for (const auto seed : cell.seeds) items.push_back({&cell, seed});

    ExperimentOutcome out;
    out.records.resize(items.size());
    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || items.size() <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i)
            out.records[i] = run_cell_seed(*items[i].cell, items[i].seed);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= items.size()) return;
                out.records[i] = run_cell_seed(*items[i].cell, items[i].seed);
            }
        };
        std::vector<std::thread> pool;
        const int n_threads = std::min<std::size_t>(jobs, items.size());
        pool.reserve(n_threads);
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& r : out.records) out.all_ok = out.all_ok && r.ok;
    return out;
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_csv(const std::vector<RunRecord>& records, std::ostream& out, bool no_timing) {
    out << kCsvHeader << "\n";
    for (const auto& r : records) {
        out << r.spec_id << ',' << r.approach << ',' << fmt_double(r.eps) << ','
            << fmt_double(r.sigma) << ',' << r.seed << ',' << fmt_double(r.gap) << ','
            << r.first_calls << ',' << r.zeroth_calls << ','
            << fmt_double(no_timing ? 0.0 : r.wall_ms) << ',' << (r.ok ? 1 : 0) << "\n";
    }
}

}  // namespace mixoracle
