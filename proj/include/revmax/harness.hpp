#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "revmax/bounds.hpp"

namespace revmax {

// Everything that determines a suite or a search run. The seed fixes all
// randomness: instance i always draws from stream (seed, i), so runs are
// reproducible and order-independent.
struct ExperimentConfig {
    std::uint64_t seed = 0;
    int num_instances = 0;
    int min_support = 1;
    int max_support = 8;  // per item
    std::pair<double, double> value_range{0.0, 10.0};
    std::optional<std::pair<double, double>> alpha_window;  // for the search
    std::size_t grid_limit = 200;
    double check_tol = 1e-7;
    long max_lp_iterations = 0;  // 0: solver default
    std::string output_path;     // empty: no file written
    enum class Format { csv, json } format = Format::csv;
    // hill-climbing knobs
    int restarts = 20;
    int steps = 200;
};

struct InstanceRecord {
    int instance_id = 0;
    int n1 = 0, n2 = 0;
    BoundReport report;   // rev/slacks are NaN when status == "unsolved"
    std::string status;   // ok | degenerate | violation | unsolved
    ProductInstance instance;
};

struct SuiteSummary {
    std::vector<InstanceRecord> records;
    int solved = 0, degenerate = 0, unsolved = 0;
    std::vector<int> violating_ids;
    double max_ratio = 0.0;      // best rev/srev among solved non-degenerate
    int argmax_instance = -1;    // -1 when no such instance
    struct AlphaBucket {
        double alpha_lo = 0.0, alpha_hi = 0.0;
        double max_ratio = 0.0;
        int count = 0;
    };
    std::vector<AlphaBucket> alpha_deciles;  // deciles of the observed alphas
};

// Generate and analyze num_instances random instances. LP failures mark the
// instance "unsolved" instead of aborting the suite; bound violations mark it
// "violation" and land in violating_ids.
SuiteSummary run_random_suite(const ExperimentConfig& cfg);

// Hill climbing for large rev/srev: each restart draws a fresh instance
// (rescaled into the alpha window when one is set), then repeatedly perturbs
// one atom's mass by one of {+10%, -10%, +1%, -1%}, renormalizes, re-solves,
// and accepts the move iff the ratio improves and alpha stays in the window.
// Supports are fixed per restart; only masses move. Best-found only, no
// optimality claim.
struct SearchResult {
    std::optional<ProductInstance> best_instance;
    BoundReport best_report;  // meaningful iff best_instance
    int best_restart = -1;
    std::vector<std::vector<double>> trajectories;  // accepted ratios per restart
    int unsolved = 0;
    std::vector<std::pair<int, int>> violations;  // (restart, step) pairs
};

SearchResult worst_case_search(const ExperimentConfig& cfg);

// CSV with one row per instance:
// instance_id,n1,n2,r1,r2,alpha,srev,rev,emin,g_alpha,theorem_slack,
// lemma1_slack,lemma2_slack,ratio,status   (NaN prints as "nan")
void write_suite_csv(const SuiteSummary& s, std::ostream& os);
std::string suite_to_json(const SuiteSummary& s, const ExperimentConfig& cfg);
std::string search_to_json(const SearchResult& r, const ExperimentConfig& cfg);

// Atomic write: temp file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

// Writes cfg.output_path in cfg.format if a path is set.
void save_suite(const SuiteSummary& s, const ExperimentConfig& cfg);
void save_search(const SearchResult& r, const ExperimentConfig& cfg);

}  // namespace revmax
