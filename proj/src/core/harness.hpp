#pragma once

#include <string>
#include <vector>

#include "core/simulation.hpp"
#include "core/stats.hpp"

namespace ideasim {

// Default sweep grid: 0 to 1.2 in increments of 0.2, on both axes.
std::vector<double> default_grid_values();

struct SweepSpec {
    std::vector<double> nu_values = default_grid_values();
    std::vector<double> beta_values = default_grid_values();
    int replicates = 50;
    SimulationConfig base;  // master_seed lives here

    void validate() const;
};

// One raw CSV row.
struct RunRecord {
    double nu = 0.0;
    double beta = 0.0;
    std::string group;
    int replicate = 0;  // 1-based
    std::uint64_t seed = 0;
    OutcomeMetrics metrics;
    std::uint64_t events = 0;
    std::uint64_t skipped_events = 0;
};

struct CellSummary {
    double nu = 0.0;
    double beta = 0.0;
    std::string group;
    int replicates = 0;
    double mean_utility = 0.0;
    double std_utility = 0.0;
    double mean_convergence = 0.0;
    double std_convergence = 0.0;
};

struct ExperimentResult {
    std::vector<RunRecord> raw;       // cell-major, replicate order within a cell
    std::vector<CellSummary> cells;
};

// R independent G0-profile runs per (nu, beta) cell. Replicate seeds are
// pre-derived from the base master_seed, so any `jobs` count produces the
// same bytes.
ExperimentResult run_sweep(const SweepSpec& spec, int jobs = 1);

// R runs per group preset at the base config's (nu, beta).
ExperimentResult run_group_comparison(const std::vector<std::string>& groups, int replicates,
                                      const SimulationConfig& base, int jobs = 1);

struct TrendTest {
    std::string predictor;   // "nu" or "beta"
    std::string response;    // "utility" or "convergence"
    std::string condition;   // e.g. "beta=0"
    TrendResult result;
};

inline constexpr int kTrendPermutations = 10000;

// The four monotone-trend tests, each conditioned on the other parameter
// being 0. A test with fewer than 2 distinct predictor
// values is an error, unless skip_unavailable drops it instead (degenerate
// grids still produce a report that way).
std::vector<TrendTest> trend_tests(const std::vector<RunRecord>& raw, std::uint64_t seed,
                                   bool skip_unavailable = false);

struct GroupComparison {
    std::string baseline;
    std::string group;
    TwoSampleResult utility;  // baseline vs group, on decision_true_utility
};

std::vector<GroupComparison> group_comparisons(const std::vector<RunRecord>& raw,
                                               std::uint64_t seed);

inline constexpr const char* kRawCsvHeader =
    "nu,beta,group,replicate,seed,decision_true_utility,convergence,entropy_bits,"
    "distinct_types,population_size,events,skipped_events";
inline constexpr const char* kSummaryCsvHeader =
    "nu,beta,group,R,mean_utility,std_utility,mean_convergence,std_convergence";
inline constexpr const char* kTrendsCsvHeader =
    "predictor,response,condition,rows,rho,p_negative,p_positive";
inline constexpr const char* kComparisonsCsvHeader =
    "baseline,group,mean_baseline,mean_group,diff,p_baseline_greater,p_group_greater";

std::string raw_csv(const std::vector<RunRecord>& raw, const std::string& preamble);
std::string summary_csv(const std::vector<CellSummary>& cells, const std::string& preamble);
std::string trends_csv(const std::vector<TrendTest>& trends, const std::string& preamble);
std::string comparisons_csv(const std::vector<GroupComparison>& comparisons,
                            const std::string& preamble);

RunRecord record_from_result(const SimulationResult& result, int replicate);

// File bundles behind the CLI subcommands. Every file embeds the resolved
// configuration as '# ' comment lines.
void write_run_outputs(const SimulationResult& result, const std::string& out_dir);
void write_sweep_outputs(const SweepSpec& spec, const ExperimentResult& result,
                         const std::string& out_dir);
void write_groups_outputs(const std::vector<std::string>& groups, int replicates,
                          const SimulationConfig& base, const ExperimentResult& result,
                          const std::string& out_dir);
void write_oracle_outputs(const SimulationConfig& cfg, const std::string& out_dir);
void write_genealogy_outputs(const std::string& log_path, const std::string& out_dir);

}  // namespace ideasim
