#include "core/harness.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "core/error.hpp"
#include "core/textio.hpp"

namespace ideasim {

namespace {

// Runs tasks 0..count-1 on up to `jobs` threads. Each task owns its output
// slot, so scheduling order never shows up in the results.
void run_tasks(std::size_t count, int jobs, const std::function<void(std::size_t)>& task) {
    if (jobs < 1) throw ConfigError("jobs: must be >= 1");
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    std::vector<std::thread> workers;
    const std::size_t n_workers = std::min(static_cast<std::size_t>(jobs), count);
    workers.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) {
        workers.emplace_back([&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count || failed.load()) return;
                try {
                    task(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    }
    for (auto& worker : workers) worker.join();
    if (first_error) std::rethrow_exception(first_error);
}

CellSummary summarize(const std::vector<RunRecord>& raw, std::size_t begin, std::size_t count) {
    std::vector<double> utility;
    std::vector<double> convergence;
    utility.reserve(count);
    convergence.reserve(count);
    for (std::size_t i = begin; i < begin + count; ++i) {
        utility.push_back(raw[i].metrics.decision_true_utility);
        convergence.push_back(raw[i].metrics.convergence);
    }
    CellSummary cell;
    cell.nu = raw[begin].nu;
    cell.beta = raw[begin].beta;
    cell.group = raw[begin].group;
    cell.replicates = static_cast<int>(count);
    cell.mean_utility = mean(utility);
    cell.std_utility = sample_std(utility);
    cell.mean_convergence = mean(convergence);
    cell.std_convergence = sample_std(convergence);
    return cell;
}

std::string join_values(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += format_g17(values[i]);
    }
    return out;
}

void write_file_in(const std::string& dir, const std::string& name,
                   const std::string& content) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory: " + dir + ": " + ec.message());
    write_text_file((std::filesystem::path(dir) / name).string(), content);
}

std::string comment_block(const std::string& preamble) {
    std::string out;
    std::istringstream in(preamble);
    std::string line;
    while (std::getline(in, line)) out += "# " + line + "\n";
    return out;
}

}  // namespace

std::vector<double> default_grid_values() {
    std::vector<double> values;
    for (int i = 0; i <= 6; ++i) values.push_back(0.2 * i);
    return values;
}

void SweepSpec::validate() const {
    if (nu_values.empty() || beta_values.empty())
        throw ConfigError("sweep: nu and beta value lists must be nonempty");
    for (const double v : nu_values)
        if (v < 0.0) throw ConfigError("nu: sweep values must be >= 0");
    for (const double v : beta_values)
        if (v < 0.0) throw ConfigError("beta: sweep values must be >= 0");
    if (replicates < 1) throw ConfigError("replicates: must be >= 1");
    base.validate();
}

ExperimentResult run_sweep(const SweepSpec& spec, int jobs) {
    spec.validate();

    struct Cell {
        double nu;
        double beta;
    };
    std::vector<Cell> grid;
    for (const double nu : spec.nu_values)
        for (const double beta : spec.beta_values) grid.push_back({nu, beta});

    const std::size_t R = static_cast<std::size_t>(spec.replicates);
    ExperimentResult result;
    result.raw.resize(grid.size() * R);

    run_tasks(result.raw.size(), jobs, [&](std::size_t i) {
        const std::size_t cell = i / R;
        const int replicate = static_cast<int>(i % R) + 1;
        SimulationConfig cfg = spec.base;
        cfg.heterogeneity = grid[cell].nu;
        cfg.bias = grid[cell].beta;
        cfg.master_seed = derive_seed(spec.base.master_seed, "sweep", i);
        try {
            result.raw[i] = record_from_result(run_simulation(cfg), replicate);
        } catch (const std::exception& e) {
            throw ConfigError("sweep cell nu=" + format_g17(cfg.heterogeneity) +
                              " beta=" + format_g17(cfg.bias) + " replicate " +
                              std::to_string(replicate) + ": " + e.what());
        }
    });

    for (std::size_t cell = 0; cell < grid.size(); ++cell)
        result.cells.push_back(summarize(result.raw, cell * R, R));
    return result;
}

ExperimentResult run_group_comparison(const std::vector<std::string>& groups, int replicates,
                                      const SimulationConfig& base, int jobs) {
    if (groups.empty()) throw ConfigError("groups: at least one group label required");
    if (replicates < 1) throw ConfigError("replicates: must be >= 1");
    std::vector<OperatorWeights> weights;
    weights.reserve(groups.size());
    for (const auto& label : groups) weights.push_back(preset_weights(label));
    base.validate();

    const std::size_t R = static_cast<std::size_t>(replicates);
    ExperimentResult result;
    result.raw.resize(groups.size() * R);

    run_tasks(result.raw.size(), jobs, [&](std::size_t i) {
        const std::size_t cell = i / R;
        const int replicate = static_cast<int>(i % R) + 1;
        SimulationConfig cfg = base;
        cfg.group = groups[cell];
        cfg.weights = weights[cell];
        cfg.master_seed = derive_seed(base.master_seed, "groups", i);
        try {
            result.raw[i] = record_from_result(run_simulation(cfg), replicate);
        } catch (const std::exception& e) {
            throw ConfigError("group " + cfg.group + " replicate " +
                              std::to_string(replicate) + ": " + e.what());
        }
    });

    for (std::size_t cell = 0; cell < groups.size(); ++cell)
        result.cells.push_back(summarize(result.raw, cell * R, R));
    return result;
}

std::vector<TrendTest> trend_tests(const std::vector<RunRecord>& raw, std::uint64_t seed,
                                   bool skip_unavailable) {
    struct Spec {
        const char* predictor;
        const char* response;
        const char* condition;
    };
    static const Spec specs[] = {
        {"nu", "utility", "beta=0"},
        {"beta", "utility", "nu=0"},
        {"nu", "convergence", "beta=0"},
        {"beta", "convergence", "nu=0"},
    };

    std::vector<TrendTest> tests;
    std::uint64_t test_index = 0;
    for (const auto& s : specs) {
        const bool on_nu = std::string(s.predictor) == "nu";
        std::vector<double> xs;
        std::vector<double> ys;
        for (const auto& row : raw) {
            const double held = on_nu ? row.beta : row.nu;
            if (held != 0.0) continue;
            xs.push_back(on_nu ? row.nu : row.beta);
            const bool utility = std::string(s.response) == "utility";
            ys.push_back(utility ? row.metrics.decision_true_utility : row.metrics.convergence);
        }
        std::vector<double> distinct = xs;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (distinct.size() < 2) {
            ++test_index;
            if (skip_unavailable) continue;
            throw ConfigError("trend test " + std::string(s.predictor) + "->" + s.response +
                              ": fewer than 2 distinct predictor values");
        }

        TrendTest test;
        test.predictor = s.predictor;
        test.response = s.response;
        test.condition = s.condition;
        test.result = spearman_permutation_test(xs, ys, kTrendPermutations,
                                                derive_seed(seed, "trend", test_index++));
        tests.push_back(std::move(test));
    }
    return tests;
}

std::vector<GroupComparison> group_comparisons(const std::vector<RunRecord>& raw,
                                               std::uint64_t seed) {
    std::vector<std::string> order;
    std::vector<std::vector<double>> utilities;
    for (const auto& row : raw) {
        auto it = std::find(order.begin(), order.end(), row.group);
        if (it == order.end()) {
            order.push_back(row.group);
            utilities.emplace_back();
            it = order.end() - 1;
        }
        utilities[static_cast<std::size_t>(it - order.begin())].push_back(
            row.metrics.decision_true_utility);
    }
    std::vector<GroupComparison> comparisons;
    for (std::size_t g = 1; g < order.size(); ++g) {
        GroupComparison cmp;
        cmp.baseline = order[0];
        cmp.group = order[g];
        cmp.utility = two_sample_permutation_test(utilities[0], utilities[g],
                                                  kTrendPermutations,
                                                  derive_seed(seed, "compare", g));
        comparisons.push_back(std::move(cmp));
    }
    return comparisons;
}

RunRecord record_from_result(const SimulationResult& result, int replicate) {
    RunRecord row;
    row.nu = result.config.heterogeneity;
    row.beta = result.config.bias;
    row.group = result.config.group;
    row.replicate = replicate;
    row.seed = result.config.master_seed;
    row.metrics = result.metrics;
    row.events = result.log.events.size();
    row.skipped_events = result.skipped_events;
    return row;
}

std::string raw_csv(const std::vector<RunRecord>& raw, const std::string& preamble) {
    std::ostringstream out;
    out << comment_block(preamble) << kRawCsvHeader << "\n";
    for (const auto& row : raw) {
        out << format_g17(row.nu) << "," << format_g17(row.beta) << "," << row.group << ","
            << row.replicate << "," << row.seed << ","
            << format_g17(row.metrics.decision_true_utility) << ","
            << format_g17(row.metrics.convergence) << ","
            << format_g17(row.metrics.entropy_bits) << "," << row.metrics.distinct_types << ","
            << row.metrics.population_size << "," << row.events << "," << row.skipped_events
            << "\n";
    }
    return out.str();
}

std::string summary_csv(const std::vector<CellSummary>& cells, const std::string& preamble) {
    std::ostringstream out;
    out << comment_block(preamble) << kSummaryCsvHeader << "\n";
    for (const auto& cell : cells) {
        out << format_g17(cell.nu) << "," << format_g17(cell.beta) << "," << cell.group << ","
            << cell.replicates << "," << format_g17(cell.mean_utility) << ","
            << format_g17(cell.std_utility) << "," << format_g17(cell.mean_convergence) << ","
            << format_g17(cell.std_convergence) << "\n";
    }
    return out.str();
}

std::string trends_csv(const std::vector<TrendTest>& trends, const std::string& preamble) {
    std::ostringstream out;
    out << comment_block(preamble) << kTrendsCsvHeader << "\n";
    for (const auto& t : trends) {
        out << t.predictor << "," << t.response << "," << t.condition << "," << t.result.rows
            << "," << format_g17(t.result.rho) << "," << format_g17(t.result.p_negative) << ","
            << format_g17(t.result.p_positive) << "\n";
    }
    return out.str();
}

std::string comparisons_csv(const std::vector<GroupComparison>& comparisons,
                            const std::string& preamble) {
    std::ostringstream out;
    out << comment_block(preamble) << kComparisonsCsvHeader << "\n";
    for (const auto& c : comparisons) {
        out << c.baseline << "," << c.group << "," << format_g17(c.utility.mean_a) << ","
            << format_g17(c.utility.mean_b) << "," << format_g17(c.utility.diff) << ","
            << format_g17(c.utility.p_a_greater) << "," << format_g17(c.utility.p_b_greater)
            << "\n";
    }
    return out.str();
}

void write_run_outputs(const SimulationResult& result, const std::string& out_dir) {
    const std::string config_text = result.config.serialize();
    write_file_in(out_dir, "config.txt", config_text);
    write_file_in(out_dir, "events.log", export_log(result.log, config_text));
    write_file_in(out_dir, "metrics.csv",
                  raw_csv({record_from_result(result, 1)}, config_text));
}

void write_sweep_outputs(const SweepSpec& spec, const ExperimentResult& result,
                         const std::string& out_dir) {
    std::string preamble = spec.base.serialize();
    preamble += "nu_values=" + join_values(spec.nu_values) + "\n";
    preamble += "beta_values=" + join_values(spec.beta_values) + "\n";
    preamble += "replicates=" + std::to_string(spec.replicates) + "\n";

    write_file_in(out_dir, "raw.csv", raw_csv(result.raw, preamble));
    write_file_in(out_dir, "summary.csv", summary_csv(result.cells, preamble));
    write_file_in(out_dir, "trends.csv",
                  trends_csv(trend_tests(result.raw, spec.base.master_seed, true), preamble));
}

void write_groups_outputs(const std::vector<std::string>& groups, int replicates,
                          const SimulationConfig& base, const ExperimentResult& result,
                          const std::string& out_dir) {
    std::string preamble = base.serialize();
    preamble += "groups=";
    for (std::size_t i = 0; i < groups.size(); ++i) preamble += (i ? "," : "") + groups[i];
    preamble += "\nreplicates=" + std::to_string(replicates) + "\n";

    write_file_in(out_dir, "raw.csv", raw_csv(result.raw, preamble));
    write_file_in(out_dir, "summary.csv", summary_csv(result.cells, preamble));
    write_file_in(out_dir, "comparisons.csv",
                  comparisons_csv(group_comparisons(result.raw, base.master_seed), preamble));
}

void write_oracle_outputs(const SimulationConfig& cfg, const std::string& out_dir) {
    cfg.validate();
    if (cfg.aspects > cfg.enumeration_cap)
        throw LimitError("enumeration refused: M=" + std::to_string(cfg.aspects) +
                         " exceeds cap " + std::to_string(cfg.enumeration_cap));

    const auto [truth, master] = build_landscapes(cfg);
    const LandscapeTable true_table = enumerate_landscape(*truth, cfg.enumeration_cap);
    const LandscapeTable master_table = enumerate_landscape(*master, cfg.enumeration_cap);
    const std::string config_text = cfg.serialize();

    write_file_in(out_dir, "true_landscape.txt", truth->serialize());
    write_file_in(out_dir, "master_landscape.txt", master->serialize());

    std::ostringstream enumeration;
    enumeration << comment_block(config_text) << "encoding,true_utility,master_utility\n";
    for (std::uint64_t enc = 0; enc < true_table.values.size(); ++enc) {
        enumeration << enc << "," << format_g17(true_table.values[enc]) << ","
                    << format_g17(master_table.values[enc]) << "\n";
    }
    write_file_in(out_dir, "enumeration.csv", enumeration.str());

    std::ostringstream optimum;
    optimum << comment_block(config_text);
    optimum << "true_argmax=" << true_table.argmax << "\n"
            << "true_max=" << format_g17(true_table.values[true_table.argmax]) << "\n"
            << "true_argmin=" << true_table.argmin << "\n"
            << "true_min=" << format_g17(true_table.values[true_table.argmin]) << "\n"
            << "master_argmax=" << master_table.argmax << "\n"
            << "master_max=" << format_g17(master_table.values[master_table.argmax]) << "\n"
            << "master_argmin=" << master_table.argmin << "\n"
            << "master_min=" << format_g17(master_table.values[master_table.argmin]) << "\n";
    write_file_in(out_dir, "optimum.txt", optimum.str());
}

void write_genealogy_outputs(const std::string& log_path, const std::string& out_dir) {
    const EventLog log = load_log_file(log_path);
    const GenealogyDag dag = GenealogyDag::build(log);
    write_file_in(out_dir, "genealogy.dot", dag.to_dot());
    write_file_in(out_dir, "stats.txt", format_stats(genealogy_stats(dag)));
}

}  // namespace ideasim
