// Command-line front end for the ideasim shared library. Everything goes
// through the public C API; exit codes are 0 (ok), 1 (usage/config error),
// 2 (runtime/IO error).

#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ideasim.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

int exit_code_for(int status) {
    switch (status) {
        case IDEASIM_OK:
            return kExitOk;
        case IDEASIM_ERR_INVALID:
        case IDEASIM_ERR_CONFIG:
        case IDEASIM_ERR_PARSE:
        case IDEASIM_ERR_LIMIT:
            return kExitConfig;
        default:
            return kExitRuntime;
    }
}

int report(int status) {
    if (status != IDEASIM_OK) std::fprintf(stderr, "error: %s\n", ideasim_last_error());
    return exit_code_for(status);
}

struct ConfigHandle {
    ideasim_config* ptr = ideasim_config_new();
    ~ConfigHandle() { ideasim_config_free(ptr); }
};

// Flags mirror the model's symbols one-to-one (--nu, --beta, --M, ...).
// Precedence: defaults < --config file < explicit flags.
struct ConfigFlags {
    std::map<std::string, std::string> values;
    std::string config_file;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--config", config_file, "key=value config file");
        add_scalar(cmd, "--M", "M", "problem aspects (bits per idea)");
        add_scalar(cmd, "--n", "n", "representative ideas defining the landscape");
        add_scalar(cmd, "--N", "N", "agents in the group");
        add_scalar(cmd, "--k", "k", "initial population size");
        add_scalar(cmd, "--T", "T", "iterations (full rotations)");
        add_scalar(cmd, "--nu", "nu", "within-group heterogeneity");
        add_scalar(cmd, "--beta", "beta", "group-level bias");
        add_scalar(cmd, "--rp", "rp", "preferential sample size");
        add_scalar(cmd, "--pm", "pm", "per-bit mutation probability");
        add_scalar(cmd, "--rm", "rm", "intelligent-mutation offspring count");
        add_scalar(cmd, "--ps", "ps", "per-aspect crossover swap probability");
        add_scalar(cmd, "--seed", "seed", "master seed (the only entropy source)");
        add_scalar(cmd, "--group", "group", "behavioral preset G0..G7");
        add_scalar(cmd, "--weights", "weights", "six comma-separated operator weights");
        add_scalar(cmd, "--enum-cap", "enum_cap", "max M the oracle will enumerate");
    }

    int apply(ideasim_config* cfg) const {
        if (!config_file.empty()) {
            if (int rc = ideasim_config_load(cfg, config_file.c_str()); rc) return rc;
        }
        for (const auto& [key, value] : values) {
            if (int rc = ideasim_config_set(cfg, key.c_str(), value.c_str()); rc) return rc;
        }
        return IDEASIM_OK;
    }

private:
    void add_scalar(CLI::App* cmd, const char* flag, const std::string& key,
                    const char* help) {
        cmd->add_option_function<std::string>(
            flag, [this, key](const std::string& v) { values[key] = v; }, help);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ideasim: evolutionary simulator of collective decision making"};
    app.require_subcommand(1);

    ConfigFlags run_flags, sweep_flags, groups_flags, oracle_flags;
    std::string run_out = "out/run";
    std::string sweep_out = "out/sweep";
    std::string groups_out = "out/groups";
    std::string oracle_out = "out/oracle";
    std::string genealogy_out = "out/genealogy";
    std::string log_path;
    std::vector<double> nu_values, beta_values;
    std::string group_list;
    int sweep_replicates = 50;
    int group_replicates = 100;
    int jobs = 1;

    auto* run_cmd = app.add_subcommand("run", "one simulation; writes metrics, log, config");
    run_flags.add_options(run_cmd);
    run_cmd->add_option("--out", run_out, "output directory");

    auto* sweep_cmd =
        app.add_subcommand("sweep", "heterogeneity/bias grid with G0 agents");
    sweep_flags.add_options(sweep_cmd);
    sweep_cmd->add_option("--out", sweep_out, "output directory");
    sweep_cmd->add_option("--nu-values", nu_values, "grid values for nu (default 0..1.2/0.2)");
    sweep_cmd->add_option("--beta-values", beta_values, "grid values for beta");
    sweep_cmd->add_option("--replicates,-R", sweep_replicates, "runs per cell");
    sweep_cmd->add_option("--jobs,-j", jobs, "worker threads (never changes output bytes)");

    auto* groups_cmd =
        app.add_subcommand("groups", "behavioral-profile comparison across presets");
    groups_flags.add_options(groups_cmd);
    groups_cmd->add_option("--out", groups_out, "output directory");
    groups_cmd->add_option("--groups", group_list, "comma-separated labels (default G0..G7)");
    groups_cmd->add_option("--replicates,-R", group_replicates, "runs per group");
    groups_cmd->add_option("--jobs,-j", jobs, "worker threads (never changes output bytes)");

    auto* oracle_cmd =
        app.add_subcommand("oracle", "enumerate the configured landscapes exhaustively");
    oracle_flags.add_options(oracle_cmd);
    oracle_cmd->add_option("--out", oracle_out, "output directory");

    auto* genealogy_cmd =
        app.add_subcommand("genealogy", "rebuild the idea genealogy from an event log");
    genealogy_cmd->add_option("--log", log_path, "event-log file")->required();
    genealogy_cmd->add_option("--out", genealogy_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    }

    if (run_cmd->parsed()) {
        ConfigHandle cfg;
        if (int rc = run_flags.apply(cfg.ptr); rc) return report(rc);
        ideasim_result* result = nullptr;
        if (int rc = ideasim_run(cfg.ptr, &result); rc) return report(rc);
        std::unique_ptr<ideasim_result, decltype(&ideasim_result_free)> holder(
            result, &ideasim_result_free);
        if (int rc = ideasim_result_write(result, run_out.c_str()); rc) return report(rc);

        ideasim_metrics m{};
        ideasim_result_metrics(result, &m);
        std::printf("decision=%llu true_utility=%.6f convergence=%.6f entropy=%.6f "
                    "population=%llu events=%llu skipped=%llu\n",
                    static_cast<unsigned long long>(m.most_supported),
                    m.decision_true_utility, m.convergence, m.entropy_bits,
                    static_cast<unsigned long long>(m.population_size),
                    static_cast<unsigned long long>(m.events),
                    static_cast<unsigned long long>(m.skipped_events));
        std::printf("wrote %s/{metrics.csv,events.log,config.txt}\n", run_out.c_str());
        return kExitOk;
    }

    if (sweep_cmd->parsed()) {
        ConfigHandle cfg;
        if (int rc = sweep_flags.apply(cfg.ptr); rc) return report(rc);
        const int rc = ideasim_sweep(
            cfg.ptr, nu_values.empty() ? nullptr : nu_values.data(), nu_values.size(),
            beta_values.empty() ? nullptr : beta_values.data(), beta_values.size(),
            sweep_replicates, jobs, sweep_out.c_str());
        if (rc) return report(rc);
        std::printf("wrote %s/{raw.csv,summary.csv,trends.csv}\n", sweep_out.c_str());
        return kExitOk;
    }

    if (groups_cmd->parsed()) {
        ConfigHandle cfg;
        if (int rc = groups_flags.apply(cfg.ptr); rc) return report(rc);
        const int rc = ideasim_groups(cfg.ptr, group_list.empty() ? nullptr : group_list.c_str(),
                                      group_replicates, jobs, groups_out.c_str());
        if (rc) return report(rc);
        std::printf("wrote %s/{raw.csv,summary.csv,comparisons.csv}\n", groups_out.c_str());
        return kExitOk;
    }

    if (oracle_cmd->parsed()) {
        ConfigHandle cfg;
        if (int rc = oracle_flags.apply(cfg.ptr); rc) return report(rc);
        if (int rc = ideasim_oracle(cfg.ptr, oracle_out.c_str()); rc) return report(rc);
        std::printf("wrote %s/{true_landscape.txt,master_landscape.txt,enumeration.csv,"
                    "optimum.txt}\n",
                    oracle_out.c_str());
        return kExitOk;
    }

    if (genealogy_cmd->parsed()) {
        if (int rc = ideasim_genealogy(log_path.c_str(), genealogy_out.c_str()); rc)
            return report(rc);
        std::printf("wrote %s/{genealogy.dot,stats.txt}\n", genealogy_out.c_str());
        return kExitOk;
    }

    return kExitConfig;
}
