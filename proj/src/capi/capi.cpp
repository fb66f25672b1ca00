#include "ideasim.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "core/error.hpp"
#include "core/harness.hpp"
#include "core/textio.hpp"

using namespace ideasim;

struct ideasim_config {
    SimulationConfig cfg;
};

struct ideasim_result {
    SimulationResult result;
};

namespace {

thread_local std::string t_last_error;

int fail(int code, const std::string& message) {
    t_last_error = message;
    return code;
}

// Maps core exceptions onto status codes; the catch-all keeps exceptions
// from ever crossing the C boundary.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return IDEASIM_OK;
    } catch (const ConfigError& e) {
        return fail(IDEASIM_ERR_CONFIG, e.what());
    } catch (const ParseError& e) {
        return fail(IDEASIM_ERR_PARSE, e.what());
    } catch (const IoError& e) {
        return fail(IDEASIM_ERR_IO, e.what());
    } catch (const LimitError& e) {
        return fail(IDEASIM_ERR_LIMIT, e.what());
    } catch (const std::exception& e) {
        return fail(IDEASIM_ERR_INVALID, e.what());
    } catch (...) {
        return fail(IDEASIM_ERR_INVALID, "unknown error");
    }
}

int require(bool ok, const char* what) {
    return ok ? IDEASIM_OK : fail(IDEASIM_ERR_INVALID, std::string("null ") + what);
}

}  // namespace

extern "C" {

const char* ideasim_version(void) { return "1.0.0"; }

const char* ideasim_last_error(void) { return t_last_error.c_str(); }

ideasim_config* ideasim_config_new(void) { return new (std::nothrow) ideasim_config(); }

void ideasim_config_free(ideasim_config* cfg) { delete cfg; }

int ideasim_config_set(ideasim_config* cfg, const char* key, const char* value) {
    if (int rc = require(cfg, "config"); rc) return rc;
    if (int rc = require(key, "key"); rc) return rc;
    if (int rc = require(value, "value"); rc) return rc;
    return guarded([&]() { cfg->cfg.set(key, value); });
}

int ideasim_config_load(ideasim_config* cfg, const char* path) {
    if (int rc = require(cfg, "config"); rc) return rc;
    if (int rc = require(path, "path"); rc) return rc;
    return guarded([&]() {
        const std::string text = read_text_file(path);
        SimulationConfig merged = cfg->cfg;
        std::istringstream in(text);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ParseError("config line " + std::to_string(line_no) +
                                 ": expected key=value, got '" + line + "'");
            merged.set(line.substr(0, eq), line.substr(eq + 1));
        }
        cfg->cfg = merged;
    });
}

int ideasim_config_text(const ideasim_config* cfg, char* buf, size_t len, size_t* needed) {
    if (int rc = require(cfg, "config"); rc) return rc;
    return guarded([&]() {
        const std::string text = cfg->cfg.serialize();
        if (needed) *needed = text.size() + 1;
        if (buf && len > 0) {
            const size_t n = std::min(len - 1, text.size());
            std::memcpy(buf, text.data(), n);
            buf[n] = '\0';
        }
    });
}

int ideasim_config_validate(const ideasim_config* cfg) {
    if (int rc = require(cfg, "config"); rc) return rc;
    return guarded([&]() { cfg->cfg.validate(); });
}

int ideasim_run(const ideasim_config* cfg, ideasim_result** out) {
    if (int rc = require(cfg, "config"); rc) return rc;
    if (int rc = require(out, "result out-pointer"); rc) return rc;
    return guarded([&]() {
        auto result = std::make_unique<ideasim_result>();
        result->result = run_simulation(cfg->cfg);
        *out = result.release();
    });
}

void ideasim_result_free(ideasim_result* result) { delete result; }

int ideasim_result_metrics(const ideasim_result* result, ideasim_metrics* out) {
    if (int rc = require(result, "result"); rc) return rc;
    if (int rc = require(out, "metrics out-pointer"); rc) return rc;
    const OutcomeMetrics& m = result->result.metrics;
    out->most_supported = m.most_supported.bits;
    out->decision_true_utility = m.decision_true_utility;
    out->entropy_bits = m.entropy_bits;
    out->convergence = m.convergence;
    out->distinct_types = m.distinct_types;
    out->population_size = m.population_size;
    out->events = result->result.log.events.size();
    out->skipped_events = result->result.skipped_events;
    return IDEASIM_OK;
}

int ideasim_result_write(const ideasim_result* result, const char* out_dir) {
    if (int rc = require(result, "result"); rc) return rc;
    if (int rc = require(out_dir, "out_dir"); rc) return rc;
    return guarded([&]() { write_run_outputs(result->result, out_dir); });
}

int ideasim_result_write_dot(const ideasim_result* result, const char* path) {
    if (int rc = require(result, "result"); rc) return rc;
    if (int rc = require(path, "path"); rc) return rc;
    return guarded([&]() {
        const GenealogyDag dag = GenealogyDag::build(result->result.log);
        write_text_file(path, dag.to_dot());
    });
}

int ideasim_sweep(const ideasim_config* base, const double* nu_values, size_t nu_count,
                  const double* beta_values, size_t beta_count, int replicates, int jobs,
                  const char* out_dir) {
    if (int rc = require(base, "config"); rc) return rc;
    if (int rc = require(out_dir, "out_dir"); rc) return rc;
    return guarded([&]() {
        SweepSpec spec;
        spec.base = base->cfg;
        spec.replicates = replicates;
        if (nu_values) spec.nu_values.assign(nu_values, nu_values + nu_count);
        if (beta_values) spec.beta_values.assign(beta_values, beta_values + beta_count);
        const ExperimentResult result = run_sweep(spec, jobs);
        write_sweep_outputs(spec, result, out_dir);
    });
}

int ideasim_groups(const ideasim_config* base, const char* groups, int replicates, int jobs,
                   const char* out_dir) {
    if (int rc = require(base, "config"); rc) return rc;
    if (int rc = require(out_dir, "out_dir"); rc) return rc;
    return guarded([&]() {
        std::vector<std::string> labels;
        if (groups && *groups) {
            labels = split(groups, ',');
        } else {
            labels = group_labels();
        }
        const ExperimentResult result =
            run_group_comparison(labels, replicates, base->cfg, jobs);
        write_groups_outputs(labels, replicates, base->cfg, result, out_dir);
    });
}

int ideasim_oracle(const ideasim_config* cfg, const char* out_dir) {
    if (int rc = require(cfg, "config"); rc) return rc;
    if (int rc = require(out_dir, "out_dir"); rc) return rc;
    return guarded([&]() { write_oracle_outputs(cfg->cfg, out_dir); });
}

int ideasim_genealogy(const char* log_path, const char* out_dir) {
    if (int rc = require(log_path, "log_path"); rc) return rc;
    if (int rc = require(out_dir, "out_dir"); rc) return rc;
    return guarded([&]() { write_genealogy_outputs(log_path, out_dir); });
}

}  // extern "C"
