#include "core/config.hpp"

#include <cmath>
#include <sstream>

#include "core/error.hpp"
#include "core/textio.hpp"

namespace ideasim {

namespace {

constexpr double kSingleDominant = 0.95;
constexpr double kPairDominant = 0.48;
constexpr double kResidual = 0.01;

OperatorWeights single_preset(OperatorKind op) {
    OperatorWeights w;
    w.fill(kResidual);
    w[static_cast<int>(op)] = kSingleDominant;
    return w;
}

OperatorWeights pair_preset(OperatorKind a, OperatorKind b) {
    OperatorWeights w;
    w.fill(kResidual);
    w[static_cast<int>(a)] = kPairDominant;
    w[static_cast<int>(b)] = kPairDominant;
    return w;
}

}  // namespace

const std::vector<std::string>& group_labels() {
    static const std::vector<std::string> labels = {"G0", "G1", "G2", "G3",
                                                    "G4", "G5", "G6", "G7"};
    return labels;
}

OperatorWeights preset_weights(const std::string& label) {
    if (label == "G0") {
        OperatorWeights w;
        w.fill(1.0 / kOperatorCount);
        return w;
    }
    if (label == "G1")
        return pair_preset(OperatorKind::Replication, OperatorKind::SubtractiveSelection);
    if (label == "G2")
        return pair_preset(OperatorKind::SubtractiveSelection, OperatorKind::RandomPointMutation);
    if (label == "G3")
        return pair_preset(OperatorKind::Replication, OperatorKind::Recombination);
    if (label == "G4") return single_preset(OperatorKind::Recombination);
    if (label == "G5")
        return pair_preset(OperatorKind::Recombination, OperatorKind::IntelligentPointMutation);
    if (label == "G6")
        return pair_preset(OperatorKind::IntelligentPointMutation, OperatorKind::RandomGeneration);
    if (label == "G7") return single_preset(OperatorKind::RandomGeneration);
    throw ConfigError("group: unknown preset '" + label + "' (expected G0..G7)");
}

void SimulationConfig::validate() const {
    if (aspects < 1 || aspects > kMaxAspects)
        throw ConfigError("M: must satisfy 1 <= M <= " + std::to_string(kMaxAspects));
    if (representatives < 2) throw ConfigError("n: must be >= 2");
    if (static_cast<std::uint64_t>(representatives) > space_size(aspects))
        throw ConfigError("n: must be <= 2^M = " + std::to_string(space_size(aspects)));
    if (agents < 1) throw ConfigError("N: must be >= 1");
    if (initial_ideas < 1) throw ConfigError("k: must be >= 1");
    if (iterations < 0) throw ConfigError("T: must be >= 0");
    if (heterogeneity < 0.0) throw ConfigError("nu: must be >= 0");
    if (bias < 0.0) throw ConfigError("beta: must be >= 0");
    if (enumeration_cap < 1) throw ConfigError("enum_cap: must be >= 1");
    params.validate();

    double total = 0.0;
    for (const double w : weights) {
        if (w < 0.0) throw ConfigError("weights: must be >= 0");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) throw ConfigError("weights: must sum to 1 within 1e-9");
}

std::string SimulationConfig::serialize() const {
    std::ostringstream out;
    out << "M=" << aspects << "\n";
    out << "n=" << representatives << "\n";
    out << "N=" << agents << "\n";
    out << "k=" << initial_ideas << "\n";
    out << "T=" << iterations << "\n";
    out << "nu=" << format_g17(heterogeneity) << "\n";
    out << "beta=" << format_g17(bias) << "\n";
    out << "rp=" << params.preferential_sample << "\n";
    out << "pm=" << format_g17(params.mutation_rate) << "\n";
    out << "rm=" << params.intelligent_offspring << "\n";
    out << "ps=" << format_g17(params.crossover_swap) << "\n";
    out << "seed=" << master_seed << "\n";
    // weights precede group: on re-parse a preset label re-derives its own
    // weights, while group=custom leaves the explicit weights in place.
    out << "weights=";
    for (int i = 0; i < kOperatorCount; ++i) out << (i ? "," : "") << format_g17(weights[i]);
    out << "\n";
    out << "group=" << group << "\n";
    out << "enum_cap=" << enumeration_cap << "\n";
    return out.str();
}

void SimulationConfig::set(const std::string& key, const std::string& value) {
    auto as_int = [&](const char* what) {
        return static_cast<int>(parse_i64(value, what));
    };
    if (key == "M") {
        aspects = as_int("M");
    } else if (key == "n") {
        representatives = as_int("n");
    } else if (key == "N") {
        agents = as_int("N");
    } else if (key == "k") {
        initial_ideas = as_int("k");
    } else if (key == "T") {
        iterations = as_int("T");
    } else if (key == "nu") {
        heterogeneity = parse_double(value, "nu");
    } else if (key == "beta") {
        bias = parse_double(value, "beta");
    } else if (key == "rp") {
        params.preferential_sample = as_int("rp");
    } else if (key == "pm") {
        params.mutation_rate = parse_double(value, "pm");
    } else if (key == "rm") {
        params.intelligent_offspring = as_int("rm");
    } else if (key == "ps") {
        params.crossover_swap = parse_double(value, "ps");
    } else if (key == "seed") {
        master_seed = parse_u64(value, "seed");
    } else if (key == "group") {
        group = value;
        if (value != "custom") weights = preset_weights(value);
    } else if (key == "weights") {
        const auto parts = split(value, ',');
        if (parts.size() != kOperatorCount)
            throw ConfigError("weights: expected " + std::to_string(kOperatorCount) + " values");
        for (int i = 0; i < kOperatorCount; ++i)
            weights[i] = parse_double(parts[i], "weights");
        group = "custom";
    } else if (key == "enum_cap") {
        enumeration_cap = as_int("enum_cap");
    } else {
        throw ConfigError(key + ": unknown configuration key");
    }
}

SimulationConfig SimulationConfig::parse(const std::string& text) {
    SimulationConfig cfg;
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
        cfg.set(line.substr(0, eq), line.substr(eq + 1));
    }
    return cfg;
}

SimulationConfig SimulationConfig::load_file(const std::string& path) {
    return parse(read_text_file(path));
}

}  // namespace ideasim
