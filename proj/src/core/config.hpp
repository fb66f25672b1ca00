#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "core/operators.hpp"

namespace ideasim {

using OperatorWeights = std::array<double, kOperatorCount>;

// Shared behavioral profiles G0..G7. G0 is the balanced team; single-operator
// presets give the designated operator 0.95 and 0.01 to each other; paired
// presets give 0.48 to each of the two and 0.01 to the rest.
const std::vector<std::string>& group_labels();
OperatorWeights preset_weights(const std::string& label);

struct SimulationConfig {
    int aspects = 13;          // M
    int representatives = 20;  // n
    int agents = 4;            // N
    int initial_ideas = 15;    // k
    int iterations = 150;      // T, full rotations
    double heterogeneity = 0.0;  // nu
    double bias = 0.0;           // beta
    OperatorParams params;
    std::uint64_t master_seed = 1;
    std::string group = "G0";
    OperatorWeights weights = preset_weights("G0");
    int enumeration_cap = kDefaultEnumerationCap;

    void validate() const;

    // Fixed-order key=value lines; the exact block every output embeds and
    // the config file format the CLI ingests.
    std::string serialize() const;

    void set(const std::string& key, const std::string& value);
    static SimulationConfig parse(const std::string& text);
    static SimulationConfig load_file(const std::string& path);
};

}  // namespace ideasim
