#pragma once

#include <memory>
#include <vector>

#include "core/config.hpp"
#include "core/genealogy.hpp"
#include "core/metrics.hpp"

namespace ideasim {

// Seed roles used in derive_seed(master_seed, role, index):
//   "landscape"  true landscape generation
//   "bias"       master landscape distortion
//   "agent"      agent j's utility-noise key (index = j, 0-based)
//   "init"       initial population sampling
//   "run"        the run loop (operator choice, operator randomness, ties)
// Harness-level roles ("sweep", "groups", "trend") are derived the same way.

struct SimulationState {
    SimulationConfig config;
    std::shared_ptr<const UtilityLandscape> true_landscape;
    std::shared_ptr<const UtilityLandscape> master_landscape;
    std::vector<IndividualUtility> agent_views;       // one per agent, index 0-based
    std::vector<OperatorWeights> agent_weights;       // per-agent; presets fill uniformly
    Population population;
    std::vector<IdeaInstance> initial;
    Rng run_rng{0};
};

struct SimulationResult {
    SimulationConfig config;
    std::shared_ptr<const UtilityLandscape> true_landscape;
    std::shared_ptr<const UtilityLandscape> master_landscape;
    Population final_population;
    EventLog log;
    OutcomeMetrics metrics;
    std::uint64_t skipped_events = 0;
};

std::pair<std::shared_ptr<const UtilityLandscape>, std::shared_ptr<const UtilityLandscape>>
build_landscapes(const SimulationConfig& cfg);

SimulationState init_simulation(const SimulationConfig& cfg);

// Full rotation schedule: for t in 1..T, agents 1..N act in fixed order,
// each sampling one operator from its weights. Exactly N*T events, skipped
// subtractive turns included.
SimulationResult run_simulation(SimulationState state);
SimulationResult run_simulation(const SimulationConfig& cfg);

OperatorKind sample_operator(const OperatorWeights& weights, Rng& rng);

}  // namespace ideasim
