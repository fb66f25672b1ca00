#include "core/simulation.hpp"

namespace ideasim {

std::pair<std::shared_ptr<const UtilityLandscape>, std::shared_ptr<const UtilityLandscape>>
build_landscapes(const SimulationConfig& cfg) {
    Rng landscape_rng(derive_seed(cfg.master_seed, "landscape"));
    auto truth = std::make_shared<const UtilityLandscape>(
        UtilityLandscape::generate(cfg.aspects, cfg.representatives, landscape_rng));

    Rng bias_rng(derive_seed(cfg.master_seed, "bias"));
    auto master =
        std::make_shared<const UtilityLandscape>(apply_bias(*truth, cfg.bias, bias_rng));
    return {std::move(truth), std::move(master)};
}

SimulationState init_simulation(const SimulationConfig& cfg) {
    cfg.validate();

    SimulationState state;
    state.config = cfg;
    std::tie(state.true_landscape, state.master_landscape) = build_landscapes(cfg);

    state.agent_views.reserve(cfg.agents);
    state.agent_weights.reserve(cfg.agents);
    for (int j = 0; j < cfg.agents; ++j) {
        state.agent_views.emplace_back(*state.master_landscape, cfg.heterogeneity,
                                       derive_seed(cfg.master_seed, "agent", j));
        state.agent_weights.push_back(cfg.weights);
    }

    Rng init_rng(derive_seed(cfg.master_seed, "init"));
    for (int i = 0; i < cfg.initial_ideas; ++i)
        state.population.add(Idea{init_rng.below(space_size(cfg.aspects))});
    state.initial = state.population.instances();

    state.run_rng = Rng(derive_seed(cfg.master_seed, "run"));
    return state;
}

OperatorKind sample_operator(const OperatorWeights& weights, Rng& rng) {
    const double u = rng.u01();
    double cumulative = 0.0;
    for (int i = 0; i < kOperatorCount; ++i) {
        cumulative += weights[i];
        if (u < cumulative) return static_cast<OperatorKind>(i);
    }
    return static_cast<OperatorKind>(kOperatorCount - 1);  // fp slack at the top end
}

SimulationResult run_simulation(SimulationState state) {
    const SimulationConfig& cfg = state.config;

    SimulationResult result;
    result.config = cfg;
    result.true_landscape = state.true_landscape;
    result.master_landscape = state.master_landscape;
    result.log.initial = state.initial;
    result.log.events.reserve(static_cast<std::size_t>(cfg.agents) * cfg.iterations);

    std::uint64_t step = 0;
    for (int t = 1; t <= cfg.iterations; ++t) {
        for (int j = 0; j < cfg.agents; ++j) {
            ++step;
            const OperatorKind kind = sample_operator(state.agent_weights[j], state.run_rng);
            const OpOutcome outcome = apply_operator(kind, state.population,
                                                     state.agent_views[j], cfg.params,
                                                     cfg.aspects, state.run_rng);
            if (outcome.skipped) ++result.skipped_events;

            EvolutionaryEvent ev;
            ev.step = step;
            ev.iteration = t;
            ev.agent = j + 1;
            ev.op = outcome.kind;
            ev.parents = outcome.parents;
            ev.child = outcome.child;
            ev.removed = outcome.removed;
            ev.skipped = outcome.skipped;
            ev.child_encoding = outcome.child_encoding;
            result.log.events.push_back(std::move(ev));
        }
    }

    result.metrics = compute_metrics(state.population, *state.true_landscape);
    result.final_population = std::move(state.population);
    return result;
}

SimulationResult run_simulation(const SimulationConfig& cfg) {
    return run_simulation(init_simulation(cfg));
}

}  // namespace ideasim
