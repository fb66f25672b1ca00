#pragma once

#include <cstdint>

#include "core/landscape.hpp"
#include "core/population.hpp"

namespace ideasim {

// Outcome measures on a final population: what the group decided (most
// supported idea, scored on the TRUE landscape) and how much it agreed
// (entropy / convergence).
struct OutcomeMetrics {
    Idea most_supported;
    double decision_true_utility = 0.0;
    double entropy_bits = 0.0;
    double convergence = 0.0;
    std::uint64_t distinct_types = 0;
    std::uint64_t population_size = 0;
};

// Shannon entropy of the population's type distribution, in bits.
double entropy(const Population& pop);

// (M - H) / M; 1 at full consensus, 0 at maximal diversity.
double convergence(const Population& pop, int aspects);

// Encoding with the highest instance count; ties break toward the smallest
// encoding (deterministic and utility-blind).
Idea most_supported(const Population& pop);

// True utility of the group decision. Always the true landscape: bias never
// touches the discussion dynamics, only this final score.
double decision_quality(const Population& pop, const UtilityLandscape& true_landscape);

OutcomeMetrics compute_metrics(const Population& pop, const UtilityLandscape& true_landscape);

}  // namespace ideasim
