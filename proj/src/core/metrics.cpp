#include "core/metrics.hpp"

#include <cmath>

#include "core/error.hpp"

namespace ideasim {

double entropy(const Population& pop) {
    if (pop.empty()) throw ConfigError("entropy of an empty population");
    const auto counts = pop.type_counts();
    const double total = static_cast<double>(pop.size());
    double h = 0.0;
    for (const auto& [enc, count] : counts) {
        const double p = static_cast<double>(count) / total;
        h -= p * std::log2(p);
    }
    return h;
}

double convergence(const Population& pop, int aspects) {
    return (static_cast<double>(aspects) - entropy(pop)) / static_cast<double>(aspects);
}

Idea most_supported(const Population& pop) {
    if (pop.empty()) throw ConfigError("most_supported of an empty population");
    // type_counts is ordered by encoding, so a strict > keeps the smallest
    // encoding among ties.
    std::uint64_t best_enc = 0;
    std::size_t best_count = 0;
    for (const auto& [enc, count] : pop.type_counts()) {
        if (count > best_count) {
            best_count = count;
            best_enc = enc;
        }
    }
    return Idea{best_enc};
}

double decision_quality(const Population& pop, const UtilityLandscape& true_landscape) {
    return true_landscape.evaluate(most_supported(pop));
}

OutcomeMetrics compute_metrics(const Population& pop, const UtilityLandscape& true_landscape) {
    OutcomeMetrics m;
    m.most_supported = most_supported(pop);
    m.decision_true_utility = true_landscape.evaluate(m.most_supported);
    m.entropy_bits = entropy(pop);
    m.convergence = convergence(pop, true_landscape.aspects());
    m.distinct_types = pop.type_counts().size();
    m.population_size = pop.size();
    return m;
}

}  // namespace ideasim
