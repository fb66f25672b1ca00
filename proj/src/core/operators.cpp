#include "core/operators.hpp"

#include <algorithm>

namespace ideasim {

namespace {

const std::array<std::string, kOperatorCount> kOperatorNames = {
    "Replication",         "RandomPointMutation",  "IntelligentPointMutation",
    "Recombination",       "SubtractiveSelection", "RandomGeneration",
};

Idea mutate_bits(Idea base, int aspects, double per_bit_probability, Rng& rng) {
    std::uint64_t bits = base.bits;
    for (int i = 0; i < aspects; ++i) {
        if (rng.bernoulli(per_bit_probability)) bits ^= std::uint64_t{1} << i;
    }
    return Idea{bits};
}

}  // namespace

const std::string& operator_name(OperatorKind kind) {
    return kOperatorNames[static_cast<int>(kind)];
}

std::optional<OperatorKind> operator_from_name(const std::string& name) {
    for (int i = 0; i < kOperatorCount; ++i) {
        if (kOperatorNames[i] == name) return static_cast<OperatorKind>(i);
    }
    return std::nullopt;
}

void OperatorParams::validate() const {
    if (preferential_sample < 1) throw ConfigError("rp: must be >= 1");
    if (mutation_rate < 0.0 || mutation_rate > 1.0) throw ConfigError("pm: must be in [0,1]");
    if (intelligent_offspring < 1) throw ConfigError("rm: must be >= 1");
    if (crossover_swap < 0.0 || crossover_swap > 1.0) throw ConfigError("ps: must be in [0,1]");
}

std::size_t preferential_pick(const Population& pop, const IndividualUtility& utility,
                              int sample_size, PickDirection direction, Rng& rng) {
    if (pop.empty()) throw ConfigError("preferential pick on an empty population");
    const auto sample = pop.sample_indices(static_cast<std::size_t>(sample_size), rng);

    std::vector<std::size_t> tied;
    double extreme = 0.0;
    for (const std::size_t idx : sample) {
        const double u = utility.evaluate(pop.at(idx).idea);
        const bool better = tied.empty() ||
                            (direction == PickDirection::Best ? u > extreme : u < extreme);
        if (better) {
            extreme = u;
            tied.assign(1, idx);
        } else if (u == extreme) {
            tied.push_back(idx);
        }
    }
    return tied.size() == 1 ? tied.front() : tied[rng.index(tied.size())];
}

OpOutcome op_replicate(Population& pop, const IndividualUtility& utility,
                       const OperatorParams& params, Rng& rng) {
    const std::size_t parent_idx =
        preferential_pick(pop, utility, params.preferential_sample, PickDirection::Best, rng);
    const IdeaInstance parent = pop.at(parent_idx);
    const std::uint64_t child = pop.add(parent.idea);
    return {OperatorKind::Replication, {parent.id}, child, std::nullopt, parent.idea.bits, false};
}

OpOutcome op_mutate_random(Population& pop, const IndividualUtility& utility,
                           const OperatorParams& params, Rng& rng) {
    const std::size_t parent_idx =
        preferential_pick(pop, utility, params.preferential_sample, PickDirection::Best, rng);
    const IdeaInstance parent = pop.at(parent_idx);
    const int aspects = utility.aspects();
    const Idea child_idea = mutate_bits(parent.idea, aspects, params.mutation_rate, rng);
    const std::uint64_t child = pop.add(child_idea);
    return {OperatorKind::RandomPointMutation, {parent.id}, child, std::nullopt,
            child_idea.bits, false};
}

OpOutcome op_mutate_intelligent(Population& pop, const IndividualUtility& utility,
                                const OperatorParams& params, Rng& rng) {
    const std::size_t parent_idx =
        preferential_pick(pop, utility, params.preferential_sample, PickDirection::Best, rng);
    const IdeaInstance parent = pop.at(parent_idx);
    const int aspects = utility.aspects();

    // The parent does not compete against its offspring; the best candidate
    // is added no matter how it compares to the parent.
    std::vector<Idea> tied;
    double best = 0.0;
    for (int i = 0; i < params.intelligent_offspring; ++i) {
        const Idea candidate = mutate_bits(parent.idea, aspects, params.mutation_rate, rng);
        const double u = utility.evaluate(candidate);
        if (tied.empty() || u > best) {
            best = u;
            tied.assign(1, candidate);
        } else if (u == best) {
            tied.push_back(candidate);
        }
    }
    const Idea chosen = tied.size() == 1 ? tied.front() : tied[rng.index(tied.size())];
    const std::uint64_t child = pop.add(chosen);
    return {OperatorKind::IntelligentPointMutation, {parent.id}, child, std::nullopt,
            chosen.bits, false};
}

OpOutcome op_recombine(Population& pop, const IndividualUtility& utility,
                       const OperatorParams& params, Rng& rng) {
    if (pop.size() < 2) {
        // Degenerate fallback: replicate the sole idea, still logged as
        // recombination with a single parent.
        const IdeaInstance parent = pop.at(0);
        const std::uint64_t child = pop.add(parent.idea);
        return {OperatorKind::Recombination, {parent.id}, child, std::nullopt,
                parent.idea.bits, false};
    }

    const std::size_t first_idx = rng.index(pop.size());
    const IdeaInstance first = pop.at(first_idx);

    // Preferential pick over the remaining instances: pick positions in a
    // shadow population that excludes first_idx, then map back.
    Population rest(0);
    for (std::size_t i = 0; i < pop.size(); ++i) {
        if (i != first_idx) rest.add(pop.at(i).idea);
    }
    const std::size_t rest_idx =
        preferential_pick(rest, utility, params.preferential_sample, PickDirection::Best, rng);
    const std::size_t second_idx = rest_idx < first_idx ? rest_idx : rest_idx + 1;
    const IdeaInstance second = pop.at(second_idx);

    // Aspect-wise exchange with probability p_s each.
    const int aspects = utility.aspects();
    std::uint64_t swap_mask = 0;
    for (int i = 0; i < aspects; ++i) {
        if (rng.bernoulli(params.crossover_swap)) swap_mask |= std::uint64_t{1} << i;
    }
    const std::uint64_t diff = (first.idea.bits ^ second.idea.bits) & swap_mask;
    const Idea offspring_a{first.idea.bits ^ diff};
    const Idea offspring_b{second.idea.bits ^ diff};

    const double ua = utility.evaluate(offspring_a);
    const double ub = utility.evaluate(offspring_b);
    Idea chosen;
    if (ua > ub) {
        chosen = offspring_a;
    } else if (ub > ua) {
        chosen = offspring_b;
    } else {
        chosen = rng.index(2) == 0 ? offspring_a : offspring_b;
    }
    const std::uint64_t child = pop.add(chosen);
    return {OperatorKind::Recombination, {first.id, second.id}, child, std::nullopt,
            chosen.bits, false};
}

OpOutcome op_subtract(Population& pop, const IndividualUtility& utility,
                      const OperatorParams& params, Rng& rng) {
    if (pop.size() < 2) {
        // Guard: a group must keep at least one idea to decide on.
        return {OperatorKind::SubtractiveSelection, {}, std::nullopt, std::nullopt,
                std::nullopt, true};
    }
    const std::size_t victim_idx =
        preferential_pick(pop, utility, params.preferential_sample, PickDirection::Worst, rng);
    const IdeaInstance removed = pop.remove_at(victim_idx);
    return {OperatorKind::SubtractiveSelection, {}, std::nullopt, removed.id,
            std::nullopt, false};
}

OpOutcome op_generate_random(Population& pop, int aspects, Rng& rng) {
    const Idea idea{rng.below(space_size(aspects))};
    const std::uint64_t child = pop.add(idea);
    return {OperatorKind::RandomGeneration, {}, child, std::nullopt, idea.bits, false};
}

OpOutcome apply_operator(OperatorKind kind, Population& pop, const IndividualUtility& utility,
                         const OperatorParams& params, int aspects, Rng& rng) {
    switch (kind) {
        case OperatorKind::Replication:
            return op_replicate(pop, utility, params, rng);
        case OperatorKind::RandomPointMutation:
            return op_mutate_random(pop, utility, params, rng);
        case OperatorKind::IntelligentPointMutation:
            return op_mutate_intelligent(pop, utility, params, rng);
        case OperatorKind::Recombination:
            return op_recombine(pop, utility, params, rng);
        case OperatorKind::SubtractiveSelection:
            return op_subtract(pop, utility, params, rng);
        case OperatorKind::RandomGeneration:
            return op_generate_random(pop, aspects, rng);
    }
    throw ConfigError("unknown operator kind");
}

}  // namespace ideasim
