#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/landscape.hpp"
#include "core/population.hpp"

namespace ideasim {

enum class OperatorKind {
    Replication = 0,
    RandomPointMutation,
    IntelligentPointMutation,
    Recombination,
    SubtractiveSelection,
    RandomGeneration,
};

inline constexpr int kOperatorCount = 6;

const std::string& operator_name(OperatorKind kind);
std::optional<OperatorKind> operator_from_name(const std::string& name);

struct OperatorParams {
    int preferential_sample = 10;    // r_p
    double mutation_rate = 0.1;      // p_m, per bit
    int intelligent_offspring = 5;   // r_m
    double crossover_swap = 0.5;     // p_s, per aspect

    void validate() const;
};

enum class PickDirection { Best, Worst };

// Preferential search: sample min(r_p, size) distinct instances, rank by the
// acting agent's utility, return the position of the best (or worst). Ties
// break uniformly at random.
std::size_t preferential_pick(const Population& pop, const IndividualUtility& utility,
                              int sample_size, PickDirection direction, Rng& rng);

// What one operator application did; the simulation wraps this in a
// time-stamped event.
struct OpOutcome {
    OperatorKind kind;
    std::vector<std::uint64_t> parents;
    std::optional<std::uint64_t> child;
    std::optional<std::uint64_t> removed;
    std::optional<std::uint64_t> child_encoding;
    bool skipped = false;
};

OpOutcome op_replicate(Population& pop, const IndividualUtility& utility,
                       const OperatorParams& params, Rng& rng);
OpOutcome op_mutate_random(Population& pop, const IndividualUtility& utility,
                           const OperatorParams& params, Rng& rng);
OpOutcome op_mutate_intelligent(Population& pop, const IndividualUtility& utility,
                                const OperatorParams& params, Rng& rng);
// Falls back to replicating the sole instance when size == 1 (degenerate
// recombination, recognizable by its single parent).
OpOutcome op_recombine(Population& pop, const IndividualUtility& utility,
                       const OperatorParams& params, Rng& rng);
// No-op marked skipped when size == 1; the population never drops below 1.
OpOutcome op_subtract(Population& pop, const IndividualUtility& utility,
                      const OperatorParams& params, Rng& rng);
OpOutcome op_generate_random(Population& pop, int aspects, Rng& rng);

OpOutcome apply_operator(OperatorKind kind, Population& pop, const IndividualUtility& utility,
                         const OperatorParams& params, int aspects, Rng& rng);

}  // namespace ideasim
