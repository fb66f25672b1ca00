#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/operators.hpp"
#include "core/population.hpp"

namespace ideasim {

// One time-stamped operator application, the unit of the run log.
struct EvolutionaryEvent {
    std::uint64_t step = 0;  // global action index, 1..N*T
    int iteration = 0;       // t, 1-based
    int agent = 0;           // 1-based; step s is acted by ((s-1) mod N) + 1
    OperatorKind op = OperatorKind::Replication;
    std::vector<std::uint64_t> parents;
    std::optional<std::uint64_t> child;
    std::optional<std::uint64_t> removed;
    bool skipped = false;
    std::optional<std::uint64_t> child_encoding;

    friend bool operator==(const EvolutionaryEvent&, const EvolutionaryEvent&) = default;
};

struct EventLog {
    std::vector<IdeaInstance> initial;  // the shared starting population
    std::vector<EvolutionaryEvent> events;
};

inline constexpr const char* kEventLogHeader =
    "step,iteration,agent,operator,parents,child,removed,skipped,child_encoding";

// Line-delimited records under a fixed header; `preamble` lines are embedded
// as '# ' comments (provenance), and the initial population is carried in a
// '# initial=' comment so genealogies can be rebuilt from the file alone.
std::string export_log(const EventLog& log, const std::string& preamble = "");
EventLog parse_log(const std::string& text);
EventLog load_log_file(const std::string& path);

struct GenealogyNode {
    std::uint64_t id = 0;
    std::uint64_t encoding = 0;
    std::uint64_t birth_step = 0;  // 0 for initial instances
    std::optional<std::uint64_t> death_step;
    std::vector<std::uint64_t> children;
    int in_degree = 0;
};

// Idea ancestry as a DAG: one node per instance ever alive, one edge per
// (parent, child) pair. Removed instances stay in the graph; removal only
// annotates the death step.
class GenealogyDag {
public:
    static GenealogyDag build(const EventLog& log);

    const std::vector<GenealogyNode>& nodes() const { return nodes_; }
    const GenealogyNode& node(std::uint64_t id) const;
    bool contains(std::uint64_t id) const { return index_.count(id) != 0; }
    std::size_t edge_count() const { return edges_; }

    std::string to_dot() const;

private:
    std::vector<GenealogyNode> nodes_;  // in creation order (birth step order)
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::size_t edges_ = 0;
};

struct GenealogyStats {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t roots = 0;           // in-degree 0: initial + random generation
    std::size_t max_depth = 0;       // longest path, in edges
    double branching_ratio = 0.0;    // of non-leaf nodes, fraction with out-degree >= 2
};

GenealogyStats genealogy_stats(const GenealogyDag& dag);

std::string format_stats(const GenealogyStats& stats);

}  // namespace ideasim
