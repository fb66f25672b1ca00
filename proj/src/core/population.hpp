#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "core/error.hpp"
#include "core/idea.hpp"
#include "core/rng.hpp"

namespace ideasim {

// One copy of an idea under discussion. Copies are first-class: popularity
// is the number of instances sharing an encoding.
struct IdeaInstance {
    std::uint64_t id = 0;  // unique within a run, never reused
    Idea idea;
};

class Population {
public:
    Population() = default;
    explicit Population(std::uint64_t first_id) : next_id_(first_id) {}

    std::size_t size() const { return instances_.size(); }
    bool empty() const { return instances_.empty(); }
    const std::vector<IdeaInstance>& instances() const { return instances_; }
    const IdeaInstance& at(std::size_t index) const { return instances_[index]; }

    std::uint64_t add(Idea idea) {
        const std::uint64_t id = next_id_++;
        instances_.push_back({id, idea});
        return id;
    }

    IdeaInstance remove_at(std::size_t index) {
        if (index >= instances_.size()) throw ConfigError("population index out of range");
        const IdeaInstance removed = instances_[index];
        instances_.erase(instances_.begin() + static_cast<std::ptrdiff_t>(index));
        return removed;
    }

    // min(count, size) distinct positions, uniform without replacement
    // (partial Fisher-Yates over the index range).
    std::vector<std::size_t> sample_indices(std::size_t count, Rng& rng) const {
        const std::size_t n = instances_.size();
        const std::size_t take = count < n ? count : n;
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = i;
        for (std::size_t i = 0; i < take; ++i) {
            const std::size_t j = i + rng.index(n - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(take);
        return pool;
    }

    // Instance count per encoding, ordered by encoding.
    std::map<std::uint64_t, std::size_t> type_counts() const {
        std::map<std::uint64_t, std::size_t> counts;
        for (const auto& inst : instances_) ++counts[inst.idea.bits];
        return counts;
    }

    std::uint64_t next_instance_id() const { return next_id_; }

private:
    std::vector<IdeaInstance> instances_;
    std::uint64_t next_id_ = 0;
};

}  // namespace ideasim
