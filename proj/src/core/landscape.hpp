#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/idea.hpp"
#include "core/rng.hpp"

namespace ideasim {

struct RepresentativePoint {
    Idea idea;
    double value = 0.0;
};

// Utility function over the full M-bit problem space, defined by n anchor
// points and inverse-squared-Hamming-distance interpolation everywhere else.
// Immutable after construction; safe to share across threads.
class UtilityLandscape {
public:
    // n pairwise-distinct anchors sampled uniformly; anchor 0 gets value 1,
    // anchor 1 gets value 0, the rest are uniform in (0,1).
    static UtilityLandscape generate(int aspects, int representatives, Rng& rng);

    static UtilityLandscape from_points(int aspects, std::vector<RepresentativePoint> points);

    double evaluate(Idea v) const;

    int aspects() const { return aspects_; }
    const std::vector<RepresentativePoint>& representatives() const { return reps_; }

    // One line per anchor, preceded by "M=<int> n=<int>"; values carry 17
    // significant digits so the round trip is bit-exact.
    void serialize(std::ostream& out) const;
    std::string serialize() const;
    static UtilityLandscape deserialize(std::istream& in);
    static UtilityLandscape deserialize_string(const std::string& text);

private:
    UtilityLandscape() = default;

    int aspects_ = 0;
    std::vector<RepresentativePoint> reps_;
    std::unordered_map<std::uint64_t, double> anchor_values_;  // exact-match lookup
};

// Distorted copy of `truth`: each anchor idea's bits flip with probability
// min(0.25*beta, 1) (resampled on collision with an already-placed anchor),
// each anchor value gets uniform noise in [-beta, beta], and values are then
// min-max rescaled to [0, 1]. `truth` itself is untouched.
UtilityLandscape apply_bias(const UtilityLandscape& truth, double beta, Rng& rng);

// Agent-side noisy view of a master landscape. The value for idea v is drawn
// uniformly from [max(U(v)-nu,0), min(U(v)+nu,1)] as a pure function of
// (agent_seed, v), so the whole function exists without being tabulated.
class IndividualUtility {
public:
    IndividualUtility(const UtilityLandscape& master, double heterogeneity,
                      std::uint64_t agent_seed);

    double evaluate(Idea v) const;

    int aspects() const { return master_->aspects(); }
    double heterogeneity() const { return nu_; }
    std::uint64_t agent_seed() const { return agent_seed_; }

private:
    const UtilityLandscape* master_;
    double nu_;
    std::uint64_t agent_seed_;
};

struct LandscapeTable {
    std::vector<double> values;  // indexed by encoding, size 2^M
    std::uint64_t argmax = 0;    // ties -> smallest encoding
    std::uint64_t argmin = 0;
};

inline constexpr int kDefaultEnumerationCap = 20;

// Brute-force evaluation of all 2^M ideas; refuses M above `aspect_cap`.
LandscapeTable enumerate_landscape(const UtilityLandscape& landscape,
                                   int aspect_cap = kDefaultEnumerationCap);

}  // namespace ideasim
