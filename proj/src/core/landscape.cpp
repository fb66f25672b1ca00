#include "core/landscape.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "core/error.hpp"
#include "core/textio.hpp"

namespace ideasim {

namespace {

void check_dimensions(int aspects, int representatives) {
    if (aspects < 1 || aspects > kMaxAspects)
        throw ConfigError("M: must satisfy 1 <= M <= " + std::to_string(kMaxAspects));
    if (representatives < 2)
        throw ConfigError("n: need at least 2 representatives to anchor both extremes");
    if (static_cast<std::uint64_t>(representatives) > space_size(aspects))
        throw ConfigError("n: cannot place " + std::to_string(representatives) +
                          " distinct ideas in a space of " + std::to_string(space_size(aspects)));
}

Idea flip_bits(Idea base, int aspects, double per_bit_probability, Rng& rng) {
    std::uint64_t bits = base.bits;
    for (int i = 0; i < aspects; ++i) {
        if (rng.bernoulli(per_bit_probability)) bits ^= std::uint64_t{1} << i;
    }
    return Idea{bits};
}

}  // namespace

UtilityLandscape UtilityLandscape::generate(int aspects, int representatives, Rng& rng) {
    check_dimensions(aspects, representatives);

    UtilityLandscape ls;
    ls.aspects_ = aspects;
    ls.reps_.reserve(representatives);

    std::unordered_set<std::uint64_t> used;
    for (int i = 0; i < representatives; ++i) {
        std::uint64_t enc;
        do {
            enc = rng.below(space_size(aspects));
        } while (!used.insert(enc).second);
        ls.reps_.push_back({Idea{enc}, 0.0});
    }
    ls.reps_[0].value = 1.0;
    ls.reps_[1].value = 0.0;
    for (int i = 2; i < representatives; ++i) {
        double v;
        do {
            v = rng.u01();
        } while (v == 0.0);
        ls.reps_[i].value = v;
    }

    for (const auto& rp : ls.reps_) ls.anchor_values_.emplace(rp.idea.bits, rp.value);
    return ls;
}

UtilityLandscape UtilityLandscape::from_points(int aspects,
                                               std::vector<RepresentativePoint> points) {
    check_dimensions(aspects, static_cast<int>(points.size()));
    UtilityLandscape ls;
    ls.aspects_ = aspects;
    ls.reps_ = std::move(points);
    for (const auto& rp : ls.reps_) {
        if (rp.idea.bits >= space_size(aspects))
            throw ConfigError("representative encoding out of range for M=" +
                              std::to_string(aspects));
        if (!ls.anchor_values_.emplace(rp.idea.bits, rp.value).second)
            throw ConfigError("representative ideas must be pairwise distinct");
    }
    return ls;
}

double UtilityLandscape::evaluate(Idea v) const {
    if (v.bits >= space_size(aspects_))
        throw ConfigError("idea encoding out of range for M=" + std::to_string(aspects_));

    // Exact-match branch: the interpolation weight diverges at distance 0.
    if (auto it = anchor_values_.find(v.bits); it != anchor_values_.end()) return it->second;

    double weighted = 0.0;
    double total = 0.0;
    for (const auto& rp : reps_) {
        const double d = static_cast<double>(hamming(rp.idea, v));
        const double w = 1.0 / (d * d);
        weighted += rp.value * w;
        total += w;
    }
    return weighted / total;
}

void UtilityLandscape::serialize(std::ostream& out) const {
    out << "M=" << aspects_ << " n=" << reps_.size() << "\n";
    for (const auto& rp : reps_) out << rp.idea.bits << " " << format_g17(rp.value) << "\n";
}

std::string UtilityLandscape::serialize() const {
    std::ostringstream out;
    serialize(out);
    return out.str();
}

UtilityLandscape UtilityLandscape::deserialize(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw ParseError("landscape line 1: missing header");
    int aspects = 0;
    std::size_t count = 0;
    if (std::sscanf(header.c_str(), "M=%d n=%zu", &aspects, &count) != 2)
        throw ParseError("landscape line 1: expected 'M=<int> n=<int>', got '" + header + "'");

    std::vector<RepresentativePoint> points;
    points.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::string line;
        if (!std::getline(in, line))
            throw ParseError("landscape line " + std::to_string(i + 2) + ": unexpected end of input");
        const auto fields = split(line, ' ');
        if (fields.size() != 2)
            throw ParseError("landscape line " + std::to_string(i + 2) +
                             ": expected '<encoding> <value>'");
        points.push_back({Idea{parse_u64(fields[0], "encoding")},
                          parse_double(fields[1], "value")});
    }
    return from_points(aspects, std::move(points));
}

UtilityLandscape UtilityLandscape::deserialize_string(const std::string& text) {
    std::istringstream in(text);
    return deserialize(in);
}

UtilityLandscape apply_bias(const UtilityLandscape& truth, double beta, Rng& rng) {
    if (beta < 0.0) throw ConfigError("beta: must be >= 0");
    if (beta == 0.0) return truth;

    const int aspects = truth.aspects();
    const double flip_p = std::min(0.25 * beta, 1.0);
    std::vector<RepresentativePoint> biased;
    biased.reserve(truth.representatives().size());
    std::unordered_set<std::uint64_t> placed;

    for (const auto& rp : truth.representatives()) {
        Idea moved = flip_bits(rp.idea, aspects, flip_p, rng);
        int attempts = 0;
        while (placed.count(moved.bits)) {
            // Collision with an already-placed anchor: resample this idea's
            // flips. The uniform fallback is unreachable below n = 2^M but
            // guarantees termination at that corner.
            if (++attempts > 65536) {
                std::uint64_t enc;
                do {
                    enc = rng.below(space_size(aspects));
                } while (placed.count(enc));
                moved = Idea{enc};
                break;
            }
            moved = flip_bits(rp.idea, aspects, flip_p, rng);
        }
        placed.insert(moved.bits);
        const double noise = (2.0 * rng.u01() - 1.0) * beta;
        biased.push_back({moved, rp.value + noise});
    }

    const auto [lo_it, hi_it] =
        std::minmax_element(biased.begin(), biased.end(),
                            [](const auto& a, const auto& b) { return a.value < b.value; });
    const double lo = lo_it->value;
    const double hi = hi_it->value;
    if (lo == hi) {
        for (auto& rp : biased) rp.value = 0.5;
    } else {
        for (auto& rp : biased) rp.value = (rp.value - lo) / (hi - lo);
    }
    return UtilityLandscape::from_points(aspects, std::move(biased));
}

IndividualUtility::IndividualUtility(const UtilityLandscape& master, double heterogeneity,
                                     std::uint64_t agent_seed)
    : master_(&master), nu_(heterogeneity), agent_seed_(agent_seed) {
    if (heterogeneity < 0.0) throw ConfigError("nu: must be >= 0");
}

double IndividualUtility::evaluate(Idea v) const {
    const double base = master_->evaluate(v);
    if (nu_ == 0.0) return base;
    const double lo = std::max(base - nu_, 0.0);
    const double hi = std::min(base + nu_, 1.0);
    return lo + keyed_u01(agent_seed_, v.bits) * (hi - lo);
}

LandscapeTable enumerate_landscape(const UtilityLandscape& landscape, int aspect_cap) {
    if (landscape.aspects() > aspect_cap)
        throw LimitError("enumeration refused: M=" + std::to_string(landscape.aspects()) +
                         " exceeds cap " + std::to_string(aspect_cap));

    const std::uint64_t size = space_size(landscape.aspects());
    LandscapeTable table;
    table.values.resize(size);
    for (std::uint64_t enc = 0; enc < size; ++enc) {
        const double v = landscape.evaluate(Idea{enc});
        table.values[enc] = v;
        if (v > table.values[table.argmax]) table.argmax = enc;
        if (v < table.values[table.argmin]) table.argmin = enc;
    }
    return table;
}

}  // namespace ideasim
