#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "core/error.hpp"
#include "core/landscape.hpp"

using namespace ideasim;

namespace {

// Independent inverse-squared-Hamming interpolation, coded separately from
// the engine (long double accumulation, its own popcount loop). Test oracle.
double oracle_eval(const std::vector<RepresentativePoint>& anchors, std::uint64_t enc) {
    for (const auto& a : anchors)
        if (a.idea.bits == enc) return a.value;
    long double num = 0.0L;
    long double den = 0.0L;
    for (const auto& a : anchors) {
        std::uint64_t diff = a.idea.bits ^ enc;
        int d = 0;
        while (diff) {
            d += static_cast<int>(diff & 1);
            diff >>= 1;
        }
        const long double w = 1.0L / (static_cast<long double>(d) * d);
        num += static_cast<long double>(a.value) * w;
        den += w;
    }
    return static_cast<double>(num / den);
}

}  // namespace

TEST_CASE("generation covers the full space when n equals 2^M") {
    Rng rng(7);
    const auto ls = UtilityLandscape::generate(1, 2, rng);
    std::set<std::uint64_t> encodings;
    std::multiset<double> values;
    for (const auto& rp : ls.representatives()) {
        encodings.insert(rp.idea.bits);
        values.insert(rp.value);
    }
    CHECK(encodings == std::set<std::uint64_t>{0, 1});
    CHECK(values == std::multiset<double>{0.0, 1.0});
    // Every evaluation is an exact anchor match.
    for (const auto& rp : ls.representatives()) CHECK(ls.evaluate(rp.idea) == rp.value);
}

TEST_CASE("generation yields distinct anchors with exactly one 1.0 and one 0.0") {
    Rng rng(42);
    const auto ls = UtilityLandscape::generate(10, 20, rng);
    std::set<std::uint64_t> encodings;
    int ones = 0, zeros = 0;
    for (const auto& rp : ls.representatives()) {
        encodings.insert(rp.idea.bits);
        CHECK(rp.idea.bits < space_size(10));
        if (rp.value == 1.0) ++ones;
        if (rp.value == 0.0) ++zeros;
        CHECK(rp.value >= 0.0);
        CHECK(rp.value <= 1.0);
    }
    CHECK(encodings.size() == 20);
    CHECK(ones == 1);
    CHECK(zeros == 1);
}

TEST_CASE("generation rejects impossible representative counts") {
    Rng rng(1);
    CHECK_THROWS_AS(UtilityLandscape::generate(4, 20, rng), ConfigError);
    CHECK_THROWS_AS(UtilityLandscape::generate(4, 1, rng), ConfigError);
    CHECK_THROWS_AS(UtilityLandscape::generate(0, 2, rng), ConfigError);
}

TEST_CASE("evaluation returns stored anchor values exactly") {
    Rng rng(3);
    const auto ls = UtilityLandscape::generate(8, 30, rng);
    for (const auto& rp : ls.representatives()) CHECK(ls.evaluate(rp.idea) == rp.value);
}

TEST_CASE("hand-evaluated interpolation cases") {
    const auto ls = UtilityLandscape::from_points(
        3, {{Idea{0b000}, 1.0}, {Idea{0b111}, 0.0}});
    // D=1 from the 1.0 anchor, D=2 from the 0.0 anchor.
    CHECK(ls.evaluate(Idea{0b001}) == doctest::Approx(0.8).epsilon(1e-15));

    const auto equidistant = UtilityLandscape::from_points(
        3, {{Idea{0b000}, 1.0}, {Idea{0b011}, 0.0}});
    CHECK(equidistant.evaluate(Idea{0b010}) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("evaluation rejects encodings outside the space") {
    Rng rng(5);
    const auto ls = UtilityLandscape::generate(4, 8, rng);
    CHECK_THROWS_AS(ls.evaluate(Idea{16}), ConfigError);
}

TEST_CASE("interpolated values stay within the anchor range") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Rng rng(seed);
        const auto ls = UtilityLandscape::generate(6, 10, rng);
        double lo = 1.0, hi = 0.0;
        for (const auto& rp : ls.representatives()) {
            lo = std::min(lo, rp.value);
            hi = std::max(hi, rp.value);
        }
        for (std::uint64_t enc = 0; enc < space_size(6); ++enc) {
            const double v = ls.evaluate(Idea{enc});
            CHECK(v >= lo);
            CHECK(v <= hi);
        }
    }
}

TEST_CASE("engine agrees with the independently coded interpolation oracle") {
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        Rng rng(seed);
        const auto ls = UtilityLandscape::generate(6, 12, rng);
        for (std::uint64_t enc = 0; enc < space_size(6); ++enc)
            CHECK(ls.evaluate(Idea{enc}) ==
                  doctest::Approx(oracle_eval(ls.representatives(), enc)).epsilon(1e-12));
    }
}

TEST_CASE("zero bias leaves the landscape untouched") {
    Rng rng(11);
    const auto truth = UtilityLandscape::generate(10, 20, rng);
    Rng bias_rng(12);
    const auto master = apply_bias(truth, 0.0, bias_rng);
    REQUIRE(master.representatives().size() == truth.representatives().size());
    for (std::size_t i = 0; i < truth.representatives().size(); ++i) {
        CHECK(master.representatives()[i].idea == truth.representatives()[i].idea);
        CHECK(master.representatives()[i].value == truth.representatives()[i].value);
    }
}

TEST_CASE("bias preserves representative-set structure") {
    Rng rng(13);
    const auto truth = UtilityLandscape::generate(10, 20, rng);
    const auto original = truth.serialize();

    for (const double beta : {0.2, 0.4, 0.8, 1.2}) {
        Rng bias_rng(static_cast<std::uint64_t>(beta * 1000));
        const auto master = apply_bias(truth, beta, bias_rng);

        std::set<std::uint64_t> encodings;
        double lo = 2.0, hi = -1.0;
        for (const auto& rp : master.representatives()) {
            encodings.insert(rp.idea.bits);
            lo = std::min(lo, rp.value);
            hi = std::max(hi, rp.value);
        }
        CHECK(encodings.size() == master.representatives().size());
        CHECK(lo == 0.0);
        CHECK(hi == 1.0);
    }
    CHECK(truth.serialize() == original);  // source object never mutated
}

TEST_CASE("bias rejects negative beta") {
    Rng rng(1);
    const auto truth = UtilityLandscape::generate(4, 4, rng);
    Rng bias_rng(2);
    CHECK_THROWS_AS(apply_bias(truth, -0.1, bias_rng), ConfigError);
}

TEST_CASE("individual utility with zero noise reproduces the master") {
    Rng rng(17);
    const auto master = UtilityLandscape::generate(8, 16, rng);
    const IndividualUtility view(master, 0.0, 99);
    for (std::uint64_t enc = 0; enc < space_size(8); enc += 7)
        CHECK(view.evaluate(Idea{enc}) == master.evaluate(Idea{enc}));
}

TEST_CASE("individual utility stays in the clamped noise envelope") {
    Rng rng(19);
    const auto master = UtilityLandscape::generate(10, 20, rng);
    const double nu = 0.3;
    Rng sample_rng(20);
    for (int i = 0; i < 10000; ++i) {
        const IndividualUtility view(master, nu, sample_rng.below(1000));
        const Idea v{sample_rng.below(space_size(10))};
        const double base = master.evaluate(v);
        const double u = view.evaluate(v);
        CHECK(u >= std::max(base - nu, 0.0));
        CHECK(u <= std::min(base + nu, 1.0));
    }
}

TEST_CASE("individual utility is a fixed function of agent and idea") {
    Rng rng(23);
    const auto master = UtilityLandscape::generate(10, 20, rng);
    const IndividualUtility view(master, 0.7, 4242);
    for (std::uint64_t enc = 0; enc < 64; ++enc) {
        const double first = view.evaluate(Idea{enc});
        CHECK(view.evaluate(Idea{enc}) == first);
        // A second view with the same seed is the same function.
        const IndividualUtility twin(master, 0.7, 4242);
        CHECK(twin.evaluate(Idea{enc}) == first);
    }
}

TEST_CASE("nu=1.2 around a mid-range value spans the whole unit interval") {
    // U(v)=0.5, nu=1.2: the clamped envelope is exactly [0,1].
    const auto master = UtilityLandscape::from_points(
        3, {{Idea{0b000}, 1.0}, {Idea{0b011}, 0.0}});
    const Idea v{0b010};  // equidistant from both anchors
    REQUIRE(master.evaluate(v) == 0.5);
    double lo = 1.0, hi = 0.0;
    for (std::uint64_t agent = 0; agent < 4000; ++agent) {
        const IndividualUtility view(master, 1.2, agent);
        const double u = view.evaluate(v);
        CHECK(u >= 0.0);
        CHECK(u <= 1.0);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    CHECK(lo < 0.05);
    CHECK(hi > 0.95);
}

TEST_CASE("mean divergence from the master grows with nu") {
    Rng rng(29);
    const auto master = UtilityLandscape::generate(10, 20, rng);
    std::vector<double> means;
    for (const double nu : {0.0, 0.4, 0.8, 1.2}) {
        Rng sample_rng(31);
        double total = 0.0;
        const int samples = 10000;
        for (int i = 0; i < samples; ++i) {
            const IndividualUtility view(master, nu, sample_rng.below(100));
            const Idea v{sample_rng.below(space_size(10))};
            total += std::abs(view.evaluate(v) - master.evaluate(v));
        }
        means.push_back(total / samples);
    }
    for (std::size_t i = 1; i < means.size(); ++i) CHECK(means[i] >= means[i - 1] - 0.01);
}

TEST_CASE("enumeration matches pointwise evaluation and caps M") {
    Rng rng(37);
    const auto ls = UtilityLandscape::generate(4, 6, rng);
    const auto table = enumerate_landscape(ls);
    REQUIRE(table.values.size() == 16);
    for (std::uint64_t enc = 0; enc < 16; ++enc) {
        CHECK(table.values[enc] == ls.evaluate(Idea{enc}));
        CHECK(table.values[enc] >= 0.0);
        CHECK(table.values[enc] <= 1.0);
    }
    CHECK(table.values[table.argmax] == 1.0);
    CHECK(table.values[table.argmin] == 0.0);
    CHECK_THROWS_AS(enumerate_landscape(ls, 3), LimitError);
}

TEST_CASE("enumeration breaks argmax ties toward the smallest encoding") {
    const auto ls = UtilityLandscape::from_points(
        2, {{Idea{1}, 1.0}, {Idea{2}, 1.0}, {Idea{3}, 0.0}});
    const auto table = enumerate_landscape(ls);
    CHECK(table.values[1] == 1.0);
    CHECK(table.values[2] == 1.0);
    CHECK(table.argmax == 1);
}

TEST_CASE("serialization round-trips bit-exactly") {
    Rng rng(41);
    const auto ls = UtilityLandscape::generate(10, 20, rng);
    const std::string text = ls.serialize();
    const auto parsed = UtilityLandscape::deserialize_string(text);
    CHECK(parsed.serialize() == text);
    REQUIRE(parsed.representatives().size() == ls.representatives().size());
    for (std::size_t i = 0; i < ls.representatives().size(); ++i) {
        CHECK(parsed.representatives()[i].idea == ls.representatives()[i].idea);
        CHECK(parsed.representatives()[i].value == ls.representatives()[i].value);
    }
}

TEST_CASE("deserialization reports malformed input") {
    CHECK_THROWS_AS(UtilityLandscape::deserialize_string("garbage"), ParseError);
    CHECK_THROWS_AS(UtilityLandscape::deserialize_string("M=3 n=2\n0 1.0\n"), ParseError);
    CHECK_THROWS_AS(UtilityLandscape::deserialize_string("M=3 n=1\n0 1.0\n"), ConfigError);
}
