#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "support.hpp"
#include "zhash/bpz.hpp"
#include "zhash/error.hpp"

using namespace zhash;
using zhash::test::random_keys;

namespace {

bool injective(const Bpz& ph, const std::vector<Key>& keys) {
    std::vector<std::uint64_t> v;
    for (Key x : keys) v.push_back(ph(x));
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end() &&
           (v.empty() || v.back() < 2 * ph.m());
}

}  // namespace

TEST_CASE("single key") {
    Prng prng(1);
    const std::vector<Key> s{555};
    const auto b = build_mphf(prng, s, MphfParams{});
    CHECK(b.attempts == 1);
    const auto h = b.ph.family().eval(555);
    const auto v = b.ph(555);
    CHECK((v == h[0] || v == b.ph.m() + h[1]));
    CHECK(std::none_of(b.ph.bit1().begin(), b.ph.bit1().end(), [](bool x) { return x; }));
    CHECK(std::none_of(b.ph.bit2().begin(), b.ph.bit2().end(), [](bool x) { return x; }));
}

TEST_CASE("successful builds are perfect and match the peel assignment") {
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        Prng prng = Prng(2).child(trial);
        auto keys = random_keys(prng, 1 + prng.below(5000));
        const double eps = trial % 2 == 0 ? 1.0 : 0.3;
        const auto b = build_mphf(prng, keys, MphfParams{eps, 0.5, 3, 64});
        CHECK(b.ph.m() == static_cast<std::uint64_t>(std::ceil((1 + eps) * keys.size() - 1e-9)));
        CHECK(injective(b.ph, keys));
        std::sort(keys.begin(), keys.end());
        REQUIRE(b.assignment.size() == keys.size());
        for (std::size_t i = 0; i < keys.size(); ++i) CHECK(b.ph(keys[i]) == b.assignment[i]);
    }
}

TEST_CASE("mean attempts at eps = 1") {
    double total = 0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
        Prng prng = Prng(3).child(t);
        const auto keys = random_keys(prng, 2000);
        total += build_mphf(prng, keys, MphfParams{}).attempts;
    }
    CHECK(total / trials <= 1.25);
}

TEST_CASE("all-zero bits always choose side 1") {
    Prng prng(4);
    const auto fam = draw_z(prng, ZParams{3, 2, 2, 10, 100});
    const Bpz ph(fam, std::vector<bool>(100, false), std::vector<bool>(100, false));
    for (Key x : random_keys(prng, 200)) CHECK(ph(x) == fam.eval_one(x, 0));
    std::vector<bool> ones(100, true);
    const Bpz flipped(fam, std::vector<bool>(100, false), ones);
    for (Key x : random_keys(prng, 200)) CHECK(flipped(x) == 100 + fam.eval_one(x, 1));
    CHECK_THROWS_AS(Bpz(fam, std::vector<bool>(99), ones), ParameterError);
}

TEST_CASE("build errors") {
    Prng prng(5);
    CHECK_THROWS_AS((void)build_mphf(prng, std::vector<Key>{}, MphfParams{}), ParameterError);
    CHECK_THROWS_AS((void)build_mphf(prng, std::vector<Key>{1, 2}, MphfParams{0.05, 0.5, 3, 64}),
                    ParameterError);
    CHECK_THROWS_AS((void)build_mphf(prng, std::vector<Key>{1, 1}, MphfParams{}), InputError);
    // eps = 0.08 succeeds with probability about 0.38 per draw; one draw must fail sometimes.
    int refused = 0;
    for (std::uint64_t t = 0; t < 20; ++t) {
        Prng p = Prng(6).child(t);
        const auto keys = random_keys(p, 3000);
        try {
            (void)build_mphf(p, keys, MphfParams{0.08, 0.5, 3, 1});
        } catch (const ConstructionError&) {
            ++refused;
        }
    }
    CHECK(refused > 0);
}

TEST_CASE("acyclicity bounds") {
    const auto b = acyclic_prob_bounds(1.0);
    CHECK(b.exact_rate == doctest::Approx(std::sqrt(0.75)));
    CHECK(b.exact_rate == doctest::Approx(0.8660).epsilon(1e-4));
    CHECK(b.lower_bound == doctest::Approx(1 + 0.5 * std::log(0.75)));
    CHECK(b.lower_bound == doctest::Approx(0.8562).epsilon(1e-4));
    const auto far = acyclic_prob_bounds(1e6);
    CHECK(far.exact_rate == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(far.lower_bound == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_THROWS_AS((void)acyclic_prob_bounds(0.0), DomainError);
    CHECK_THROWS_AS((void)acyclic_prob_bounds(-1.0), DomainError);
    for (double eps = 0.08; eps < 20.0; eps *= 1.05) {
        const auto s = acyclic_prob_bounds(eps);
        CHECK(s.lower_bound <= s.exact_rate);
    }
}

TEST_CASE("empirical acyclicity rate at eps = 1") {
    int acyclic = 0;
    const int trials = 300;
    for (int t = 0; t < trials; ++t) {
        Prng prng = Prng(7).child(t);
        const auto keys = random_keys(prng, 5000);
        acyclic += build_mphf(prng, keys, MphfParams{}).attempts == 1;
    }
    const auto b = acyclic_prob_bounds(1.0);
    const double rate = static_cast<double>(acyclic) / trials;
    CHECK(rate >= b.lower_bound - 0.06);
    CHECK(rate <= b.exact_rate + 0.06);
}

TEST_CASE("serialization") {
    Prng prng(8);
    const auto keys = random_keys(prng, 1000);
    const auto b = build_mphf(prng, keys, MphfParams{});
    const auto blob = serialize(b.ph);
    const auto back = deserialize_bpz(blob);
    CHECK(back == b.ph);
    for (Key x : keys) CHECK(back(x) == b.ph(x));
    auto cut = blob;
    cut.resize(blob.size() - 3);
    CHECK_THROWS_AS((void)deserialize_bpz(cut), InputError);
    auto extra = blob;
    extra.push_back(1);
    CHECK_THROWS_AS((void)deserialize_bpz(extra), InputError);
    auto magic = blob;
    magic[1] = 'Q';
    CHECK_THROWS_AS((void)deserialize_bpz(magic), InputError);
}
