#include <doctest.h>

#include <map>
#include <vector>

#include "support.hpp"
#include "zhash/cuckoo.hpp"
#include "zhash/error.hpp"
#include "zhash/oracles.hpp"

using namespace zhash;
using zhash::test::constant;
using zhash::test::random_keys;

namespace {

// Every key hashes to (a, b).
ZFamily constant_pair(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return ZFamily(ZParams{1, 2, 2, 1, m}, {constant(a, m), constant(b, m)}, {constant(0, 1)},
                   {{0}, {0}});
}

struct TableHasher {
    std::uint64_t m;
    std::map<Key, std::pair<std::uint64_t, std::uint64_t>> values;
    [[nodiscard]] unsigned d() const { return 2; }
    [[nodiscard]] std::uint64_t range() const { return m; }
    void eval(Key x, std::span<std::uint64_t> out) const {
        out[0] = values.at(x).first;
        out[1] = values.at(x).second;
    }
};

}  // namespace

TEST_CASE("default max loop") {
    CHECK(default_max_loop(1000, 1.0) == 46);
    CHECK(default_max_loop(10000, 0.1) > default_max_loop(10000, 1.0));
    CHECK_THROWS_AS((void)default_max_loop(10, 0.0), ParameterError);
}

TEST_CASE("insert into an empty table lands in T1") {
    Prng prng(1);
    const auto fam = draw_z(prng, ZParams{2, 2, 2, 8, 64});
    CuckooTable t(fam, 0, 50);
    const Key x = 4242;
    const auto r = t.insert(x);
    CHECK(r.outcome == InsertOutcome::placed);
    CHECK(t.table(0)[fam.eval_one(x, 0)] == x);
    CHECK(t.size() == 1);
    CHECK(t.lookup(x));
    CHECK_FALSE(t.lookup(x + 1));
    CHECK_THROWS_AS((void)t.insert(x), InputError);
}

TEST_CASE("fully colliding keys") {
    CuckooTable t(constant_pair(2, 3, 8), 1, 20);
    CHECK(t.insert(10).outcome == InsertOutcome::placed);
    CHECK(t.insert(11).outcome == InsertOutcome::placed);
    CHECK(t.table(0)[2].has_value());
    CHECK(t.table(1)[3].has_value());
    CHECK(t.lookup(10));
    CHECK(t.lookup(11));
    // A third key needs the stash, a fourth cannot be stored.
    CHECK(t.insert(12).outcome == InsertOutcome::placed_via_stash);
    CHECK(t.stash().size() == 1);
    CHECK_THROWS_AS((void)t.insert(12), InputError);
    const auto r = t.insert(13);
    CHECK(r.outcome == InsertOutcome::rehash_needed);
    REQUIRE(r.homeless.has_value());
    CHECK(t.size() == 3);
    CHECK_FALSE(t.lookup(*r.homeless));
    for (Key k : {10ULL, 11ULL, 12ULL, 13ULL}) {
        if (k != *r.homeless) CHECK(t.lookup(k));
    }
    CHECK(t.check_invariants());
}

TEST_CASE("insert, remove, lookup") {
    Prng prng(2);
    CuckooTable t(draw_z(prng, ZParams{2, 2, 2, 8, 64}), 1, 50);
    CHECK_FALSE(t.lookup(99));
    CHECK_FALSE(t.remove(99));
    t.insert(99);
    CHECK(t.remove(99));
    CHECK_FALSE(t.lookup(99));
    CHECK(t.size() == 0);

    // Removing from the stash.
    CuckooTable c(constant_pair(0, 0, 2), 1, 10);
    c.insert(1);
    c.insert(2);
    c.insert(3);
    REQUIRE(c.stash().size() == 1);
    const Key stashed = c.stash()[0];
    CHECK(c.remove(stashed));
    CHECK(c.stash().empty());
    CHECK(c.size() == 2);
    CHECK(c.check_invariants());
}

TEST_CASE("end state is valid after bulk insertion") {
    const std::size_t n = 10000;
    const auto m = static_cast<std::uint64_t>(1.2 * n);
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        Prng prng = Prng(3).child(trial);
        const auto keys = random_keys(prng, n);
        CuckooTable t(draw_z(prng, ZParams{4, 2, 2, 100, m}), 0, default_max_loop(n, 0.2));
        std::size_t lost = 0;
        for (Key x : keys) lost += t.insert(x).outcome == InsertOutcome::rehash_needed;
        REQUIRE(t.check_invariants());
        CHECK(t.size() == n - lost);
    }
}

TEST_CASE("operation trace matches a set model") {
    Prng prng(4);
    CuckooTable t(draw_z(prng, ZParams{3, 2, 2, 64, 4096}), 2, 200);
    oracles::ShadowDictionary shadow;
    const auto universe = random_keys(prng, 3000);
    for (int op = 0; op < 10000; ++op) {
        const Key x = universe[prng.below(universe.size())];
        switch (prng.below(3)) {
            case 0: {
                if (shadow.contains(x)) {
                    CHECK_THROWS_AS((void)t.insert(x), InputError);
                    break;
                }
                const auto r = t.insert(x);
                shadow.insert(x);
                if (r.outcome == InsertOutcome::rehash_needed) shadow.remove(*r.homeless);
                break;
            }
            case 1:
                CHECK(t.remove(x) == shadow.remove(x));
                break;
            default:
                CHECK(t.lookup(x) == shadow.contains(x));
        }
        REQUIRE(t.size() == shadow.size());
    }
    CHECK(t.check_invariants());
    for (Key x : universe) CHECK(t.lookup(x) == shadow.contains(x));
}

TEST_CASE("suitability examples") {
    SUBCASE("distinct cells") {
        TableHasher h{8, {{1, {0, 0}}, {2, {1, 1}}, {3, {2, 2}}}};
        const std::vector<Key> s{1, 2, 3};
        CHECK(suitable(s, h, 0));
    }
    SUBCASE("cycle with a chord") {
        TableHasher h{2, {{1, {0, 0}}, {2, {1, 0}}, {3, {1, 1}}, {4, {0, 1}}, {5, {0, 0}}}};
        const std::vector<Key> s{1, 2, 3, 4, 5};
        CHECK_FALSE(suitable(s, h, 0));
        CHECK(suitable(s, h, 1));
    }
    SUBCASE("needs a pair") {
        Prng prng(5);
        const auto fam = draw_z(prng, ZParams{1, 3, 2, 4, 8});
        CHECK_THROWS_AS((void)suitable(std::vector<Key>{1}, fam, 0), ParameterError);
        CHECK_THROWS_AS((void)CuckooTable(fam, 0, 10), ParameterError);
    }
}

TEST_CASE("suitable is monotone in s") {
    Prng prng(6);
    for (int rep = 0; rep < 100; ++rep) {
        const auto keys = random_keys(prng, 200);
        const auto fam = draw_z(prng, ZParams{1, 2, 2, 8, 220});
        bool prev = false;
        for (std::size_t s = 0; s < 6; ++s) {
            const bool now = suitable(keys, fam, s);
            CHECK((!prev || now));
            prev = now;
        }
    }
}

TEST_CASE("suitability agrees with insertion using a stash") {
    const std::size_t n = 500;
    int unsuitable = 0;
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        Prng prng = Prng(7).child(trial);
        const auto keys = random_keys(prng, n);
        const std::size_t s = trial % 3;
        // Tight tables so that the stash is actually exercised.
        const auto fam = draw_z(prng, ZParams{2, 2, 2, 23, 530});
        CuckooTable t(fam, s, 4 * n);
        bool ok = true;
        for (Key x : keys) ok = ok && t.insert(x).outcome != InsertOutcome::rehash_needed;
        REQUIRE(ok == suitable(keys, fam, s));
        unsuitable += !ok;
    }
    CHECK(unsuitable > 5);
}

TEST_CASE("random oracle tables") {
    Prng prng(8);
    const auto keys = random_keys(prng, 1000);
    CuckooTable t(RandomOracle(2, 2000, 9), 0, default_max_loop(1000, 1.0));
    for (Key x : keys) CHECK(t.insert(x).outcome == InsertOutcome::placed);
    CHECK(t.check_invariants());
}
