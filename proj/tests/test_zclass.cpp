#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <vector>

#include "support.hpp"
#include "zhash/error.hpp"
#include "zhash/oracles.hpp"
#include "zhash/stats.hpp"
#include "zhash/zfamily.hpp"

using namespace zhash;
using zhash::test::constant;
using zhash::test::identity_g_family;
using zhash::test::random_keys;

TEST_CASE("params validation") {
    CHECK_NOTHROW(ZParams{1, 2, 2, 1, 1}.validate());
    CHECK_THROWS_AS(ZParams({0, 2, 2, 4, 8}).validate(), ParameterError);
    CHECK_THROWS_AS(ZParams({1, 1, 2, 4, 8}).validate(), ParameterError);
    CHECK_THROWS_AS(ZParams({1, 2, 3, 4, 8}).validate(), ParameterError);
    CHECK_THROWS_AS(ZParams({1, 2, 0, 4, 8}).validate(), ParameterError);
    CHECK_THROWS_AS(ZParams({1, 2, 66, 4, 8}).validate(), ParameterError);
    CHECK_THROWS_AS(ZParams({1, 2, 2, 0, 8}).validate(), ParameterError);
    CHECK_THROWS_AS(ZParams({1, 2, 2, 4, 0}).validate(), ParameterError);
    CHECK(ZParams{1, 2, 6, 4, 8}.k() == 3);
    Prng prng(1);
    CHECK_THROWS_AS((void)draw_z(prng, ZParams{1, 2, 3, 4, 8}), ParameterError);
}

TEST_CASE("ell from delta") {
    CHECK(ell_from_delta(10000, 0.5) == 100);
    CHECK(ell_from_delta(1000, 0.5) == 32);
    CHECK(ell_from_delta(100000, 0.5) == 317);
    CHECK(ell_from_delta(1, 0.5) == 1);
}

TEST_CASE("draw_z determinism and shape") {
    const ZParams p{1, 2, 2, 4, 8};
    Prng a(42), b(42);
    const auto fa = draw_z(a, p);
    const auto fb = draw_z(b, p);
    CHECK(fa == fb);
    CHECK(fa.f().size() == 2);
    CHECK(fa.g().size() == 1);
    for (unsigned i = 0; i < 2; ++i) {
        REQUIRE(fa.z(i).size() == 4);
        for (auto v : fa.z(i)) CHECK(v < 8);
    }
    Prng c(43);
    CHECK_FALSE(draw_z(c, p) == fa);
}

TEST_CASE("zero tables reduce h_i to f_i") {
    Prng prng(5);
    const ZParams p{2, 3, 2, 16, 101};
    std::vector<PolyHash> f, g;
    for (unsigned i = 0; i < p.d; ++i) f.push_back(draw_poly(prng, 2, p.m));
    for (unsigned j = 0; j < p.c; ++j) g.push_back(draw_poly(prng, 2, p.ell));
    const ZFamily fam(p, f, g, std::vector<std::vector<std::uint64_t>>(3, std::vector<std::uint64_t>(32, 0)));
    for (int r = 0; r < 100; ++r) {
        const Key x = prng.below(kPrime);
        const auto h = fam.eval(x);
        for (unsigned i = 0; i < p.d; ++i) CHECK(h[i] == f[i](x));
    }
}

TEST_CASE("constructed family: f = 0, single table entry 5") {
    const ZParams p{1, 2, 2, 4, 10};
    std::vector<PolyHash> f(2, constant(0, 10));
    std::vector<PolyHash> g{constant(2, 4)};
    std::vector<std::vector<std::uint64_t>> z{{0, 0, 5, 0}, {0, 0, 0, 0}};
    const ZFamily fam(p, f, g, z);
    CHECK(fam.eval_one(12345, 0) == 5);
    CHECK(fam.eval_one(12345, 1) == 0);
}

TEST_CASE("eval matches the direct formula oracle") {
    Prng prng(6);
    for (int rep = 0; rep < 200; ++rep) {
        ZParams p;
        p.c = 1 + static_cast<unsigned>(prng.below(4));
        p.d = 2 + static_cast<unsigned>(prng.below(4));
        p.kappa = 2 * (1 + static_cast<unsigned>(prng.below(3)));
        p.ell = 1 + prng.below(50);
        p.m = 1 + prng.below(rep % 3 == 0 ? kPrime : 1000);
        const auto fam = draw_z(prng, p);
        const Key x = prng.below(kPrime);
        const auto h = fam.eval(x);
        REQUIRE(h.size() == p.d);
        for (auto v : h) CHECK(v < p.m);
        CHECK(h == oracles::z_eval_direct(fam, x));
    }
}

TEST_CASE("inadmissible key to eval") {
    Prng prng(7);
    const auto fam = draw_z(prng, ZParams{1, 2, 2, 4, 8});
    CHECK_THROWS_AS((void)fam.eval(kPrime), DomainError);
}

TEST_CASE("single-coordinate marginal is uniform") {
    const ZParams p{2, 3, 2, 8, 16};
    const Key x = 31337;
    std::vector<std::uint64_t> counts(16, 0);
    for (std::uint64_t s = 0; s < 100000; ++s) {
        Prng prng = Prng(8).child(s);
        ++counts[draw_z(prng, p).eval_one(x, 0)];
    }
    CHECK(stats::chi_square_uniform(counts).p_value > 0.001);
}

TEST_CASE("deficiency definition examples") {
    const auto fam = identity_g_family(2, 4, 8);
    SUBCASE("injective g") {
        const std::vector<Key> t{0, 1, 2, 3};
        const auto r = classify_deficiency(fam, t);
        CHECK(r.d_T == 0);
        CHECK(r.cls == Deficiency::good);
    }
    SUBCASE("g-values (0,0,1)") {
        const std::vector<Key> t{0, 4, 1};
        const auto r = classify_deficiency(fam, t);
        CHECK(r.per_g_distinct == std::vector<std::uint64_t>{2});
        CHECK(r.d_T == 1);
        CHECK(r.cls == Deficiency::critical);
        CHECK(r.is_good());
    }
    SUBCASE("g-values (0,0,1,1)") {
        const std::vector<Key> t{0, 4, 1, 5};
        const auto r = classify_deficiency(fam, t);
        CHECK(r.d_T == 2);
        CHECK(r.cls == Deficiency::bad);
        CHECK_FALSE(r.is_good());
    }
    SUBCASE("empty T") {
        const auto r = classify_deficiency(fam, {});
        CHECK(r.d_T == 0);
        CHECK(r.cls == Deficiency::good);
    }
    SUBCASE("T smaller than k is clipped to 0") {
        const auto big_k = identity_g_family(6, 4, 8);
        const std::vector<Key> t{0, 4};
        CHECK(classify_deficiency(big_k, t).d_T == 0);
        CHECK(classify_deficiency(big_k, t).cls == Deficiency::good);
    }
    SUBCASE("k enters the max") {
        // kappa = 4, k = 2: |T| = 4 with a single g-value gives 4 - max(2, 1) = 2, critical.
        const auto k2 = identity_g_family(4, 4, 8);
        const std::vector<Key> t{0, 4, 8, 12};
        const auto r = classify_deficiency(k2, t);
        CHECK(r.d_T == 2);
        CHECK(r.cls == Deficiency::critical);
    }
}

TEST_CASE("classifier equals the per-definition recount") {
    const auto start = std::chrono::steady_clock::now();
    Prng prng(10);
    for (int rep = 0; rep < 10000; ++rep) {
        ZParams p;
        p.c = 1 + static_cast<unsigned>(prng.below(3));
        p.d = 2;
        p.kappa = 2 * (1 + static_cast<unsigned>(prng.below(3)));
        p.ell = 1 + prng.below(40);
        p.m = 8;
        const auto fam = draw_z(prng, p);
        const auto t = random_keys(prng, prng.below(21));
        REQUIRE(classify_deficiency(fam, t).d_T == oracles::deficiency_recount(fam, t));
    }
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    CHECK(elapsed.count() < 10.0);
}

TEST_CASE("deficiency depends only on g and not on the order of T") {
    Prng prng(11);
    for (int rep = 0; rep < 200; ++rep) {
        const ZParams p{2, 2, 2, 6, 50};
        const auto a = draw_z(prng, p);
        auto t = random_keys(prng, 8);
        const auto base = classify_deficiency(a, t);

        std::vector<PolyHash> f;
        for (unsigned i = 0; i < 2; ++i) f.push_back(draw_poly(prng, 2, 50));
        std::vector<std::vector<std::uint64_t>> z(2, std::vector<std::uint64_t>(12));
        for (auto& table : z) for (auto& v : table) v = prng.below(50);
        const ZFamily b(p, f, {a.g().begin(), a.g().end()}, z);
        CHECK(classify_deficiency(b, t).d_T == base.d_T);

        std::shuffle(t.begin(), t.end(), prng);
        CHECK(classify_deficiency(a, t).d_T == base.d_T);
        CHECK(classify_deficiency(a, t).per_g_distinct == base.per_g_distinct);
    }
}

TEST_CASE("removing one key changes d_T by 0 or 1") {
    Prng prng(12);
    for (int rep = 0; rep < 500; ++rep) {
        const ZParams p{1 + static_cast<unsigned>(rep % 3), 2, 2, 5, 8};
        const auto fam = draw_z(prng, p);
        auto t = random_keys(prng, 1 + prng.below(12));
        const auto before = classify_deficiency(fam, t).d_T;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(prng.below(t.size())));
        const auto after = classify_deficiency(fam, t).d_T;
        CHECK((before == after || before == after + 1));
    }
}

TEST_CASE("bad-rate estimates against the bound") {
    SUBCASE("singleton T never collides") {
        const auto est = estimate_bad_rate(ZParams{1, 2, 2, 1, 4}, 1, 1000, 1);
        CHECK(est.rate == 0.0);
    }
    SUBCASE("ell >= |T|^2, c = 1") {
        const auto est = estimate_bad_rate(ZParams{1, 2, 2, 100, 4}, 5, 20000, 2);
        CHECK(est.bound == doctest::Approx(0.25));
        CHECK(est.rate <= est.bound + 3 * est.sigma);
    }
    SUBCASE("c = 2 at |T|^2 / ell = 1/2") {
        const auto est = estimate_bad_rate(ZParams{2, 2, 2, 128, 4}, 8, 20000, 3);
        CHECK(est.bound == doctest::Approx(0.25));
        CHECK(est.rate <= est.bound + 3 * est.sigma);
    }
    SUBCASE("bound is capped at 1") {
        const auto est = estimate_bad_rate(ZParams{1, 2, 2, 64, 4}, 8, 2000, 4);
        CHECK(est.bound == 1.0);
        CHECK(est.rate <= 1.0);
    }
    SUBCASE("kappa = 4 uses exponent c k") {
        const auto est = estimate_bad_rate(ZParams{1, 2, 4, 256, 4}, 8, 20000, 5);
        CHECK(est.bound == doctest::Approx(0.0625));
        CHECK(est.rate <= est.bound + 3 * est.sigma);
    }
}

TEST_CASE("good sets see fully random values") {
    // |T| = 3, m = 2, d = 2, ell = 2: bad iff all three keys share a g-value,
    // so the conditioning discards a real fraction of draws.
    const ZParams p{1, 2, 2, 2, 2};
    const std::vector<Key> t{11, 22, 33};
    std::vector<std::uint64_t> counts(64, 0);
    std::uint64_t kept = 0;
    for (std::uint64_t s = 0; s < 100000; ++s) {
        Prng prng = Prng(13).child(s);
        const auto fam = draw_z(prng, p);
        if (!classify_deficiency(fam, t).is_good()) continue;
        ++kept;
        std::size_t cell = 0;
        for (Key x : t) {
            const auto h = fam.eval(x);
            cell = cell * 4 + h[0] * 2 + h[1];
        }
        ++counts[cell];
    }
    CHECK(kept < 100000);
    CHECK(kept > 50000);
    CHECK(stats::chi_square_uniform(counts).p_value > 0.001);
}

TEST_CASE("serialization round trip") {
    Prng prng(14);
    const auto fam = draw_z(prng, ZParams{3, 4, 6, 10, 1000});
    const auto blob = serialize(fam);
    CHECK(deserialize_zfamily(blob) == fam);
    CHECK(serialize(deserialize_zfamily(blob)) == blob);
    CHECK(blob[0] == 'Z');

    auto truncated = blob;
    truncated.pop_back();
    CHECK_THROWS_AS((void)deserialize_zfamily(truncated), InputError);
    auto bad_magic = blob;
    bad_magic[0] = 'X';
    CHECK_THROWS_AS((void)deserialize_zfamily(bad_magic), InputError);
    auto extra = blob;
    extra.push_back(0);
    CHECK_THROWS_AS((void)deserialize_zfamily(extra), InputError);
}
