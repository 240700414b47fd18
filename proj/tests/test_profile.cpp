#include <doctest.h>

#include <algorithm>
#include <random>

#include "halphen/json_io.hpp"
#include "halphen/profile.hpp"

using namespace halphen;

namespace {

Profile random_profile(std::mt19937& rng) {
    std::uniform_int_distribution<Int> len(0, 8), val(0, 4), off(-3, 3);
    std::vector<Int> values(static_cast<std::size_t>(len(rng)));
    for (auto& v : values) v = val(rng);
    return profile_from_values(values, off(rng));
}

// Random composition of d over indices starting at 0.
Profile random_composition(std::mt19937& rng, Int d) {
    std::vector<Int> values;
    Int remaining = d;
    while (remaining > 0) {
        std::uniform_int_distribution<Int> val(0, remaining);
        const Int v = val(rng);
        values.push_back(v);
        remaining -= v;
    }
    return profile_from_values(values);
}

} // namespace

TEST_CASE("build_profile canonicalizes and totals") {
    const Profile p = build_profile({{0, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 1}});
    CHECK(p.total() == 8);
    CHECK(p.dense() == std::vector<Int>{1, 2, 2, 2, 1});

    const Profile zero = build_profile({});
    CHECK(zero.total() == 0);
    CHECK(zero.empty());

    // explicit zeros are indistinguishable from absent indices
    CHECK(build_profile({{0, 1}, {5, 0}}) == build_profile({{0, 1}}));

    CHECK_THROWS_AS(build_profile({{0, 1}, {1, -2}}), NegativeValue);
    CHECK_THROWS_AS(build_profile({{0, 1}, {0, 2}}), DuplicateIndex);
}

TEST_CASE("profile_sums matches direct summation") {
    const Profile p = build_profile({{0, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 1}});
    const auto s = profile_sums(p, 3);
    CHECK(s.delta1 == 7);
    CHECK(s.phi == 16);
    CHECK(s.total == 8);

    const auto z = profile_sums(Profile{}, 5);
    CHECK(z.delta1 == 0);
    CHECK(z.phi == 0);
    CHECK(z.total == 0);

    const Profile q = build_profile({{0, 2}, {1, 3}, {2, 3}, {3, 2}});
    const auto t = profile_sums(q, 3);
    CHECK(t.delta1 == 10);
    CHECK(t.phi == 25);
    CHECK(t.total == 10);
}

TEST_CASE("sum identities over a window containing the support") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 300; ++trial) {
        const Profile p = random_profile(rng);
        const Int lo = p.empty() ? -2 : p.min_index() - 2;
        const Int hi = p.empty() ? 2 : p.max_index() + 2;
        for (Int n = lo; n <= hi; ++n) {
            CHECK(p.double_sum(n) - p.double_sum(n - 1) == p.prefix(n));
            CHECK(p.prefix(n) - p.prefix(n - 1) == p.at(n));
        }
        CHECK(p.prefix(hi) == p.total());
    }
}

TEST_CASE("serre_reflect") {
    CHECK(build_profile({{0, 1}, {1, 2}, {2, 3}}).serre_reflect() ==
          build_profile({{0, 3}, {1, 2}, {2, 1}}));
    CHECK(build_profile({{2, 5}}).serre_reflect() == build_profile({{0, 5}}));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Profile p = random_profile(rng);
        const Profile r = p.serre_reflect();
        CHECK(r.serre_reflect() == p);
        auto values = [](const Profile& q) {
            std::vector<Int> v;
            for (const auto& [i, x] : q.entries()) v.push_back(x);
            std::sort(v.begin(), v.end());
            return v;
        };
        CHECK(values(r) == values(p));
        CHECK(r.total() == p.total());
    }
}

TEST_CASE("check_admissible on the P3 growth constraint") {
    CHECK(check_admissible(profile_from_values({1, 2, 2, 2, 1}), P3Star{2, 8}));
    // at n = 1 the value 1 < 2 but the prefix 1 is neither <= 0 nor >= 7
    CHECK_FALSE(check_admissible(profile_from_values({1, 1, 2, 2, 2}), P3Star{2, 8}));
    CHECK_THROWS_AS(check_admissible(profile_from_values({1, 1}), P3Star{2, 8}), TotalMismatch);
    CHECK_THROWS_AS(check_admissible(profile_from_values({1}), P3Star{1, 1}), DomainError);
}

TEST_CASE("check_admissible on the ambient-r constraint") {
    CHECK_FALSE(check_admissible(profile_from_values({3, 2, 5}), PrStarStar{6}));
    CHECK(check_admissible(profile_from_values({3, 5, 4}), PrStarStar{6}));
    CHECK(check_admissible(Profile{}, PrStarStar{3}));
    // interior gap with mass on both sides
    CHECK_FALSE(check_admissible(profile_from_values({3, 0, 4}), PrStarStar{3}));
    CHECK_THROWS_AS(check_admissible(Profile{}, PrStarStar{2}), DomainError);
}

TEST_CASE("admissibility is monotone in s at fixed total") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        std::uniform_int_distribution<Int> dd(1, 12);
        const Int d = dd(rng);
        const Profile p = random_composition(rng, d);
        for (Int s = 5; s >= 2; --s) {
            if (!check_admissible(p, P3Star{s, d})) continue;
            for (Int lower = 2; lower < s; ++lower)
                CHECK(check_admissible(p, P3Star{lower, d}));
        }
    }
}

TEST_CASE("profile JSON round-trip") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Profile p = random_profile(rng);
        const nlohmann::json j = p;
        CHECK(j.at("values").is_array());
        const Profile back = j.get<Profile>();
        CHECK(back == p);
    }
    const nlohmann::json zero = Profile{};
    CHECK(zero.at("offset") == 0);
    CHECK(zero.at("values").empty());
}
