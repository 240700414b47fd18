#include <doctest.h>

#include "halphen/delta.hpp"

using namespace halphen;

TEST_CASE("triangular_decompose") {
    CHECK(triangular_decompose(0).T == 0);
    CHECK(triangular_decompose(0).R == 0);
    CHECK(triangular_decompose(5).T == 2);
    CHECK(triangular_decompose(5).R == 2);
    CHECK(triangular_decompose(6).T == 3);
    CHECK(triangular_decompose(6).R == 0);
    CHECK_THROWS_AS(triangular_decompose(-1), NegativeInput);

    for (Int m = 0; m <= 300; ++m) {
        const auto [T, R] = triangular_decompose(m);
        CHECK(m == T * (T + 1) / 2 + R);
        CHECK(0 <= R);
        CHECK(R <= T);
    }
}

namespace {

void expect_params(Int N, Int s, Int d, DeltaBranch branch, Int T, Int R, Int rho, Int eps) {
    const DeltaParams q = delta_params(N, s, d);
    CHECK(q.branch == branch);
    CHECK(q.T == T);
    CHECK(q.R == R);
    CHECK(q.rho == rho);
    CHECK(q.eps == eps);
}

} // namespace

TEST_CASE("delta_params worked values") {
    expect_params(0, 2, 8, DeltaBranch::A, 0, 0, 0, 1);
    expect_params(1, 2, 8, DeltaBranch::B, 1, 0, 1, 0);
    expect_params(3, 3, 10, DeltaBranch::B, 2, 0, -1, 2);
    expect_params(1, 3, 10, DeltaBranch::A, 1, 0, -1, 1);
}

TEST_CASE("delta_params low-mass corners route through the shared equation") {
    // The two defining equations agree whenever T(N) = s-1, so these inputs
    // are covered even though the plateau-start equation's mass condition
    // fails for them.
    expect_params(1, 2, 4, DeltaBranch::A, 1, 0, -1, 0);
    expect_params(2, 2, 4, DeltaBranch::A, 1, 1, -2, 1);
    expect_params(3, 3, 9, DeltaBranch::A, 2, 0, -1, 1);
    expect_params(1, 2, 3, DeltaBranch::A, 1, 0, -2, 1);
    CHECK(delta_profile(delta_params(1, 2, 4)).dense() == std::vector<Int>{2, 2});
    CHECK(delta_profile(delta_params(2, 2, 4)).dense() == std::vector<Int>{3, 1});
    CHECK(delta_profile(delta_params(3, 3, 9)).dense() == std::vector<Int>{4, 3, 2});
    CHECK(delta_profile(delta_params(1, 2, 3)).dense() == std::vector<Int>{2, 1});
}

TEST_CASE("delta_params domain and regime rejections") {
    CHECK_THROWS_AS(delta_params(0, 1, 8), DomainError);
    CHECK_THROWS_AS(delta_params(8, 2, 8), DomainError);   // d > N fails
    CHECK_THROWS_AS(delta_params(0, 3, 6), DomainError);   // d > s^2 - s fails
    // triangular fallback with eps out of range
    CHECK_THROWS_AS(delta_params(3, 2, 4), InconsistentParams);
    CHECK_THROWS_AS(delta_params(5, 2, 7), InconsistentParams);
    // triangular fallback whose piecewise profile misses the total
    CHECK_THROWS_AS(delta_params(6, 3, 9), InconsistentParams);
    CHECK_THROWS_AS(delta_params(7, 3, 10), InconsistentParams);
}

TEST_CASE("high-dimension series close to the degree still resolve") {
    const DeltaParams q = delta_params(4, 3, 10);
    CHECK(q.branch == DeltaBranch::A);
    CHECK(delta_profile(q).dense() == std::vector<Int>{5, 3, 2});
}

TEST_CASE("delta_params triangular fallback can validate") {
    const DeltaParams q = delta_params(7, 3, 8);
    CHECK(q.branch == DeltaBranch::C);
    CHECK(q.rho == -3);
    CHECK(q.eps == 0);
    CHECK(delta_profile(q).dense() == std::vector<Int>{8});
    CHECK(speciality_threshold(q) == 0);

    const DeltaParams q2 = delta_params(11, 4, 13);
    CHECK(q2.branch == DeltaBranch::C);
    CHECK(delta_profile(q2).dense() == std::vector<Int>{12, 1});
}

TEST_CASE("delta_profile worked values") {
    CHECK(delta_profile(delta_params(0, 2, 8)).dense() == std::vector<Int>{1, 2, 2, 2, 1});
    CHECK(delta_profile(delta_params(1, 3, 10)).dense() == std::vector<Int>{2, 3, 3, 2});
    CHECK(delta_profile(delta_params(2, 3, 13)).dense() == std::vector<Int>{3, 3, 3, 3, 1});
    CHECK(delta_profile(delta_params(1, 2, 8)).dense() == std::vector<Int>{2, 2, 2, 2});
    CHECK(delta_profile(delta_params(2, 2, 8)).dense() == std::vector<Int>{3, 2, 2, 1});
    CHECK(delta_profile(delta_params(2, 2, 6)).dense() == std::vector<Int>{3, 2, 1});
}

TEST_CASE("speciality_threshold worked values") {
    CHECK(speciality_threshold(delta_params(0, 2, 8)) == 3);
    CHECK(speciality_threshold(delta_params(1, 3, 10)) == 3);
    CHECK(speciality_threshold(delta_params(2, 2, 6)) == 1);
}

TEST_CASE("delta_pr_profile worked values") {
    {
        const auto [q, p] = delta_pr_profile(2, 12, 6);
        CHECK(q.rho == 1);
        CHECK(q.eps == 3);
        CHECK(p.dense() == std::vector<Int>{3, 5, 4});
    }
    {
        const auto [q, p] = delta_pr_profile(1, 8, 4);
        CHECK(q.rho == 1);
        CHECK(q.eps == 2);
        CHECK(p.dense() == std::vector<Int>{2, 3, 3});
    }
    {
        const auto [q, p] = delta_pr_profile(0, 7, 4);
        CHECK(q.rho == 1);
        CHECK(q.eps == 2);
        CHECK(p.dense() == std::vector<Int>{1, 3, 3});
    }
    CHECK_THROWS_AS(delta_pr_profile(2, 6, 6), DomainError);
    CHECK_THROWS_AS(delta_pr_profile(0, 5, 2), DomainError);
}

TEST_CASE("delta_property_report worked values") {
    {
        const auto report = delta_property_report(delta_params(0, 2, 8));
        CHECK(report.all_pass());
        CHECK(report.n_star == 3);
        CHECK(report.first_full_index == 4);
    }
    {
        const auto report = delta_property_report(delta_params(1, 3, 10));
        CHECK(report.all_pass());
        CHECK(report.n_star == 3);
        CHECK(report.first_full_index == 3);
    }
    {
        const auto report = delta_property_report(delta_params(2, 2, 6));
        CHECK(report.all_pass());
        CHECK(report.n_star == 1);
        CHECK(report.profile.dense() == std::vector<Int>{3, 2, 1});
    }
}

TEST_CASE("delta grid sample: totals, ranges, properties, no late failures") {
    // The exhaustive grid runs in the acceptance suite; this keeps a smaller
    // regression net in the unit run.
    for (Int s = 2; s <= 3; ++s) {
        for (Int d = s * s - s + 1; d <= 20; ++d) {
            for (Int N = 0; N < std::min<Int>(d, 12); ++N) {
                DeltaParams q;
                try {
                    q = delta_params(N, s, d);
                } catch (const InconsistentParams&) {
                    continue;
                }
                const Profile p = delta_profile(q); // must not throw after acceptance
                CHECK(p.total() == d);
                CHECK(p.at(0) == N + 1);
                for (Int n = 1; n <= p.max_index(); ++n) {
                    CHECK(p.at(n) >= 0);
                    CHECK(p.at(n) <= s);
                }
                CHECK(delta_property_report(q).all_pass());
                CHECK(check_admissible(p, P3Star{s, d}));
            }
        }
    }
}

TEST_CASE("pr grid sample: totals and self-admissibility") {
    for (Int r = 3; r <= 5; ++r) {
        for (Int N = 0; N <= 3; ++N) {
            for (Int d = r + N; d <= 25; ++d) {
                const auto [q, p] = delta_pr_profile(N, d, r);
                CHECK(p.total() == d);
                CHECK(q.rho >= 0);
                CHECK(check_admissible(p, PrStarStar{r}));
            }
        }
    }
}
