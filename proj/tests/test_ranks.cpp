#include <catch2/catch_amalgamated.hpp>

#include "cycov/ranks.hpp"

using namespace cycov;

TEST_CASE("kernel bounds from a supporting divisor") {
    auto kb = kernel_bounds(7, 4, 0);
    CHECK(kb.lower == 3);
    CHECK(kb.upper == 3);
    CHECK(kb.equal);

    auto kz = kernel_bounds(5, 0, 0);
    CHECK(kz.lower == 5);
    CHECK(kz.upper == 5);

    auto km = kernel_bounds(6, 6, 2);
    CHECK(km.lower == 2);
    CHECK(km.upper == 4);
    CHECK_FALSE(km.equal);

    CHECK_THROWS_AS(kernel_bounds(5, -1, 0), SpecError);
}

TEST_CASE("rigid family rank") {
    CHECK(rigid_family_rank(2, 1) == 1);
    CHECK(rigid_family_rank(7, 7) == 0);
    CHECK(rigid_family_rank(7, 4) == 3);
    CHECK_THROWS_AS(rigid_family_rank(5, 0), SpecError);
    CHECK_THROWS_AS(rigid_family_rank(5, 6), SpecError);
}

TEST_CASE("rank report of the cyclic families") {
    auto r261 = cyclic_rank_report(2, 6, 1);
    CHECK(r261.g == 2);
    CHECK(r261.rk_K == 1);
    CHECK(r261.rk_U_upper == 1);
    CHECK(r261.singular_fibers == 5);
    CHECK(r261.base_genus == 2);
    CHECK(r261.non_isotrivial);
    CHECK(r261.monodromy_finite_claimed);
    CHECK_FALSE(r261.rk_U_exact.has_value());

    auto r392 = cyclic_rank_report(3, 9, 2);
    CHECK(r392.g == 7);
    CHECK(r392.rk_K == 3);
    CHECK(r392.singular_fibers == 16);
    CHECK_FALSE(r392.strict_inclusion);  // 2 >= 3/2

    auto r391 = cyclic_rank_report(3, 9, 1);
    CHECK(r391.rk_K == 5);
    CHECK(r391.strict_inclusion);  // 1 < 3/2

    SECTION("precondition violations carry the condition") {
        CHECK_THROWS_WITH(cyclic_rank_report(3, 8, 1), Catch::Matchers::ContainsSubstring("divide"));
        CHECK_THROWS_AS(cyclic_rank_report(2, 6, 0), SpecError);
        CHECK_THROWS_AS(cyclic_rank_report(2, 6, 3), SpecError);
        CHECK_THROWS_AS(cyclic_rank_report(2, 4, 1), SpecError);  // genus 1
        CHECK_THROWS_AS(cyclic_rank_report(1, 6, 1), SpecError);
    }

    SECTION("grid identities") {
        for (long long n : {2, 3, 5})
            for (long long m = n; m <= 20; m += n)
                for (long long k = 1; k * n < m; ++k) {
                    long long g = (n - 1) * (m - 2) / 2;
                    if (g < 2) continue;
                    auto rep = cyclic_rank_report(n, m, k);
                    CHECK(rep.g == g);
                    CHECK(rep.rk_K == g - (n - 1) * k);
                    CHECK(2 * rep.rk_K == (n - 1) * (m - 2 - 2 * k));
                    CHECK(rep.rk_K < rep.g);  // non-isotriviality
                    CHECK(rep.singular_fibers == k * (m - 1));
                    if (rep.strict_inclusion) CHECK(rep.rk_U_upper < rep.rk_K);
                }
    }
}

TEST_CASE("genus of the base curve") {
    CHECK(base_curve_genus(2, 6, 1) == 2);   // 5 + 1 branch points of a double cover
    CHECK(base_curve_genus(3, 9, 1) == 7);
    // k = n: infinity is unramified, only the k(m-1) collision points remain
    CHECK(base_curve_genus(2, 6, 2) == 4);   // 2g - 2 = -4 + 10
}

TEST_CASE("standard-case reports") {
    auto r7 = cd_standard_report(7);
    CHECK(r7.g == 6);
    CHECK(r7.q == 3);
    CHECK(r7.rk_U == 4);
    CHECK(r7.r_d == 2);
    CHECK(r7.rk_K_upper == 4);
    CHECK(r7.h0_nP == 4);

    CHECK(cd_standard_report(5).rk_U == 2);
    CHECK(cd_standard_report(11).rk_U == 6);   // 11 = 2 mod 3: floor((2g-2)/3)
    CHECK(cd_standard_report(13).rk_U == 8);   // 13 = 1 mod 3: floor((2g+1)/3)
    CHECK(cd_standard_report(13).rk_K_upper == 8);

    CHECK_THROWS_AS(cd_standard_report(6), SpecError);   // gcd(6,6) != 1
    CHECK_THROWS_AS(cd_standard_report(4), SpecError);   // gcd(4,6) != 1
    CHECK_THROWS_AS(cd_standard_report(3), SpecError);

    SECTION("the flat rank never exceeds 2 r(D)") {
        for (long long n = 5; n <= 35; ++n) {
            if (std::gcd(n, static_cast<long long>(6)) != 1) continue;
            auto r = cd_standard_report(n);
            CHECK(r.rk_U <= r.rk_K_upper);
        }
    }
}

TEST_CASE("full certification pipeline") {
    auto r = certify_rank(reduced_cover_spec(2, 6, 1));
    CHECK(r.rk_K == 1);
    CHECK(r.certified_by_oracle);

    auto r39 = certify_rank(reduced_cover_spec(3, 9, 1));
    CHECK(r39.rk_K == 5);
    CHECK(r39.certified_by_oracle);

    CHECK_THROWS_AS(certify_rank(reduced_cover_spec(2, 6, 0)), SpecError);
    // k >= m/n violates the rigidity range and is rejected up front
    CHECK_THROWS_AS(certify_rank(reduced_cover_spec(2, 6, 3)), SpecError);

    SECTION("rational non-integer branch points work the same") {
        std::vector<Rat> xs{Rat(0), Rat(1, 2), Rat(3), Rat(22, 7), Rat(-5), Rat(11, 3)};
        auto spec = reduced_cover_spec(2, 6, 1, xs);
        auto rep = certify_rank(spec);
        CHECK(rep.rk_K == 1);
        CHECK(rep.certified_by_oracle);
    }

    SECTION("a moving branch point at infinity is normalized away internally") {
        std::vector<BranchPoint> branch;
        for (long long j = 0; j < 5; ++j) branch.push_back({Coord::at(Rat(j)), 1, false});
        branch.push_back({Coord::infinity(), 1, true});
        auto rep = certify_rank(CyclicCoverSpec(2, branch));
        CHECK(rep.rk_K == 1);
        CHECK(rep.certified_by_oracle);
    }
}
