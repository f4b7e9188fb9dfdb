#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "cycov/hurwitz.hpp"

using namespace cycov;

namespace {

HurwitzTuple sigma3_example() {
    // ((1 2), (1 2), (1 3), (1 3)) in Sym(3): product one, transitive, genus 0.
    HurwitzTuple t;
    t.symbols = 3;
    t.sigmas = {parse_cycles("(1 2)", 3), parse_cycles("(1 2)", 3), parse_cycles("(1 3)", 3),
                parse_cycles("(1 3)", 3)};
    t.moving_count = 1;
    return t;
}

std::multiset<std::vector<long long>> profile_of(const HurwitzTuple& t) {
    std::multiset<std::vector<long long>> p;
    for (const auto& s : t.sigmas) p.insert(s.cycle_type());
    return p;
}

}  // namespace

TEST_CASE("tuple validation") {
    CHECK(validate(cyclic_tuple(2, 6)));
    CHECK(validate(cyclic_tuple(3, 3)));
    HurwitzTuple ids;
    ids.symbols = 2;
    ids.sigmas = {Perm(2), Perm(2)};
    CHECK_FALSE(validate(ids));  // product one but not transitive
    HurwitzTuple bad = cyclic_tuple(3, 3);
    bad.sigmas[0] = bad.sigmas[0].inverse();
    CHECK_FALSE(product_one(bad));
}

TEST_CASE("genus from monodromy") {
    CHECK(genus_of(cyclic_tuple(2, 6)) == 2);
    for (auto [n, m] : {std::array<long long, 2>{2, 6}, {2, 8}, {3, 6}, {3, 9}, {4, 8}})
        CHECK(genus_of(cyclic_tuple(n, m)) == (n - 1) * (m - 2) / 2);
    // the 4-point profile of full 7-cycles
    HurwitzTuple cd;
    cd.symbols = 7;
    cd.sigmas = {Perm::full_cycle(7), Perm::full_cycle(7), Perm::full_cycle(7),
                 (Perm::full_cycle(7) * Perm::full_cycle(7) * Perm::full_cycle(7)).inverse()};
    REQUIRE(validate(cd));
    CHECK(genus_of(cd) == 6);
    CHECK(genus_of(sigma3_example()) == 0);
}

TEST_CASE("cyclic tuples") {
    auto t = cyclic_tuple(2, 6);
    CHECK(t.sigmas.size() == 6);
    for (const auto& s : t.sigmas) CHECK(s.cycle_type() == std::vector<long long>{2});
    CHECK_THROWS_AS(cyclic_tuple(3, 8), SpecError);
}

TEST_CASE("elementary braid moves") {
    auto t = sigma3_example();

    SECTION("a move composed with its inverse is the identity") {
        for (int i = 1; i < 4; ++i) {
            CHECK(hurwitz_move_inverse(hurwitz_move(t, i), i) == t);
            CHECK(hurwitz_move(hurwitz_move_inverse(t, i), i) == t);
        }
    }

    SECTION("explicit image of the middle move") {
        auto moved = hurwitz_move(t, 2);
        CHECK(moved.sigmas[0] == parse_cycles("(1 2)", 3));
        CHECK(moved.sigmas[1] == parse_cycles("(2 3)", 3));  // (1 2)(1 3)(1 2)
        CHECK(moved.sigmas[2] == parse_cycles("(1 2)", 3));
        CHECK(moved.sigmas[3] == parse_cycles("(1 3)", 3));
    }

    SECTION("moves preserve validity, genus and the cycle-type multiset") {
        std::mt19937 rng(424242);
        std::uniform_int_distribution<int> pos(1, 3), coin(0, 1);
        auto profile = profile_of(t);
        long long g = genus_of(t);
        HurwitzTuple cur = t;
        for (int step = 0; step < 2000; ++step) {
            cur = coin(rng) ? hurwitz_move(cur, pos(rng)) : hurwitz_move_inverse(cur, pos(rng));
            REQUIRE(validate(cur));
            REQUIRE(profile_of(cur) == profile);
            REQUIRE(genus_of(cur) == g);
        }
    }

    CHECK_THROWS_AS(hurwitz_move(t, 0), SpecError);
    CHECK_THROWS_AS(hurwitz_move(t, 4), SpecError);
}

TEST_CASE("canonical forms under simultaneous conjugation") {
    auto t = sigma3_example();
    std::mt19937 rng(7);
    std::vector<int> img{0, 1, 2};
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(img.begin(), img.end(), rng);
        CHECK(canonical_form(conjugate_tuple(t, Perm(img))) == canonical_form(t));
    }
}

TEST_CASE("permutation group order") {
    // Sym(3) from a transposition and a 3-cycle.
    std::vector<std::vector<int>> gens{{1, 0, 2}, {1, 2, 0}};
    CHECK(perm_group_order(gens, 3) == 6);
    CHECK(perm_group_order({{1, 2, 3, 0}}, 4) == 4);
    CHECK(perm_group_order({}, 5) == 1);
    CHECK(perm_group_order({{0, 1, 2}}, 3) == 1);
}

TEST_CASE("braid orbits") {
    SECTION("transposition tuples in Sym(2) form a single class") {
        auto t = cyclic_tuple(2, 6, 1);
        auto a = braid_orbit(t, BraidPolicy::moving);
        CHECK(a.n_classes == 1);
        CHECK(a.image_order == 1);
        CHECK(a.kernel_index == 1);
        CHECK(a.policy == "moving");
    }

    SECTION("tuples with all entries equal are fixed by every move") {
        auto t = cyclic_tuple(3, 9, 1);
        for (auto policy : {BraidPolicy::moving, BraidPolicy::pure, BraidPolicy::full}) {
            auto a = braid_orbit(t, policy);
            CHECK(a.n_classes == 1);
            CHECK(a.image_order == 1);
        }
    }

    SECTION("the full orbit of a mixed transposition tuple partitions the valid set") {
        auto t = sigma3_example();
        auto orbit = braid_orbit(t, BraidPolicy::full);

        // Exhaustive enumeration of all product-one transitive tuples of four
        // transpositions in Sym(3), up to simultaneous conjugation.
        std::vector<Perm> transpositions{parse_cycles("(1 2)", 3), parse_cycles("(1 3)", 3),
                                         parse_cycles("(2 3)", 3)};
        std::set<HurwitzTuple> classes;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c)
                    for (int d = 0; d < 3; ++d) {
                        HurwitzTuple cand;
                        cand.symbols = 3;
                        cand.sigmas = {transpositions[a], transpositions[b], transpositions[c],
                                       transpositions[d]};
                        if (validate(cand)) classes.insert(canonical_form(cand));
                    }
        REQUIRE(!classes.empty());

        // Orbits of representatives partition the class set.
        std::set<HurwitzTuple> covered;
        for (const auto& rep : classes) {
            if (covered.count(rep)) continue;
            HurwitzTuple seed = rep;
            seed.moving_count = t.moving_count;
            auto sub = braid_orbit(seed, BraidPolicy::full);
            for (const auto& cls : sub.cover_classes) {
                CHECK(classes.count(cls) == 1);
                CHECK(covered.count(cls) == 0);
                covered.insert(cls);
            }
        }
        CHECK(covered == classes);
        CHECK(orbit.n_classes <= static_cast<long long>(classes.size()));
    }

    SECTION("determinism: the orbit set is independent of the starting member") {
        auto t = sigma3_example();
        auto a1 = braid_orbit(t, BraidPolicy::moving);
        // start from a different member of the same orbit
        auto moved = hurwitz_move(t, 1);
        auto a2 = braid_orbit(moved, BraidPolicy::moving);
        CHECK(a1.cover_classes == a2.cover_classes);
        CHECK(a1.image_order == a2.image_order);
        // and from a conjugated start
        auto a3 = braid_orbit(conjugate_tuple(t, parse_cycles("(1 2 3)", 3)), BraidPolicy::moving);
        CHECK(a1.cover_classes == a3.cover_classes);
    }

    SECTION("image order divides N! and equals the kernel index") {
        auto t = sigma3_example();
        for (auto policy : {BraidPolicy::moving, BraidPolicy::pure, BraidPolicy::full}) {
            auto a = braid_orbit(t, policy);
            long long fact = 1;
            for (long long i = 2; i <= a.n_classes; ++i) fact *= i;
            CHECK(fact % a.image_order == 0);
            CHECK(a.kernel_index == a.image_order);
        }
    }

    SECTION("the orbit cap is enforced") {
        auto t = sigma3_example();
        CHECK_THROWS_AS(braid_orbit(t, BraidPolicy::full, 1), SpecError);
    }
}

TEST_CASE("tuple literals") {
    auto t = parse_tuple("(1 2);(1 2);(1 2);(1 2);(1 2);(1 2)", 2, 1);
    CHECK(t.sigmas.size() == 6);
    CHECK(validate(t));
    CHECK(genus_of(t) == 2);

    CHECK_THROWS_AS(parse_tuple("(1 2;(1 2)", 2, 0), SpecError);
    CHECK_THROWS_AS(parse_tuple("(1 5)", 3, 0), SpecError);
    CHECK_THROWS_AS(parse_tuple("(1 1)", 2, 0), SpecError);
    CHECK_THROWS_AS(parse_tuple("(1 2)x", 2, 0), SpecError);
}
