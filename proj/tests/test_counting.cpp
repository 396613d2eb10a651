#include <map>
#include <random>

#include "doctest.h"
#include "mcc/counting.hpp"
#include "oracles.hpp"

using namespace mcc;
using namespace mcc::counting;

TEST_CASE("mobius and totient") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(7) == -1);
    CHECK(totient(1) == 1);
    CHECK(totient(4) == 2);
    CHECK(totient(5) == 4);
    CHECK(totient(36) == 12);
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK_THROWS_AS(mobius(0), InvalidArgument);
}

TEST_CASE("dirichlet convolution") {
    ArithmeticFunction mu = [](std::int64_t n) { return mobius(n); };
    ArithmeticFunction id = [](std::int64_t n) { return Int(n); };
    ArithmeticFunction phi = [](std::int64_t n) { return totient(n); };
    ArithmeticFunction p1 = [](std::int64_t n) { return points_div(Family::Per1, static_cast<int>(n)); };
    ArithmeticFunction hyp1 = [](std::int64_t n) { return hyp(Family::Per1, static_cast<int>(n)); };
    CHECK(dirichlet(mu, id, 6) == 2);
    CHECK(dirichlet(mu, p1, 5) == 30);
    CHECK(dirichlet(phi, hyp1, 3) == 5);
    for (std::int64_t n = 1; n <= 60; ++n) CHECK(dirichlet(mu, id, n) == totient(n));
}

TEST_CASE("periodic point counts") {
    CHECK(points_div(Family::Per1, 5) == 31);
    CHECK(points_div(Family::Per2, 5) == 33);
    CHECK(points_div(Family::Per2, 2) == 3);
    CHECK(points_exact(Family::Per1, 5) == 30);
    CHECK(points_exact(Family::Per2, 1) == 3);
    CHECK(points_exact(Family::Per1, 6) == 54);
    for (int p = 1; p <= 14; ++p) CHECK(points_exact(Family::Per1, p) == oracle::exact_period_angles(p));
}

TEST_CASE("cycles, components and faces") {
    CHECK(cyc(Family::Per1, 5) == 6);
    CHECK(cyc(Family::Per2, 4) == 3);
    CHECK(cyc(Family::Per1, 15) == 2182);
    CHECK(hyp(Family::Per1, 5) == 15);
    CHECK(hyp(Family::Per2, 5) == 10);
    CHECK(hyp(Family::Per1, 1) == 1);
    CHECK(prim(Family::Per1, 5) == 11);
    CHECK(prim(Family::Per2, 5) == 6);
    CHECK(prim(Family::Per1, 2) == 0);
    CHECK(q(Family::Per1, 6) == 1);
    CHECK(q(Family::Per2, 3) == 2);
    CHECK(q(Family::Per2, 5) == 0);
    CHECK(faces(Family::Per1, 5) == 3);
    CHECK(faces(Family::Per2, 3) == 2);
    CHECK(faces(Family::Per2, 12) == 113);
    CHECK(genus(Family::Per1, 5) == 2);
    CHECK(genus(Family::Per2, 5) == 0);
    CHECK(genus(Family::Per2, 3) == -1);
    CHECK(capital_phi(5) == 6);
    CHECK(capital_phi(2) == 1);
    CHECK(capital_phi(7) == 12);
}

TEST_CASE("counts agree with exhaustive enumeration") {
    for (int p = 2; p <= 16; ++p) {
        CAPTURE(p);
        CHECK(cyc(Family::Per1, p) == Int(oracle::binary_necklaces(p).size()));
        CHECK(q(Family::Per1, p) == oracle::reflexive_duos(p));
    }
    for (int p = 3; p <= 16; ++p) {
        CAPTURE(p);
        CHECK(cyc(Family::Per2, p) == Int(oracle::ternary_necklaces(p).size()));
        CHECK(q(Family::Per2, p) == oracle::rotation_invariant_trios(p));
    }
}

TEST_CASE("moebius recursion closed form matches the recurrence") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> dist(-1000, 1000);
    for (int ell : {2, 3}) {
        std::map<std::int64_t, Int> values;
        ArithmeticFunction g = [&](std::int64_t n) {
            auto it = values.find(n);
            if (it == values.end()) it = values.emplace(n, Int(dist(rng))).first;
            return it->second;
        };
        ArithmeticFunction mu = [](std::int64_t n) { return mobius(n); };
        ArithmeticFunction tilde = [&](std::int64_t n) { return mobius_recursion_tilde(ell, g, n); };
        for (std::int64_t n = 1; n <= 200; ++n) {
            CAPTURE(ell);
            CAPTURE(n);
            CHECK(mobius_recursion_closed_form(ell, g, n) == dirichlet(mu, tilde, n));
        }
    }
}

TEST_CASE("reference table") {
    CHECK(reference_table().size() == 14);
    CHECK(compare_with_reference(count_row, kReferenceFirst, kReferenceLast).empty());
    auto row2 = *reference_row(2);
    CHECK(columns(row2) == std::vector<Int>{2, 1, 1, 0, 0, 1, 1, 1, 1, 0, 0});
    CHECK_FALSE(reference_row(16).has_value());

    auto broken = [](int p) {
        CountRow r = count_row(p);
        r.q1 += 1;
        return r;
    };
    auto mismatches = compare_with_reference(broken, 2, 15);
    REQUIRE(mismatches.size() == 14);
    CHECK(mismatches.front().column == "q1");
}

TEST_CASE("checked arithmetic") {
    CHECK(pow2(10) == 1024);
    CHECK_THROWS_AS(pow2(127), OverflowError);
    Int big = pow2(126);
    CHECK_THROWS_AS(checked_mul(big, 2), OverflowError);
    CHECK_THROWS_AS(checked_add(big, big), OverflowError);
    CHECK(to_string(Int(-42)) == "-42");
}

TEST_CASE("closed forms stay exact up to period 40") {
    for (int n = 3; n <= 40; ++n) {
        CAPTURE(n);
        CHECK(cyc(Family::Per1, n) == cyc(Family::Per2, n));
        CHECK_NOTHROW(count_row(n));
    }
}
