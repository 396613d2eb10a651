#include <algorithm>

#include "doctest.h"
#include "mcc/components.hpp"
#include "mcc/counting.hpp"
#include "oracles.hpp"

using namespace mcc;

namespace {

std::vector<std::uint64_t> labels(const std::vector<HyperbolicComponent>& comps) {
    std::vector<std::uint64_t> out;
    for (auto& h : comps) out.push_back(display_label(h));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("lavaurs pairing at period 3") {
    auto& pairs = lavaurs_pairs(3);
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0] == AnglePair{3, 1, 2});
    CHECK(pairs[1] == AnglePair{3, 3, 4});
    CHECK(pairs[2] == AnglePair{3, 5, 6});
    CHECK_FALSE(is_primitive_pair(pairs[0]));
    CHECK(is_primitive_pair(pairs[1]));
    CHECK(pairs[1].low().str() == "3/7");
    CHECK_THROWS_AS(lavaurs_pairs(kMaxPairingPeriod + 1), InvalidArgument);
}

TEST_CASE("lavaurs pairing is non-crossing and complete") {
    for (int p = 2; p <= 12; ++p) {
        CAPTURE(p);
        auto& pairs = lavaurs_pairs(p);
        CHECK(Int(pairs.size()) == counting::hyp(Family::Per1, p));
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            for (std::size_t j = i + 1; j < pairs.size(); ++j) CHECK_FALSE(oracle::chords_cross(pairs[i], pairs[j]));
        }
        std::set<std::uint64_t> used;
        for (auto& pr : pairs) {
            used.insert(pr.low_num);
            used.insert(pr.high_num);
        }
        CHECK(int(used.size()) == oracle::exact_period_angles(p));
    }
}

TEST_CASE("paired angles share their kneading sequence") {
    for (int p = 2; p <= 14; ++p) {
        CAPTURE(p);
        int primitive = 0;
        for (auto& pr : lavaurs_pairs(p)) {
            CHECK(kneading_of_angle(pr.low()) == kneading_of_angle(pr.high()));
            primitive += is_primitive_pair(pr);
        }
        CHECK(primitive == counting::prim(Family::Per1, p));
        CHECK(Int(primitive_components(Family::Per2, p).size()) == counting::prim(Family::Per2, p));
    }
}

TEST_CASE("primitive components at period 5") {
    CHECK(labels(primitive_components(Family::Per1, 5)) ==
          std::vector<std::uint64_t>{3, 5, 7, 11, 13, 14, 15, 20, 24, 26, 28});
    std::vector<std::pair<std::uint64_t, std::uint64_t>> per2;
    for (auto& h : primitive_components(Family::Per2, 5)) per2.emplace_back(h.pair.low_num, h.pair.high_num);
    CHECK(per2 == std::vector<std::pair<std::uint64_t, std::uint64_t>>{
                      {3, 4}, {5, 6}, {7, 8}, {23, 24}, {25, 26}, {27, 28}});
    CHECK(primitive_components(Family::Per2, 3).empty());
    CHECK(primitive_components(Family::Per1, 3).size() == 1);
}

TEST_CASE("display labels") {
    CHECK(display_label(AnglePair{5, 3, 4}) == 3);
    CHECK(display_label(AnglePair{5, 27, 28}) == 28);
    CHECK(display_label(AnglePair{5, 13, 18}) == 13);
    CHECK(conjugate_pair(AnglePair{5, 3, 4}) == AnglePair{5, 27, 28});
    CHECK(conjugate_pair(AnglePair{5, 13, 18}) == AnglePair{5, 13, 18});
}
