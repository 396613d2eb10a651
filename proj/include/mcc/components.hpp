#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcc/angle.hpp"
#include "mcc/kneading.hpp"
#include "mcc/types.hpp"

namespace mcc {

inline constexpr int kMaxPairingPeriod = 20;

/// Two angles of exact period p, low < high, with their numerators over 2^p - 1.
struct AnglePair {
    int period = 0;
    std::uint64_t low_num = 0;
    std::uint64_t high_num = 0;

    RationalAngle low() const { return angle_over(low_num, period); }
    RationalAngle high() const { return angle_over(high_num, period); }
    bool contains(std::uint64_t k) const { return k == low_num || k == high_num; }

    friend bool operator==(const AnglePair&, const AnglePair&) = default;
    friend auto operator<=>(const AnglePair&, const AnglePair&) = default;
};

struct HyperbolicComponent {
    int period = 0;
    AnglePair pair;
    bool primitive = false;
    Kneading kneading;
    std::uint64_t label = 0;

    friend bool operator==(const HyperbolicComponent&, const HyperbolicComponent&) = default;
};

/// Non-crossing matching of all exact-period-p angles, sorted by low angle.
/// Built period by period from period 2 upward; cached per process.
const std::vector<AnglePair>& lavaurs_pairs(int p);

/// True when the two angles lie in distinct doubling orbits.
bool is_primitive_pair(const AnglePair& pair);

/// Every component of period p, sorted by low angle.
std::vector<HyperbolicComponent> all_components(int p);
/// Per1: all primitive components. Per2: primitive components outside the wake [1/3, 2/3].
std::vector<HyperbolicComponent> primitive_components(Family m, int p);

/// Numerator of the pair member farther from 1/2, ties toward the smaller numerator.
std::uint64_t display_label(const HyperbolicComponent& h);
std::uint64_t display_label(const AnglePair& pair);

/// The component whose angles are the conjugates of h's.
AnglePair conjugate_pair(const AnglePair& pair);

}  // namespace mcc
