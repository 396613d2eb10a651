#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mcc/types.hpp"

namespace mcc {

/// An exact angle num/den in [0, 1), reduced, with odd denominator.
class RationalAngle {
public:
    RationalAngle() = default;

    std::uint64_t num() const { return num_; }
    std::uint64_t den() const { return den_; }

    /// "num/den"
    std::string str() const;

    friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
    friend std::strong_ordering operator<=>(const RationalAngle& a, const RationalAngle& b);

private:
    friend RationalAngle angle(Int num, Int den);
    RationalAngle(std::uint64_t n, std::uint64_t d) : num_(n), den_(d) {}

    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

/// Reduced representative of num/den mod 1. Rejects even or non-positive denominators.
RationalAngle angle(Int num, Int den);
/// Parses "num/den".
RationalAngle parse_angle(const std::string& text);

RationalAngle double_angle(const RationalAngle& theta);
RationalAngle conjugate(const RationalAngle& theta);

struct AngleOrbit {
    std::vector<RationalAngle> angles;  // starts at the least element
    int period = 0;
};

/// Least p >= 1 with 2^p num == num (mod den).
int exact_period(const RationalAngle& theta);
AngleOrbit orbit(const RationalAngle& theta);

/// The repeating p-digit block of the binary expansion, p = exact period.
std::string binary_cycle(const RationalAngle& theta);

/// theta * (2^p - 1), which is an integer whenever the exact period divides p.
std::uint64_t numerator_over(const RationalAngle& theta, int p);
/// The angle k / (2^p - 1).
RationalAngle angle_over(std::uint64_t k, int p);

}  // namespace mcc
