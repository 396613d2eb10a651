#pragma once

#include <string>
#include <utility>

#include "mcc/angle.hpp"
#include "mcc/necklace.hpp"

namespace mcc {

/// sigma_1 ... sigma_{p-1} followed by the terminal marker '*'.
struct Kneading {
    std::string prefix;

    int period() const { return static_cast<int>(prefix.size()) + 1; }
    std::string str() const { return prefix + "*"; }

    friend bool operator==(const Kneading&, const Kneading&) = default;
    friend auto operator<=>(const Kneading&, const Kneading&) = default;
};

/// Parses "1000*".
Kneading parse_kneading(const std::string& text);

/// Digit j is 1 iff 2^j theta lies in the open half circle (theta/2, (theta+1)/2).
Kneading kneading_of_angle(const RationalAngle& theta);

/// (k0, k1): the terminal marker replaced by 0 resp. 1, canonicalized.
/// Throws InvalidArgument when either word fails to have exact period p.
std::pair<BinaryNecklace, BinaryNecklace> perturbations(const Kneading& k);

}  // namespace mcc
