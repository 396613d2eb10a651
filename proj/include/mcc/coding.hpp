#pragma once

#include <string>
#include <vector>

#include "mcc/angle.hpp"
#include "mcc/necklace.hpp"

namespace mcc {

/// Itinerary of the doubling orbit of theta through the three-piece basilica partition,
/// one digit per orbit point starting at theta itself.
std::string basilica_itinerary(const RationalAngle& theta);
/// The canonical ternary necklace of basilica_itinerary. Rejects 0, 1/3 and 2/3.
TernaryNecklace basilica_label(const RationalAngle& theta);

/// Itinerary of theta under t -> -2t with respect to the thirds (m/3, (m+1)/3).
std::string antidoubling_itinerary(const RationalAngle& theta);
TernaryNecklace antidoubling_label(const RationalAngle& theta);

/// How often each admissible necklace of period p arises under the two codings.
struct CodingCensus {
    std::string word;
    int antidoubling_points = 0;  // exact-period-p points of t -> -2t with this label
    int basilica_points = 0;      // exact-period-p doubling angles with this label
};

/// One entry per admissible ternary necklace of period p >= 2, in canonical order.
std::vector<CodingCensus> compare_codings(int p);

}  // namespace mcc
