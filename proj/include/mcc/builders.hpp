#pragma once

#include <array>
#include <string>
#include <vector>

#include "mcc/cell_complex.hpp"

namespace mcc {

enum class Algorithm { Telephone, Bar };

std::string to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& s);

inline constexpr int kMaxBuildPeriod = 20;

/// One edge as seen by the circular sweep.
struct EdgeEvent {
    HyperbolicComponent component;
    std::array<std::string, 2> side_labels;  // necklaces at the low and high angle
    std::uint64_t position = 0;              // low numerator over 2^p - 1
};

/// Sweep input for a family, sorted by position.
std::vector<EdgeEvent> edge_events(Family m, int p);

CellComplex telephone_per1(int p);
CellComplex bar_per1(int p);
CellComplex telephone_per2(int p);

/// Dispatches on family and algorithm; Bar is available for Per1 only.
CellComplex build(Family m, int p, Algorithm a = Algorithm::Telephone);

struct BarSide {
    std::uint64_t label = 0;
    bool barred = false;
    int edge = 0;
};

struct BarFace {
    CycleClass cls;
    std::vector<BarSide> sides;  // barred ascending, then unbarred ascending
};

/// The side lists of the bar method, one per duo, in canonical class order.
std::vector<BarFace> bar_faces(int p);

/// Edges whose two adjacent faces are not the classes of its two perturbations (Per1).
std::vector<std::string> kneading_adjacency_violations(const CellComplex& c);

}  // namespace mcc
