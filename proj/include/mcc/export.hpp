#pragma once

#include <string>

#include "mcc/cell_complex.hpp"

namespace mcc {

/// Component as {label, period, angles, primitive, kneading}.
std::string component_json(const HyperbolicComponent& h, Family m);

/// Complex as JSON with keys sorted; pretty-printed with two-space indent.
std::string to_json(const CellComplex& c);
/// Complex as an undirected Graphviz graph; faces are listed as comments.
std::string to_dot(const CellComplex& c);
/// Human-readable summary: counts, topology and one line per face.
std::string to_text(const CellComplex& c);

}  // namespace mcc
