#pragma once

// Graphviz rendering of Hasse diagrams.

#include <optional>
#include <string>

#include "pw/priestley.hpp"

namespace pw {

// Points are nodes p0..pn (labelled with the point labels), covers are
// edges drawn upwards. With a focus upset U every node is annotated with
// the operators whose value on U contains it: U, ker, core, reg, cen.
// Throws pw::Error if the focus is not an upset.
std::string export_dot(const FinPriestley& X, std::optional<Mask> focus = std::nullopt);

}  // namespace pw
