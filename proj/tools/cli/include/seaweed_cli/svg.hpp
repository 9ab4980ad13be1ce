#pragma once

#include <string>

#include "seaweed/core.hpp"

namespace seaweed::cli {

// Oriented meander as an arc diagram: top edges above the vertex line
// pointing right-to-left, bottom edges below pointing left-to-right.
std::string render_svg(const SeaweedSpec& spec);

}  // namespace seaweed::cli
