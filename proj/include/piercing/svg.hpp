#pragma once

#include <string>

#include "piercing/fractional.hpp"

namespace piercing {

/// Plot of a segment family and a line in its plane. Coordinates are
/// converted to floating point for drawing only.
std::string plane_svg(const SegmentFamily& fam, const StabLine& line, const std::string& title);

}  // namespace piercing
