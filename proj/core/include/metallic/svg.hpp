#pragma once

#include <string>

#include "metallic/coding.hpp"
#include "metallic/serialize.hpp"
#include "metallic/tiles.hpp"

namespace metallic {

// Standalone SVG documents, byte-identical across runs for equal inputs.
// The mathematical y axis points up via one explicit flip transform; exact
// coordinates are converted to fixed-precision decimals for display only
// and never feed back into computations.
//
// Edge vectors are colored by their prefix: 00* blue, 01* yellow, 11*
// white.  Stripe tiles show the matching horizontal or vertical band,
// green tiles a blue-green-yellow transition, antigreen tiles a gap, and
// junction tiles both bands with green where a blue and a yellow band
// cross.  Partitions are drawn as filled polygons colored by their label
// vector (refinement atoms by the right edge of their tile).
std::string tile_set_svg(const TileSet& ts);
std::string window_svg(const Window& w);
std::string partition_svg(const PartitionDoc& doc);
std::string substitution_svg(const SubstitutionDoc& doc);

}  // namespace metallic
