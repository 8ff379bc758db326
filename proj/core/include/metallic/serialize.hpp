#pragma once

#include <string>
#include <vector>

#include "metallic/coding.hpp"
#include "metallic/geometry.hpp"
#include "metallic/induction.hpp"
#include "metallic/tiles.hpp"

namespace metallic {

// Tag carried by every JSON document; parsers reject anything else.
inline constexpr const char* kSchemaTag = "metallic-tiler/v1";

// All emitters below are deterministic (two-space indent, sorted keys) and
// every parser accepts exactly the emitted documents, throwing
// std::invalid_argument with a human-readable reason on anything malformed.
// Rationals are "p/q" strings in lowest terms with positive denominator;
// exact coordinates are objects {"a":"p/q","b":"r/s"} meaning a + b*beta,
// with n carried by the enclosing document.

// ---------- tile sets ----------
// {"schema":..., "n":..., "kind":"base|extended|chip", "tiles":[{"right":
// [r0,r1,r2], "top":[...], "left":[...], "bottom":[...]},...]} in canonical
// (lexicographic) order.
std::string tile_set_json(const TileSet& ts);
TileSet parse_tile_set(const std::string& text);

// One tile per line: the four label words right, top, left, bottom
// separated by tabs.
std::string tile_set_tsv(const TileSet& ts);

// ---------- windows ----------
// {"schema":..., "n":..., "tileset":"base", "origin":[i0,j0], "width":...,
// "height":..., "cells":[[idx,...],...]} with cell rows bottom to top.
std::string window_json(const Window& w);
Window parse_window(const std::string& text);

// ---------- partitions ----------
// A partition together with one label per atom: the V_n triple for the four
// side partitions, the twelve entries right+top+left+bottom of the matching
// base tile for the refinement.  The domain is always the unit square, so
// the document leaves it implicit.
struct PartitionDoc {
  int n = 0;
  std::string name;            // east|north|west|south|refined
  LabeledPartition partition;  // atoms aligned with labels
  std::vector<std::vector<int>> labels;
};
PartitionDoc named_partition(int n, const std::string& name);

// {"schema":..., "n":..., "name":..., "atoms":[{"label":[...], "polygons":
// [[[xobj,yobj],...],...]},...]} with one vertex list per convex piece.
std::string partition_json(const PartitionDoc& doc);
PartitionDoc parse_partition(const std::string& text);

// ---------- substitutions ----------
struct SubstitutionDoc {
  int n = 0;
  Substitution2d subst;
  TileSet tile_order;  // rule labels index into this set (canonical order)
};

// {"schema":..., "n":..., "rules":{"<label>":[["<idx>",...],...],...},
// "tile_order":[tile objects]} with rule rows bottom to top; rule keys and
// entries are rendered as decimal strings.
std::string substitution_json(const SubstitutionDoc& doc);
SubstitutionDoc parse_substitution(const std::string& text);

}  // namespace metallic
