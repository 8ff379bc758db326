#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace metallic {

// Edge color of a Wang tile: an integer triple (v0, v1, v2).  The label
// alphabet V_n consists of the nondecreasing triples with middle entry at
// most 1 and last entry at most n+1; |V_n| = 3n + 4.
struct Label {
  int v0 = 0, v1 = 0, v2 = 0;
  auto operator<=>(const Label&) const = default;
};

bool in_Vn(int n, const Label& v);
std::vector<Label> enumerate_Vn(int n);  // sorted lexicographically

// "003"-style word when n <= 8 (all entries are single digits), bracketed
// triple otherwise.
std::string label_word(int n, const Label& v);

// Wang tile as the quadruple of its edge colors, in the fixed component
// order (right, top, left, bottom).
struct WangTile {
  Label right, top, left, bottom;
  auto operator<=>(const WangTile&) const = default;
};

// Reflection along the diagonal: swaps right<->top and left<->bottom.
WangTile reflect(const WangTile& t);

// The two color-propagation rules.  Both return raw integer triples that may
// fall outside V_n; set constructors do the filtering.  theta computes
// (right, top) from (left, bottom) as right = theta(left, bottom),
// top = theta(bottom, left); psi inverts it: left = psi(right, top),
// bottom = psi(top, right).
Label theta(int n, const Label& u, const Label& v);
Label psi(int n, const Label& r, const Label& t);

enum class TileSetKind { chip, extended, base };

struct TileSet {
  int n = 0;
  TileSetKind kind = TileSetKind::chip;
  std::vector<WangTile> tiles;  // canonical (lexicographic) order, no duplicates

  int index_of(const WangTile& t) const;  // -1 when absent
  bool contains(const WangTile& t) const { return index_of(t) >= 0; }
  int size() const { return static_cast<int>(tiles.size()); }
};

// All instances of the theta-chip: tiles (theta(u,v), theta(v,u), u, v) with
// u, v in V_n and both outputs in V_n.  |chip| = n^2 + 8n + 13.
TileSet chip_tiles(int n);

// The same set assembled from the family templates below; equal to
// chip_tiles(n) as a set.
TileSet extended_tiles(int n);

// The base set of (n+3)^2 tiles: the extended set minus the two stray
// junctions j[1,1,0,0], j[0,0,1,1], minus b[n] and bv[n], minus all
// antigreen tiles.
TileSet metallic_tiles(int n);

enum class Family { white, blue, yellow, green, antigreen, junction };

// Family membership with indices.  Horizontal stripe families carry index i
// (blue/green: 0..n, yellow/antigreen: 1..n); vertical = reflected variant;
// whites carry (i, j) with 1 <= i, j <= n; junctions carry (k, l, r, s) with
// k <= l and r <= s in {0, 1}.
struct FamilyTag {
  Family family = Family::white;
  bool vertical = false;  // meaningful for stripe families only
  int i = 0, j = 0;
  std::array<int, 4> jcode{0, 0, 0, 0};

  std::string name() const;  // "w[1,2]", "b[0]", "bv[0]", "j[0,1,0,0]", ...
  auto operator<=>(const FamilyTag&) const = default;
};

// The template tile for a tag (inverse of classify).
WangTile family_tile(int n, const FamilyTag& tag);

// Unique family tag of a tile of the extended set; throws when the tile is
// not in it.
FamilyTag classify(int n, const WangTile& t);

enum class Corner { NE, SW, NW, SE };

struct DeterminismReport {
  bool ok = true;
  WangTile first, second;  // a violating pair when !ok
};

// A set is corner-deterministic when no two distinct tiles agree on the
// ordered color pair at that corner (NE = (top, right), SW = (bottom, left),
// NW = (top, left), SE = (bottom, right)).
DeterminismReport check_deterministic(const TileSet& ts, Corner corner);

}  // namespace metallic
