#include "metallic/tiles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace metallic {

namespace {

void require_n(int n) {
  if (n < 1) throw std::invalid_argument("tile family parameter n must be >= 1");
}

void require_label(int n, const Label& v, const char* who) {
  if (!in_Vn(n, v)) throw std::invalid_argument(std::string(who) + ": label outside V_n");
}

}  // namespace

bool in_Vn(int n, const Label& v) {
  return 0 <= v.v0 && v.v0 <= v.v1 && v.v1 <= 1 && v.v1 <= v.v2 && v.v2 <= n + 1;
}

std::vector<Label> enumerate_Vn(int n) {
  require_n(n);
  std::vector<Label> out;
  for (int v0 = 0; v0 <= 1; ++v0)
    for (int v1 = v0; v1 <= 1; ++v1)
      for (int v2 = v1; v2 <= n + 1; ++v2) out.push_back({v0, v1, v2});
  std::sort(out.begin(), out.end());
  return out;
}

std::string label_word(int n, const Label& v) {
  if (n <= 8)
    return std::to_string(v.v0) + std::to_string(v.v1) + std::to_string(v.v2);
  return "(" + std::to_string(v.v0) + "," + std::to_string(v.v1) + "," +
         std::to_string(v.v2) + ")";
}

WangTile reflect(const WangTile& t) { return {t.top, t.right, t.bottom, t.left}; }

Label theta(int n, const Label& u, const Label& v) {
  require_label(n, u, "theta");
  require_label(n, v, "theta");
  return {u.v0, u.v0 == 0 ? v.v2 - n : 1, v.v0 == 0 ? v.v1 + u.v0 : u.v2 + 1};
}

Label psi(int n, const Label& r, const Label& t) {
  require_label(n, r, "psi");
  require_label(n, t, "psi");
  return {r.v0, r.v0 == 0 ? t.v2 - t.v0 : 1, t.v0 == 0 ? t.v1 + n : r.v2 - 1};
}

int TileSet::index_of(const WangTile& t) const {
  auto it = std::lower_bound(tiles.begin(), tiles.end(), t);
  if (it == tiles.end() || *it != t) return -1;
  return static_cast<int>(it - tiles.begin());
}

namespace {

TileSet finalize(int n, TileSetKind kind, std::vector<WangTile> tiles) {
  std::sort(tiles.begin(), tiles.end());
  if (std::adjacent_find(tiles.begin(), tiles.end()) != tiles.end())
    throw std::logic_error("tile set construction produced a duplicate");
  return {n, kind, std::move(tiles)};
}

// All family template tiles of the extended set, with their tags.
std::vector<std::pair<FamilyTag, WangTile>> family_templates(int n) {
  std::vector<std::pair<FamilyTag, WangTile>> out;
  auto add = [&](FamilyTag tag) { out.emplace_back(tag, family_tile(n, tag)); };
  auto add_both = [&](Family f, int i) {
    add({f, false, i});
    add({f, true, i});
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) add({Family::white, false, i, j});
  for (int i = 0; i <= n; ++i) add_both(Family::blue, i);
  for (int i = 1; i <= n; ++i) add_both(Family::yellow, i);
  for (int i = 0; i <= n; ++i) add_both(Family::green, i);
  for (int i = 1; i <= n; ++i) add_both(Family::antigreen, i);
  for (int k = 0; k <= 1; ++k)
    for (int l = k; l <= 1; ++l)
      for (int r = 0; r <= 1; ++r)
        for (int s = r; s <= 1; ++s)
          add({Family::junction, false, 0, 0, {k, l, r, s}});
  return out;
}

}  // namespace

WangTile family_tile(int n, const FamilyTag& tag) {
  require_n(n);
  WangTile t;
  switch (tag.family) {
    case Family::white:
      t = {{1, 1, tag.i + 1}, {1, 1, tag.j + 1}, {1, 1, tag.i}, {1, 1, tag.j}};
      break;
    case Family::blue:
      t = {{0, 0, tag.i + 1}, {1, 1, 1}, {0, 0, tag.i}, {1, 1, n}};
      break;
    case Family::yellow:
      t = {{0, 1, tag.i + 1}, {1, 1, 2}, {0, 1, tag.i}, {1, 1, n + 1}};
      break;
    case Family::green:
      t = {{0, 1, tag.i + 1}, {1, 1, 1}, {0, 0, tag.i}, {1, 1, n + 1}};
      break;
    case Family::antigreen:
      t = {{0, 0, tag.i + 1}, {1, 1, 2}, {0, 1, tag.i}, {1, 1, n}};
      break;
    case Family::junction: {
      auto [k, l, r, s] = tag.jcode;
      return {{0, k, l}, {0, r, s}, {0, s, n + r}, {0, l, n + k}};
    }
  }
  return tag.vertical ? reflect(t) : t;
}

TileSet chip_tiles(int n) {
  require_n(n);
  std::vector<WangTile> tiles;
  auto labels = enumerate_Vn(n);
  for (const Label& u : labels)
    for (const Label& v : labels) {
      Label right = theta(n, u, v), top = theta(n, v, u);
      if (in_Vn(n, right) && in_Vn(n, top)) tiles.push_back({right, top, u, v});
    }
  return finalize(n, TileSetKind::chip, std::move(tiles));
}

TileSet extended_tiles(int n) {
  require_n(n);
  std::vector<WangTile> tiles;
  for (auto& [tag, tile] : family_templates(n)) tiles.push_back(tile);
  return finalize(n, TileSetKind::extended, std::move(tiles));
}

TileSet metallic_tiles(int n) {
  require_n(n);
  std::vector<WangTile> tiles;
  for (auto& [tag, tile] : family_templates(n)) {
    if (tag.family == Family::antigreen) continue;
    if (tag.family == Family::blue && tag.i == n) continue;
    if (tag.family == Family::junction &&
        (tag.jcode == std::array<int, 4>{1, 1, 0, 0} ||
         tag.jcode == std::array<int, 4>{0, 0, 1, 1}))
      continue;
    tiles.push_back(tile);
  }
  return finalize(n, TileSetKind::base, std::move(tiles));
}

std::string FamilyTag::name() const {
  auto idx = [&](int a) { return "[" + std::to_string(a) + "]"; };
  switch (family) {
    case Family::white:
      return "w[" + std::to_string(i) + "," + std::to_string(j) + "]";
    case Family::blue:
      return (vertical ? "bv" : "b") + idx(i);
    case Family::yellow:
      return (vertical ? "yv" : "y") + idx(i);
    case Family::green:
      return (vertical ? "gv" : "g") + idx(i);
    case Family::antigreen:
      return (vertical ? "av" : "a") + idx(i);
    case Family::junction:
      return "j[" + std::to_string(jcode[0]) + "," + std::to_string(jcode[1]) +
             "," + std::to_string(jcode[2]) + "," + std::to_string(jcode[3]) + "]";
  }
  return "?";
}

FamilyTag classify(int n, const WangTile& t) {
  require_n(n);
  for (auto& [tag, tile] : family_templates(n))
    if (tile == t) return tag;
  throw std::invalid_argument("classify: tile is not in the extended set");
}

DeterminismReport check_deterministic(const TileSet& ts, Corner corner) {
  auto key = [&](const WangTile& t) -> std::pair<Label, Label> {
    switch (corner) {
      case Corner::NE: return {t.top, t.right};
      case Corner::SW: return {t.bottom, t.left};
      case Corner::NW: return {t.top, t.left};
      case Corner::SE: return {t.bottom, t.right};
    }
    throw std::logic_error("unreachable");
  };
  std::map<std::pair<Label, Label>, WangTile> seen;
  for (const WangTile& t : ts.tiles) {
    auto [it, inserted] = seen.emplace(key(t), t);
    if (!inserted) return {false, it->second, t};
  }
  return {};
}

}  // namespace metallic
