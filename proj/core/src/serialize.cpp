#include "metallic/serialize.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "metallic/quadfield.hpp"

namespace metallic {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("document: " + what);
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) bad("not well-formed JSON");
  return j;
}

const json& need(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key \"") + key + "\"");
  return *it;
}

void check_schema(const json& j) {
  const json& tag = need(j, "schema");
  if (!tag.is_string() || tag.get<std::string>() != kSchemaTag)
    bad(std::string("schema is not \"") + kSchemaTag + "\"");
}

int need_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " is not an integer");
  return j.get<int>();
}

int need_n(const json& j) {
  int n = need_int(need(j, "n"), "\"n\"");
  if (n < 1) bad("\"n\" must be at least 1");
  return n;
}

json label_json(const Label& v) { return json::array({v.v0, v.v1, v.v2}); }

Label parse_label(const json& j, int n) {
  if (!j.is_array() || j.size() != 3) bad("label is not a triple");
  Label v{need_int(j[0], "label entry"), need_int(j[1], "label entry"),
          need_int(j[2], "label entry")};
  if (!in_Vn(n, v)) bad("label " + label_word(n, v) + " is outside V_n");
  return v;
}

json tile_json(const WangTile& t) {
  return json{{"right", label_json(t.right)},
              {"top", label_json(t.top)},
              {"left", label_json(t.left)},
              {"bottom", label_json(t.bottom)}};
}

WangTile parse_tile(const json& j, int n) {
  if (!j.is_object()) bad("tile is not an object");
  return WangTile{parse_label(need(j, "right"), n),
                  parse_label(need(j, "top"), n),
                  parse_label(need(j, "left"), n),
                  parse_label(need(j, "bottom"), n)};
}

// canonical order doubles as a duplicate check
std::vector<WangTile> parse_tile_array(const json& j, int n) {
  if (!j.is_array()) bad("tile list is not an array");
  std::vector<WangTile> tiles;
  tiles.reserve(j.size());
  for (const json& tj : j) {
    WangTile t = parse_tile(tj, n);
    if (!tiles.empty() && !(tiles.back() < t))
      bad("tiles are not in canonical order");
    tiles.push_back(t);
  }
  return tiles;
}

json quad_json(const QuadNum& x) {
  return json{{"a", rat_str(x.a())}, {"b", rat_str(x.b())}};
}

QuadNum parse_quad(const json& j, int n) {
  if (!j.is_object()) bad("coordinate is not an object");
  const json& a = need(j, "a");
  const json& b = need(j, "b");
  if (!a.is_string() || !b.is_string()) bad("coordinate parts are not strings");
  try {
    return QuadNum(parse_rat(a.get<std::string>()),
                   parse_rat(b.get<std::string>()), n);
  } catch (const std::exception& e) {
    bad(std::string("coordinate: ") + e.what());
  }
}

const char* kind_name(TileSetKind kind) {
  switch (kind) {
    case TileSetKind::chip: return "chip";
    case TileSetKind::extended: return "extended";
    case TileSetKind::base: return "base";
  }
  throw std::logic_error("unreachable tile-set kind");
}

TileSetKind parse_kind(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "chip") return TileSetKind::chip;
    if (s == "extended") return TileSetKind::extended;
    if (s == "base") return TileSetKind::base;
  }
  bad("\"kind\" is not one of chip|extended|base");
}

}  // namespace

std::string tile_set_json(const TileSet& ts) {
  json tiles = json::array();
  for (const WangTile& t : ts.tiles) tiles.push_back(tile_json(t));
  json doc{{"schema", kSchemaTag},
           {"n", ts.n},
           {"kind", kind_name(ts.kind)},
           {"tiles", std::move(tiles)}};
  return doc.dump(2) + "\n";
}

TileSet parse_tile_set(const std::string& text) {
  json j = parse_text(text);
  check_schema(j);
  TileSet ts;
  ts.n = need_n(j);
  ts.kind = parse_kind(need(j, "kind"));
  ts.tiles = parse_tile_array(need(j, "tiles"), ts.n);
  return ts;
}

std::string tile_set_tsv(const TileSet& ts) {
  std::ostringstream out;
  for (const WangTile& t : ts.tiles)
    out << label_word(ts.n, t.right) << '\t' << label_word(ts.n, t.top)
        << '\t' << label_word(ts.n, t.left) << '\t'
        << label_word(ts.n, t.bottom) << '\n';
  return out.str();
}

std::string window_json(const Window& w) {
  json doc{{"schema", kSchemaTag},
           {"n", w.n},
           {"tileset", "base"},
           {"origin", json::array({w.i0, w.j0})},
           {"width", w.width},
           {"height", w.height},
           {"cells", w.cells}};
  return doc.dump(2) + "\n";
}

Window parse_window(const std::string& text) {
  json j = parse_text(text);
  check_schema(j);
  Window w;
  w.n = need_n(j);
  const json& set = need(j, "tileset");
  if (!set.is_string() || set.get<std::string>() != "base")
    bad("\"tileset\" must be \"base\"");
  w.tiles = metallic_tiles(w.n);
  const json& origin = need(j, "origin");
  if (!origin.is_array() || origin.size() != 2)
    bad("\"origin\" is not a pair");
  if (!origin[0].is_number_integer() || !origin[1].is_number_integer())
    bad("\"origin\" entries are not integers");
  w.i0 = origin[0].get<long>();
  w.j0 = origin[1].get<long>();
  w.width = need_int(need(j, "width"), "\"width\"");
  w.height = need_int(need(j, "height"), "\"height\"");
  if (w.width < 1 || w.height < 1) bad("window dimensions must be positive");
  const json& cells = need(j, "cells");
  if (!cells.is_array() || static_cast<int>(cells.size()) != w.height)
    bad("\"cells\" must hold one row per unit of height");
  int count = w.tiles.size();
  for (const json& row : cells) {
    if (!row.is_array() || static_cast<int>(row.size()) != w.width)
      bad("every cell row must have \"width\" entries");
    std::vector<int> parsed;
    parsed.reserve(row.size());
    for (const json& cell : row) {
      int idx = need_int(cell, "cell");
      if (idx < 0 || idx >= count) bad("cell index outside the tile set");
      parsed.push_back(idx);
    }
    w.cells.push_back(std::move(parsed));
  }
  return w;
}

PartitionDoc named_partition(int n, const std::string& name) {
  PartitionDoc doc;
  doc.n = n;
  doc.name = name;
  if (name == "refined") {
    doc.partition = refined_partition(n);
    for (const WangTile& t : metallic_tiles(n).tiles)
      doc.labels.push_back({t.right.v0, t.right.v1, t.right.v2, t.top.v0,
                            t.top.v1, t.top.v2, t.left.v0, t.left.v1,
                            t.left.v2, t.bottom.v0, t.bottom.v1, t.bottom.v2});
    return doc;
  }
  SidePartitions sides = build_partitions(n);
  if (name == "east")
    doc.partition = std::move(sides.east);
  else if (name == "north")
    doc.partition = std::move(sides.north);
  else if (name == "west")
    doc.partition = std::move(sides.west);
  else if (name == "south")
    doc.partition = std::move(sides.south);
  else
    throw std::invalid_argument("unknown partition name: " + name);
  for (const Label& v : enumerate_Vn(n)) doc.labels.push_back({v.v0, v.v1, v.v2});
  return doc;
}

std::string partition_json(const PartitionDoc& doc) {
  if (doc.partition.atoms.size() != doc.labels.size())
    throw std::invalid_argument("partition document: labels misaligned");
  json atoms = json::array();
  for (size_t k = 0; k < doc.labels.size(); ++k) {
    json polygons = json::array();
    for (const ConvexPolygon& piece : doc.partition.atoms[k]) {
      json vertices = json::array();
      for (const Point& p : piece.vertices())
        vertices.push_back(json::array({quad_json(p.x), quad_json(p.y)}));
      polygons.push_back(std::move(vertices));
    }
    atoms.push_back(json{{"label", doc.labels[k]},
                         {"polygons", std::move(polygons)}});
  }
  json out{{"schema", kSchemaTag},
           {"n", doc.n},
           {"name", doc.name},
           {"atoms", std::move(atoms)}};
  return out.dump(2) + "\n";
}

PartitionDoc parse_partition(const std::string& text) {
  json j = parse_text(text);
  check_schema(j);
  PartitionDoc doc;
  doc.n = need_n(j);
  const json& name = need(j, "name");
  if (!name.is_string()) bad("\"name\" is not a string");
  doc.name = name.get<std::string>();
  bool refined = doc.name == "refined";
  if (!refined && doc.name != "east" && doc.name != "north" &&
      doc.name != "west" && doc.name != "south")
    bad("unknown partition name \"" + doc.name + "\"");
  size_t label_width = refined ? 12 : 3;
  doc.partition.domain = ConvexPolygon::unit_square(doc.n);
  const json& atoms = need(j, "atoms");
  if (!atoms.is_array()) bad("\"atoms\" is not an array");
  for (const json& aj : atoms) {
    if (!aj.is_object()) bad("atom is not an object");
    const json& lj = need(aj, "label");
    if (!lj.is_array() || lj.size() != label_width)
      bad("atom label has the wrong arity");
    std::vector<int> label;
    for (const json& entry : lj) label.push_back(need_int(entry, "label entry"));
    const json& pj = need(aj, "polygons");
    if (!pj.is_array()) bad("\"polygons\" is not an array");
    std::vector<ConvexPolygon> pieces;
    for (const json& poly : pj) {
      if (!poly.is_array()) bad("polygon is not an array");
      std::vector<Point> vertices;
      for (const json& vj : poly) {
        if (!vj.is_array() || vj.size() != 2) bad("vertex is not a pair");
        vertices.push_back({parse_quad(vj[0], doc.n), parse_quad(vj[1], doc.n)});
      }
      try {
        pieces.emplace_back(std::move(vertices));
      } catch (const std::logic_error& e) {
        bad(std::string("polygon: ") + e.what());
      }
    }
    doc.labels.push_back(std::move(label));
    doc.partition.atoms.push_back(std::move(pieces));
  }
  return doc;
}

std::string substitution_json(const SubstitutionDoc& doc) {
  json rules = json::object();
  for (int k = 0; k < doc.subst.size(); ++k) {
    json block = json::array();
    for (const std::vector<int>& row : doc.subst.rules[k]) {
      json out_row = json::array();
      for (int entry : row) out_row.push_back(std::to_string(entry));
      block.push_back(std::move(out_row));
    }
    rules[std::to_string(k)] = std::move(block);
  }
  json order = json::array();
  for (const WangTile& t : doc.tile_order.tiles) order.push_back(tile_json(t));
  json out{{"schema", kSchemaTag},
           {"n", doc.n},
           {"rules", std::move(rules)},
           {"tile_order", std::move(order)}};
  return out.dump(2) + "\n";
}

SubstitutionDoc parse_substitution(const std::string& text) {
  json j = parse_text(text);
  check_schema(j);
  SubstitutionDoc doc;
  doc.n = need_n(j);
  doc.tile_order.n = doc.n;
  doc.tile_order.kind = TileSetKind::base;
  doc.tile_order.tiles = parse_tile_array(need(j, "tile_order"), doc.n);
  const json& rules = need(j, "rules");
  if (!rules.is_object()) bad("\"rules\" is not an object");
  int count = static_cast<int>(rules.size());
  if (count != doc.tile_order.size())
    bad("rule count differs from the tile order");
  doc.subst.rules.resize(count);
  for (const auto& [key, block] : rules.items()) {
    int k = -1;
    try {
      size_t used = 0;
      k = std::stoi(key, &used);
      if (used != key.size()) k = -1;
    } catch (const std::exception&) {
    }
    if (k < 0 || k >= count) bad("rule key \"" + key + "\" is out of range");
    if (!block.is_array() || block.empty()) bad("rule block is not an array");
    std::vector<std::vector<int>> parsed;
    for (const json& row : block) {
      if (!row.is_array() || row.empty()) bad("rule row is not an array");
      if (!parsed.empty() && row.size() != parsed.back().size())
        bad("rule block is ragged");
      std::vector<int> out_row;
      for (const json& entry : row) {
        if (!entry.is_string()) bad("rule entry is not a string");
        std::string word = entry.get<std::string>();
        int idx = -1;
        try {
          size_t used = 0;
          idx = std::stoi(word, &used);
          if (used != word.size()) idx = -1;
        } catch (const std::exception&) {
        }
        if (idx < 0 || idx >= count)
          bad("rule entry \"" + word + "\" is out of range");
        out_row.push_back(idx);
      }
      parsed.push_back(std::move(out_row));
    }
    doc.subst.rules[k] = std::move(parsed);
  }
  for (int k = 0; k < count; ++k)
    if (doc.subst.rules[k].empty()) bad("missing rule for label " + std::to_string(k));
  return doc;
}

}  // namespace metallic
