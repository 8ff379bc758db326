#include "metallic/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace metallic {

namespace {

constexpr const char* kBlue = "#5b8dd9";
constexpr const char* kYellow = "#f2d14e";
constexpr const char* kGreen = "#67b868";
constexpr const char* kWhite = "#ffffff";
constexpr const char* kBorder = "#333333";
constexpr const char* kText = "#222222";

// fixed decimal rendering for display only (never read back)
std::string dec(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

const char* edge_color(const Label& v) {
  if (v.v0 == 0) return v.v1 == 0 ? kBlue : kYellow;
  return kWhite;
}

const char* combine(const char* h, const char* v) {
  if (h == v) return h;
  if (h == kWhite) return v;
  if (v == kWhite) return h;
  return kGreen;  // a blue and a yellow band cross
}

struct RectSpec {
  double x, y, w, h;
  const char* color;
};

// Interior decoration of one extended tile, in tile-local [0,1]^2
// coordinates, following the paper-style stripe drawings.
std::vector<RectSpec> tile_body(int n, const WangTile& t) {
  FamilyTag tag;
  try {
    tag = classify(n, t);
  } catch (const std::exception&) {
    return {};  // not an extended tile: leave the square plain
  }
  const double third = 1.0 / 3.0;
  switch (tag.family) {
    case Family::white:
      return {};
    case Family::blue:
      if (tag.vertical) return {{third, 0, third, 1, kBlue}};
      return {{0, third, 1, third, kBlue}};
    case Family::yellow:
      if (tag.vertical) return {{third, 0, third, 1, kYellow}};
      return {{0, third, 1, third, kYellow}};
    case Family::green:
      // blue enters, yellow leaves; they overlap in the middle third
      if (tag.vertical)
        return {{third, 0, third, third, kBlue},
                {third, third, third, third, kGreen},
                {third, 2 * third, third, third, kYellow}};
      return {{0, third, third, third, kBlue},
              {third, third, third, third, kGreen},
              {2 * third, third, third, third, kYellow}};
    case Family::antigreen:
      // yellow enters, blue leaves; the middle third stays uncovered
      if (tag.vertical)
        return {{third, 0, third, third, kYellow},
                {third, 2 * third, third, third, kBlue}};
      return {{0, third, third, third, kYellow},
              {2 * third, third, third, third, kBlue}};
    case Family::junction: {
      const char* hl = edge_color(t.left);
      const char* hr = edge_color(t.right);
      const char* vb = edge_color(t.bottom);
      const char* vt = edge_color(t.top);
      std::vector<RectSpec> rects = {{0, third, 0.5, third, hl},
                                     {0.5, third, 0.5, third, hr},
                                     {third, 0, third, 0.5, vb},
                                     {third, 0.5, third, 0.5, vt}};
      // crossing region, one quadrant per half pair
      rects.push_back({third, third, 0.5 - third, 0.5 - third, combine(hl, vb)});
      rects.push_back({0.5, third, 2 * third - 0.5, 0.5 - third, combine(hr, vb)});
      rects.push_back({third, 0.5, 0.5 - third, 2 * third - 0.5, combine(hl, vt)});
      rects.push_back({0.5, 0.5, 2 * third - 0.5, 2 * third - 0.5, combine(hr, vt)});
      return rects;
    }
  }
  return {};
}

void emit_rect(std::ostringstream& out, double x, double y, double w, double h,
               const char* fill) {
  out << "<rect x=\"" << dec(x) << "\" y=\"" << dec(y) << "\" width=\""
      << dec(w) << "\" height=\"" << dec(h) << "\" fill=\"" << fill
      << "\"/>\n";
}

void emit_text(std::ostringstream& out, double x, double y,
               const std::string& body, double size, const char* anchor) {
  // the enclosing group flips y, so every label unflips itself
  out << "<text transform=\"translate(" << dec(x) << "," << dec(y)
      << ") scale(1,-1)\" font-family=\"monospace\" font-size=\"" << dec(size)
      << "\" text-anchor=\"" << anchor << "\" fill=\"" << kText << "\">"
      << body << "</text>\n";
}

void emit_tile(std::ostringstream& out, int n, const WangTile& t, double ox,
               double oy, bool edge_labels, double border_width) {
  out << "<g transform=\"translate(" << dec(ox) << "," << dec(oy) << ")\">\n";
  emit_rect(out, 0, 0, 1, 1, kWhite);
  for (const RectSpec& r : tile_body(n, t))
    emit_rect(out, r.x, r.y, r.w, r.h, r.color);
  out << "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"none\" "
         "stroke=\""
      << kBorder << "\" stroke-width=\"" << dec(border_width) << "\"/>\n";
  if (edge_labels) {
    emit_text(out, 0.94, 0.46, label_word(n, t.right), 0.12, "end");
    emit_text(out, 0.5, 0.84, label_word(n, t.top), 0.12, "middle");
    emit_text(out, 0.06, 0.46, label_word(n, t.left), 0.12, "start");
    emit_text(out, 0.5, 0.05, label_word(n, t.bottom), 0.12, "middle");
  }
  out << "</g>\n";
}

// document shell: white page, y axis flipped so math coordinates point up
std::string finish(double units_w, double units_h, double scale,
                   const std::string& body) {
  const double pad = 8.0;
  double w = units_w * scale + 2 * pad;
  double h = units_h * scale + 2 * pad;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << dec(w)
      << "\" height=\"" << dec(h) << "\" viewBox=\"0 0 " << dec(w) << " "
      << dec(h) << "\">\n";
  out << "<rect width=\"" << dec(w) << "\" height=\"" << dec(h)
      << "\" fill=\"" << kWhite << "\"/>\n";
  out << "<g transform=\"translate(" << dec(pad) << "," << dec(h - pad)
      << ") scale(" << dec(scale) << ",-" << dec(scale) << ")\">\n";
  out << body;
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace

std::string tile_set_svg(const TileSet& ts) {
  int count = ts.size();
  int cols = std::max(1, (int)std::ceil(std::sqrt((double)count)));
  int rows = (count + cols - 1) / cols;
  const double px = 1.35, py = 1.55;  // room for the caption under each tile
  std::ostringstream body;
  for (int k = 0; k < count; ++k) {
    int col = k % cols, row = k / cols;
    double ox = col * px;
    double oy = (rows - 1 - row) * py + 0.35;  // top-left first, reading order
    emit_tile(body, ts.n, ts.tiles[k], ox, oy, true, 0.015);
    std::string caption;
    try {
      caption = classify(ts.n, ts.tiles[k]).name();
    } catch (const std::exception&) {
      caption = "?";
    }
    emit_text(body, ox + 0.5, oy - 0.26, caption, 0.13, "middle");
  }
  return finish(cols * px - (px - 1), rows * py, 64, body.str());
}

std::string window_svg(const Window& w) {
  std::ostringstream body;
  for (long j = w.j0; j < w.j0 + w.height; ++j)
    for (long i = w.i0; i < w.i0 + w.width; ++i)
      emit_tile(body, w.n, w.tile(i, j), double(i - w.i0), double(j - w.j0),
                true, 0.01);
  body << "<rect x=\"0\" y=\"0\" width=\"" << dec(w.width) << "\" height=\""
       << dec(w.height) << "\" fill=\"none\" stroke=\"" << kBorder
       << "\" stroke-width=\"0.03\"/>\n";
  return finish(w.width, w.height, 48, body.str());
}

std::string partition_svg(const PartitionDoc& doc) {
  std::ostringstream body;
  for (size_t k = 0; k < doc.partition.atoms.size(); ++k) {
    const std::vector<int>& label = doc.labels[k];
    Label head{label[0], label.size() > 1 ? label[1] : 0,
               label.size() > 2 ? label[2] : 0};
    const char* fill = edge_color(head);
    for (const ConvexPolygon& piece : doc.partition.atoms[k]) {
      body << "<path d=\"";
      const std::vector<Point>& vs = piece.vertices();
      for (size_t v = 0; v < vs.size(); ++v)
        body << (v == 0 ? "M" : " L") << dec(vs[v].x.to_double()) << " "
             << dec(vs[v].y.to_double());
      body << " Z\" fill=\"" << fill << "\" stroke=\"" << kBorder
           << "\" stroke-width=\"0.004\"/>\n";
    }
  }
  body << "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"none\" "
          "stroke=\""
       << kBorder << "\" stroke-width=\"0.008\"/>\n";
  return finish(1, 1, 512, body.str());
}

std::string substitution_svg(const SubstitutionDoc& doc) {
  int count = doc.subst.size();
  int cols = std::max(1, (int)std::ceil(std::sqrt((double)count)));
  int rows = (count + cols - 1) / cols;
  const double ts = 0.38;  // mini-tile side
  // widest rule block determines the cell pitch
  int max_w = 1, max_h = 1;
  for (int k = 0; k < count; ++k) {
    max_w = std::max(max_w, doc.subst.cols(k));
    max_h = std::max(max_h, doc.subst.rows(k));
  }
  const double px = 0.8 + max_w * ts + 0.3, py = max_h * ts + 0.45;
  std::ostringstream body;
  for (int k = 0; k < count; ++k) {
    int col = k % cols, row = k / cols;
    double cx = col * px;
    double cy = (rows - 1 - row) * py + 0.2;
    double block_h = doc.subst.rows(k) * ts;
    emit_text(body, cx + 0.3, cy + block_h / 2 - 0.07,
              std::to_string(k), 0.18, "middle");
    for (int r = 0; r < doc.subst.rows(k); ++r)
      for (int c = 0; c < doc.subst.cols(k); ++c) {
        int entry = doc.subst.rules[k][r][c];
        double ox = cx + 0.7 + c * ts;
        double oy = cy + r * ts;  // row 0 at the bottom
        body << "<g transform=\"translate(" << dec(ox) << "," << dec(oy)
             << ") scale(" << dec(ts) << ")\">\n";
        emit_rect(body, 0, 0, 1, 1, kWhite);
        if (entry >= 0 && entry < doc.tile_order.size())
          for (const RectSpec& rs : tile_body(doc.n, doc.tile_order.tiles[entry]))
            emit_rect(body, rs.x, rs.y, rs.w, rs.h, rs.color);
        body << "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" "
                "fill=\"none\" stroke=\""
             << kBorder << "\" stroke-width=\"0.03\"/>\n";
        emit_text(body, 0.5, 0.38, std::to_string(entry), 0.3, "middle");
        body << "</g>\n";
      }
  }
  return finish(cols * px, rows * py, 64, body.str());
}

}  // namespace metallic
