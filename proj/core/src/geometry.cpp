#include "metallic/geometry.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace metallic {

namespace {

// cross product of (a - o) and (b - o); positive = left turn
QuadNum cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// (x, y)-lexicographic comparison of whole vertex lists
bool poly_less(const ConvexPolygon& a, const ConvexPolygon& b) {
  const auto& u = a.vertices();
  const auto& w = b.vertices();
  for (size_t i = 0; i < u.size() && i < w.size(); ++i) {
    if (u[i] == w[i]) continue;
    return lex_less(u[i], w[i]);
  }
  return u.size() < w.size();
}

}  // namespace

bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

HalfPlane HalfPlane::complement() const {
  int n = c0.field();
  QuadNum zero = QuadNum::rational(0, n);
  return {zero - c0, zero - cx, zero - cy};
}

ConvexPolygon::ConvexPolygon(std::vector<Point> pts) : v_(std::move(pts)) {
  // drop consecutive duplicates (cyclically)
  auto dedupe = [&] {
    for (size_t i = 0; i < v_.size();) {
      if (v_.size() > 1 && v_[i] == v_[(i + 1) % v_.size()])
        v_.erase(v_.begin() + i);
      else
        ++i;
    }
  };
  dedupe();
  // drop vertices that lie on the segment joining their neighbors
  bool changed = true;
  while (changed && v_.size() >= 3) {
    changed = false;
    for (size_t i = 0; i < v_.size(); ++i) {
      const Point& prev = v_[(i + v_.size() - 1) % v_.size()];
      const Point& next = v_[(i + 1) % v_.size()];
      if (cross(prev, v_[i], next).sign() == 0) {
        v_.erase(v_.begin() + i);
        changed = true;
        break;
      }
    }
  }
  if (v_.size() < 3) {
    v_.clear();
    return;
  }
  // orient counterclockwise
  QuadNum twice = v_[0].x - v_[0].x;  // zero of the right field
  for (size_t i = 0; i < v_.size(); ++i) {
    const Point& a = v_[i];
    const Point& b = v_[(i + 1) % v_.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  int s = twice.sign();
  if (s == 0) {
    v_.clear();
    return;
  }
  if (s < 0) std::reverse(v_.begin(), v_.end());
  // rotate the lexicographically smallest vertex to the front
  size_t best = 0;
  for (size_t i = 1; i < v_.size(); ++i)
    if (lex_less(v_[i], v_[best])) best = i;
  std::rotate(v_.begin(), v_.begin() + best, v_.end());
  // the result of any supported construction is convex
  for (size_t i = 0; i < v_.size(); ++i) {
    const Point& prev = v_[(i + v_.size() - 1) % v_.size()];
    const Point& next = v_[(i + 1) % v_.size()];
    if (cross(prev, v_[i], next).sign() <= 0)
      throw std::logic_error("ConvexPolygon: vertex list is not convex");
  }
}

ConvexPolygon ConvexPolygon::unit_square(int n) {
  QuadNum zero = QuadNum::rational(0, n), one = QuadNum::rational(1, n);
  return rectangle(zero, zero, one, one);
}

ConvexPolygon ConvexPolygon::rectangle(const QuadNum& x0, const QuadNum& y0,
                                       const QuadNum& x1, const QuadNum& y1) {
  return ConvexPolygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

int ConvexPolygon::field() const { return v_.empty() ? 0 : v_[0].x.field(); }

QuadNum ConvexPolygon::area() const {
  if (v_.empty()) return QuadNum();
  QuadNum twice = v_[0].x - v_[0].x;
  for (size_t i = 0; i < v_.size(); ++i) {
    const Point& a = v_[i];
    const Point& b = v_[(i + 1) % v_.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice * QuadNum::rational(Rat(1, 2), twice.field());
}

ConvexPolygon ConvexPolygon::clip(const HalfPlane& h) const {
  if (empty()) return {};
  std::vector<Point> out;
  for (size_t i = 0; i < v_.size(); ++i) {
    const Point& cur = v_[i];
    const Point& nxt = v_[(i + 1) % v_.size()];
    QuadNum dc = h.eval(cur), dn = h.eval(nxt);
    int sc = dc.sign(), sn = dn.sign();
    if (sc >= 0) out.push_back(cur);
    if (sc * sn < 0) {
      QuadNum t = dc / (dc - dn);
      out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
    }
  }
  return ConvexPolygon(std::move(out));
}

ConvexPolygon ConvexPolygon::intersect(const ConvexPolygon& other) const {
  if (empty() || other.empty()) return {};
  ConvexPolygon r = *this;
  const auto& w = other.vertices();
  for (size_t i = 0; i < w.size() && !r.empty(); ++i) {
    const Point& a = w[i];
    const Point& b = w[(i + 1) % w.size()];
    r = r.clip({a.x * b.y - a.y * b.x, a.y - b.y, b.x - a.x});
  }
  return r;
}

ConvexPolygon ConvexPolygon::translate(const QuadNum& dx,
                                       const QuadNum& dy) const {
  std::vector<Point> pts;
  pts.reserve(v_.size());
  for (const Point& p : v_) pts.push_back({p.x + dx, p.y + dy});
  return ConvexPolygon(std::move(pts));
}

ConvexPolygon ConvexPolygon::scale_about_origin(const QuadNum& f,
                                                const QuadNum& dx,
                                                const QuadNum& dy) const {
  std::vector<Point> pts;
  pts.reserve(v_.size());
  for (const Point& p : v_) pts.push_back({f * p.x + dx, f * p.y + dy});
  return ConvexPolygon(std::move(pts));
}

ConvexPolygon ConvexPolygon::swap_xy() const {
  std::vector<Point> pts;
  pts.reserve(v_.size());
  for (const Point& p : v_) pts.push_back({p.y, p.x});
  return ConvexPolygon(std::move(pts));
}

bool ConvexPolygon::contains(const Point& p) const {
  if (empty()) return false;
  for (size_t i = 0; i < v_.size(); ++i) {
    if (cross(v_[i], v_[(i + 1) % v_.size()], p).sign() < 0) return false;
  }
  return true;
}

bool ConvexPolygon::contains(const ConvexPolygon& other) const {
  for (const Point& p : other.vertices())
    if (!contains(p)) return false;
  return !other.empty() && !empty();
}

std::vector<ConvexPolygon> translate_mod1(const ConvexPolygon& p,
                                          const QuadNum& dx,
                                          const QuadNum& dy) {
  std::vector<ConvexPolygon> out;
  if (p.empty()) return out;
  int n = p.field();
  ConvexPolygon q = p.translate(dx, dy);
  QuadNum one = QuadNum::rational(1, n), zero = QuadNum::rational(0, n);
  for (int sx = 0; sx <= 1; ++sx)
    for (int sy = 0; sy <= 1; ++sy) {
      QuadNum lx = QuadNum::rational(sx, n), ly = QuadNum::rational(sy, n);
      ConvexPolygon piece = q.clip({zero - lx, one, zero})        // x >= sx
                                .clip({lx + one, zero - one, zero})  // x <= sx+1
                                .clip({zero - ly, zero, one})        // y >= sy
                                .clip({ly + one, zero, zero - one});  // y <= sy+1
      piece = piece.translate(zero - lx, zero - ly);
      if (!piece.empty()) out.push_back(piece);
    }
  return out;
}

QuadNum LabeledPartition::total_area() const {
  QuadNum sum = QuadNum::rational(0, domain.field());
  for (const auto& pieces : atoms)
    for (const auto& p : pieces) sum += p.area();
  return sum;
}

int LabeledPartition::nonempty_count() const {
  int c = 0;
  for (const auto& pieces : atoms)
    if (!pieces.empty()) ++c;
  return c;
}

int LabeledPartition::atom_at(const Point& p) const {
  int fallback = -1;
  for (int i = 0; i < size(); ++i)
    for (const auto& poly : atoms[i]) {
      if (!poly.contains(p)) continue;
      bool strict = true;
      const auto& v = poly.vertices();
      for (size_t e = 0; e < v.size() && strict; ++e) {
        const Point& a = v[e];
        const Point& b = v[(e + 1) % v.size()];
        HalfPlane h{a.x * b.y - a.y * b.x, a.y - b.y, b.x - a.x};
        if (h.eval(p).sign() == 0) strict = false;
      }
      if (strict) return i;
      if (fallback < 0) fallback = i;
    }
  return fallback;
}

std::vector<ConvexPolygon> atom(int n, const Label& v) {
  if (!in_Vn(n, v)) throw std::invalid_argument("atom: label outside V_n");
  QuadNum zero = QuadNum::rational(0, n), one = QuadNum::rational(1, n);
  QuadNum binv = QuadNum::beta_inv(n), beta = QuadNum::beta(n);
  QuadNum c = QuadNum::beta_star(n) + one;
  ConvexPolygon poly = ConvexPolygon::unit_square(n);
  // v_j <= form_j(x, y) + c <= v_j + 1 for the three forms y, x/beta + y,
  // beta*x + y
  const QuadNum coef[3] = {zero, binv, beta};
  const int want[3] = {v.v0, v.v1, v.v2};
  for (int j = 0; j < 3 && !poly.empty(); ++j) {
    QuadNum lo = QuadNum::rational(want[j], n) - c;
    poly = poly.clip({zero - lo, coef[j], one});            // form >= lo
    poly = poly.clip({lo + one, zero - coef[j], zero - one});  // form <= lo+1
  }
  std::vector<ConvexPolygon> out;
  if (!poly.empty()) out.push_back(poly);
  return out;
}

SidePartitions build_partitions(int n) {
  std::vector<Label> vn = enumerate_Vn(n);
  QuadNum zero = QuadNum::rational(0, n), binv = QuadNum::beta_inv(n);
  SidePartitions sp;
  sp.east.domain = sp.north.domain = sp.west.domain = sp.south.domain =
      ConvexPolygon::unit_square(n);
  sp.east.atoms.resize(vn.size());
  sp.north.atoms.resize(vn.size());
  sp.west.atoms.resize(vn.size());
  sp.south.atoms.resize(vn.size());
  for (size_t i = 0; i < vn.size(); ++i) {
    sp.east.atoms[i] = atom(n, vn[i]);
    for (const auto& piece : sp.east.atoms[i]) {
      sp.north.atoms[i].push_back(piece.swap_xy());
      for (auto& moved : translate_mod1(piece, binv, zero))
        sp.west.atoms[i].push_back(std::move(moved));
    }
    for (const auto& piece : sp.north.atoms[i])
      for (auto& moved : translate_mod1(piece, zero, binv))
        sp.south.atoms[i].push_back(std::move(moved));
  }
  return sp;
}

Refinement refine(const LabeledPartition& P, const LabeledPartition& Q) {
  if (!(P.domain == Q.domain))
    throw std::invalid_argument("refine: partitions have different domains");
  Refinement r;
  r.partition.domain = P.domain;
  for (int i = 0; i < P.size(); ++i)
    for (int j = 0; j < Q.size(); ++j) {
      std::vector<ConvexPolygon> pieces;
      for (const auto& a : P.atoms[i])
        for (const auto& b : Q.atoms[j]) {
          ConvexPolygon c = a.intersect(b);
          if (!c.empty()) pieces.push_back(std::move(c));
        }
      if (!pieces.empty()) {
        r.partition.atoms.push_back(std::move(pieces));
        r.certificate.emplace_back(i, j);
      }
    }
  return r;
}

namespace {

// full refinement with its labels decoded to tiles
std::pair<LabeledPartition, std::vector<WangTile>> refined_with_tiles(int n) {
  std::vector<Label> vn = enumerate_Vn(n);
  SidePartitions sp = build_partitions(n);
  Refinement r1 = refine(sp.east, sp.north);
  Refinement r2 = refine(r1.partition, sp.west);
  Refinement r3 = refine(r2.partition, sp.south);
  std::vector<WangTile> tiles;
  tiles.reserve(r3.certificate.size());
  for (const auto& [k2, bottom] : r3.certificate) {
    const auto& [k1, left] = r2.certificate[k2];
    const auto& [right, top] = r1.certificate[k1];
    tiles.push_back({vn[right], vn[top], vn[left], vn[bottom]});
  }
  return {std::move(r3.partition), std::move(tiles)};
}

}  // namespace

TileSet tiles_of_partition(int n) {
  auto [part, tiles] = refined_with_tiles(n);
  std::sort(tiles.begin(), tiles.end());
  TileSet ts;
  ts.n = n;
  ts.kind = TileSetKind::base;
  ts.tiles = std::move(tiles);
  return ts;
}

LabeledPartition refined_partition(int n) {
  auto [part, tiles] = refined_with_tiles(n);
  TileSet base = metallic_tiles(n);
  LabeledPartition out;
  out.domain = part.domain;
  out.atoms.resize(base.size());
  for (size_t k = 0; k < tiles.size(); ++k) {
    int idx = base.index_of(tiles[k]);
    if (idx < 0)
      throw std::logic_error("refined_partition: atom tile outside the base set");
    if (!out.atoms[idx].empty())
      throw std::logic_error("refined_partition: tile realized twice");
    out.atoms[idx] = std::move(part.atoms[k]);
  }
  for (const auto& pieces : out.atoms)
    if (pieces.empty())
      throw std::logic_error("refined_partition: base tile not realized");
  return out;
}

std::optional<std::vector<int>> equal_up_to_relabeling(
    const LabeledPartition& P, const LabeledPartition& Q) {
  if (!(P.domain == Q.domain) || P.size() != Q.size()) return std::nullopt;
  auto signature = [](std::vector<ConvexPolygon> pieces) {
    std::sort(pieces.begin(), pieces.end(), poly_less);
    return pieces;
  };
  std::vector<std::vector<ConvexPolygon>> qsig(Q.size());
  for (int j = 0; j < Q.size(); ++j) qsig[j] = signature(Q.atoms[j]);
  std::vector<bool> used(Q.size(), false);
  std::vector<int> bij(P.size(), -1);
  for (int i = 0; i < P.size(); ++i) {
    std::vector<ConvexPolygon> s = signature(P.atoms[i]);
    for (int j = 0; j < Q.size(); ++j) {
      if (used[j] || !(qsig[j] == s)) continue;
      bij[i] = j;
      used[j] = true;
      break;
    }
    if (bij[i] < 0) return std::nullopt;
  }
  return bij;
}

namespace {

// the refinement is a pure function of n and moderately expensive to build
const LabeledPartition& refined_partition_cached(int n) {
  static std::mutex m;
  static std::map<int, LabeledPartition> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, refined_partition(n)).first;
  return it->second;
}

}  // namespace

std::vector<ConvexPolygon> pattern_region(int n, const Window& w) {
  const LabeledPartition& part = refined_partition_cached(n);
  QuadNum binv = QuadNum::beta_inv(n);
  std::vector<ConvexPolygon> region;
  bool first = true;
  for (long j = w.j0; j < w.j0 + w.height; ++j)
    for (long i = w.i0; i < w.i0 + w.width; ++i) {
      // shift the tile's atom back by (i, j) steps of the torus rotation
      QuadNum dx = (QuadNum::rational(Rat(-i), n) * binv).frac();
      QuadNum dy = (QuadNum::rational(Rat(-j), n) * binv).frac();
      std::vector<ConvexPolygon> cell;
      for (const auto& piece : part.atoms[w.index(i, j)])
        for (auto& moved : translate_mod1(piece, dx, dy))
          cell.push_back(std::move(moved));
      if (first) {
        region = std::move(cell);
        first = false;
      } else {
        std::vector<ConvexPolygon> next;
        for (const auto& a : region)
          for (const auto& b : cell) {
            ConvexPolygon c = a.intersect(b);
            if (!c.empty()) next.push_back(std::move(c));
          }
        region = std::move(next);
      }
      if (region.empty() && !first) return region;
    }
  return region;
}

// declared in coding.hpp; lives here so the coding module stays free of the
// polygon machinery
bool range_check(int n) {
  if (!(tiles_of_partition(n).tiles == metallic_tiles(n).tiles)) return false;
  for (const auto& wp : witness_points(n))
    if (!(tile_at_closed(n, wp.x, wp.y) == family_tile(n, wp.tag))) return false;
  return true;
}

}  // namespace metallic
