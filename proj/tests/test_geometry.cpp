#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "metallic/coding.hpp"
#include "metallic/geometry.hpp"
#include "metallic/tiles.hpp"
#include "testutil.hpp"

using namespace metallic;
using namespace testutil;

namespace {

QuadNum q(Rat r, int n) { return QuadNum::rational(std::move(r), n); }

Point rand_point(std::mt19937_64& g, int n) {
  return {q(rand_rat01(g), n), q(rand_rat01(g), n)};
}

}  // namespace

TEST_CASE("canonical form fixes orientation, rotation, and degeneracies") {
  int n = 3;
  QuadNum zero = q(0, n), one = q(1, n), half = q(Rat(1, 2), n);
  // clockwise square with a duplicate and a collinear midpoint
  ConvexPolygon messy({{zero, one},
                       {one, one},
                       {one, one},
                       {one, half},
                       {one, zero},
                       {zero, zero}});
  CHECK(messy == ConvexPolygon::unit_square(n));
  CHECK(messy.vertices().size() == 4);
  // the first vertex is the lexicographic minimum
  for (const Point& p : messy.vertices())
    CHECK_FALSE(lex_less(p, messy.vertices()[0]));

  CHECK(ConvexPolygon({{zero, zero}, {one, one}}).empty());
  // zero area collapses to empty
  CHECK(ConvexPolygon({{zero, zero}, {half, half}, {one, one}}).empty());
  CHECK(ConvexPolygon().empty());
  CHECK(ConvexPolygon().field() == 0);
}

TEST_CASE("clipping splits area exactly") {
  for (int n : {1, 3}) {
    auto g = rng(701 + n);
    ConvexPolygon sq = ConvexPolygon::unit_square(n);
    QuadNum one = q(1, n);
    for (int t = 0; t < 30; ++t) {
      // a line through two random points of the square, both sides
      Point a = rand_point(g, n), b = rand_point(g, n);
      if (a == b) continue;
      HalfPlane h{a.x * b.y - a.y * b.x, a.y - b.y, b.x - a.x};
      ConvexPolygon lo = sq.clip(h), hi = sq.clip(h.complement());
      QuadNum total = q(0, n);
      if (!lo.empty()) total += lo.area();
      if (!hi.empty()) total += hi.area();
      CHECK(total == one);
    }
    // clipping away everything / nothing
    QuadNum two = q(2, n), zero = q(0, n);
    CHECK(sq.clip({zero - two, one, zero}).empty());     // x >= 2
    CHECK(sq.clip({two, zero - one, zero}) == sq);       // x <= 2
  }
}

TEST_CASE("intersection of square and triangle") {
  int n = 2;
  QuadNum zero = q(0, n), one = q(1, n);
  QuadNum quarter = q(Rat(1, 4), n), threq = q(Rat(3, 4), n);
  ConvexPolygon tri({{zero, zero}, {one, zero}, {zero, one}});
  ConvexPolygon sq = ConvexPolygon::rectangle(quarter, quarter,
                                              one + quarter, one + quarter);
  ConvexPolygon got = tri.intersect(sq);
  ConvexPolygon want({{quarter, quarter}, {threq, quarter}, {quarter, threq}});
  CHECK(got == want);
  CHECK(got.area() == q(Rat(1, 8), n));
  CHECK(sq.intersect(tri) == want);
  CHECK(tri.intersect(ConvexPolygon()).empty());
}

TEST_CASE("translate, scale, and swap preserve exact area") {
  int n = 3;
  QuadNum binv = QuadNum::beta_inv(n), beta = QuadNum::beta(n);
  QuadNum zero = q(0, n), one = q(1, n);
  ConvexPolygon tri({{zero, zero}, {one, zero}, {zero, binv}});
  QuadNum a = tri.area();
  CHECK(tri.translate(binv, one - binv).area() == a);
  CHECK(tri.scale_about_origin(binv, zero, zero).area() == a * binv * binv);
  // negative factor: a point reflection, orientation survives
  ConvexPolygon flipped = tri.scale_about_origin(zero - beta, one, one);
  CHECK(flipped.area() == a * beta * beta);
  CHECK(flipped.area().sign() > 0);
  CHECK(tri.swap_xy().area() == a);
  CHECK(tri.swap_xy().swap_xy() == tri);
}

TEST_CASE("containment is closed") {
  int n = 1;
  QuadNum zero = q(0, n), one = q(1, n), half = q(Rat(1, 2), n);
  ConvexPolygon sq = ConvexPolygon::unit_square(n);
  CHECK(sq.contains({half, half}));
  CHECK(sq.contains({zero, zero}));    // vertex
  CHECK(sq.contains({one, half}));     // edge
  CHECK_FALSE(sq.contains({one + half, half}));
  ConvexPolygon inner = ConvexPolygon::rectangle(zero, zero, half, one);
  CHECK(sq.contains(inner));
  CHECK_FALSE(inner.contains(sq));
  CHECK_FALSE(sq.contains(ConvexPolygon()));
}

TEST_CASE("torus translation cuts into at most four pieces") {
  int n = 2;
  QuadNum binv = QuadNum::beta_inv(n), zero = q(0, n), one = q(1, n);
  ConvexPolygon sq = ConvexPolygon::unit_square(n);
  auto pieces = translate_mod1(sq, binv, binv);
  CHECK(pieces.size() == 4);
  QuadNum total = q(0, n);
  for (const auto& p : pieces) {
    total += p.area();
    CHECK(sq.contains(p));
  }
  CHECK(total == one);
  // zero shift is the identity
  auto same = translate_mod1(sq, zero, zero);
  REQUIRE(same.size() == 1);
  CHECK(same[0] == sq);
  CHECK(translate_mod1(ConvexPolygon(), binv, binv).empty());
}

TEST_CASE("coding atoms at hand-checked labels") {
  int n = 3;
  QuadNum zero = q(0, n);
  QuadNum binv = QuadNum::beta_inv(n), binv2 = binv * binv;
  // the (0,0,0) atom is the corner triangle with legs 1/beta^2 and 1/beta
  auto corner = atom(n, {0, 0, 0});
  REQUIRE(corner.size() == 1);
  ConvexPolygon want({{zero, zero}, {binv2, zero}, {zero, binv}});
  CHECK(corner[0] == want);
  CHECK(corner[0].area() == QuadNum(Rat(-33, 2), 5, n));  // beta^-3 / 2
  // the one label of V_n that no point attains
  CHECK(atom(n, {0, 0, n + 1}).empty());
  CHECK_THROWS_AS(atom(n, {2, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(atom(n, {0, 0, n + 2}), std::invalid_argument);
}

TEST_CASE("side partitions tile the unit square") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    SidePartitions sp = build_partitions(n);
    QuadNum one = q(1, n);
    std::vector<Label> vn = enumerate_Vn(n);
    for (const LabeledPartition* part :
         {&sp.east, &sp.north, &sp.west, &sp.south}) {
      CHECK(part->size() == (int)vn.size());
      CHECK(part->total_area() == one);
      CHECK(part->nonempty_count() == 3 * n + 3);
    }
    // the single unattained label
    for (int i = 0; i < sp.east.size(); ++i) {
      bool unattained = vn[i] == Label{0, 0, n + 1};
      CHECK(sp.east.atoms[i].empty() == unattained);
      CHECK(sp.west.atoms[i].empty() == unattained);
    }
    // reflection and torus translation preserve each label's area
    for (int i = 0; i < sp.east.size(); ++i) {
      QuadNum ae = q(0, n), an = q(0, n), aw = q(0, n), as = q(0, n);
      for (const auto& p : sp.east.atoms[i]) ae += p.area();
      for (const auto& p : sp.north.atoms[i]) an += p.area();
      for (const auto& p : sp.west.atoms[i]) aw += p.area();
      for (const auto& p : sp.south.atoms[i]) as += p.area();
      CHECK(ae == an);
      CHECK(ae == aw);
      CHECK(ae == as);
    }
  }
}

TEST_CASE("refinement carries a valid certificate") {
  int n = 3;
  SidePartitions sp = build_partitions(n);
  // refining a partition with itself keeps exactly the diagonal
  Refinement same = refine(sp.east, sp.east);
  CHECK(same.certificate.size() == (size_t)sp.east.nonempty_count());
  for (auto& [i, j] : same.certificate) CHECK(i == j);
  CHECK(same.partition.total_area() == q(1, n));

  Refinement en = refine(sp.east, sp.north);
  CHECK(en.partition.total_area() == q(1, n));
  CHECK(en.partition.size() == (int)en.certificate.size());
  for (int k = 0; k < en.partition.size(); ++k) {
    auto [i, j] = en.certificate[k];
    // every piece sits inside both named source atoms
    for (const auto& piece : en.partition.atoms[k]) {
      bool in_e = false, in_n = false;
      for (const auto& a : sp.east.atoms[i]) in_e = in_e || a.contains(piece);
      for (const auto& b : sp.north.atoms[j]) in_n = in_n || b.contains(piece);
      CHECK(in_e);
      CHECK(in_n);
    }
  }

  LabeledPartition other;
  other.domain = ConvexPolygon::rectangle(q(0, n), q(0, n), q(2, n), q(1, n));
  other.atoms.push_back({other.domain});
  CHECK_THROWS_AS(refine(sp.east, other), std::invalid_argument);
}

TEST_CASE("full refinement realizes exactly the base tiles") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    TileSet realized = tiles_of_partition(n);
    TileSet base = metallic_tiles(n);
    CHECK(realized.size() == (n + 3) * (n + 3));
    CHECK(realized.tiles == base.tiles);

    LabeledPartition rp = refined_partition(n);
    CHECK(rp.size() == base.size());
    CHECK(rp.total_area() == q(1, n));
    // each tile's region is a single convex piece
    for (const auto& pieces : rp.atoms) CHECK(pieces.size() == 1);
  }
  for (int n = 1; n <= 3; ++n) CHECK(range_check(n));
}

TEST_CASE("atoms agree with the coding map pointwise") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    auto g = rng(702 + n);
    LabeledPartition rp = refined_partition(n);
    TileSet base = metallic_tiles(n);
    for (int t = 0; t < 150; ++t) {
      Point p = rand_point(g, n);
      CHECK(rp.atom_at(p) == base.index_of(tile_at(n, p.x, p.y)));
    }
    CHECK(rp.atom_at({q(2, n), q(2, n)}) == -1);
  }
}

TEST_CASE("relabeling bijections are found exactly when they exist") {
  int n = 2;
  LabeledPartition rp = refined_partition(n);
  // apply a known permutation and demand its inverse back
  auto g = rng(704);
  std::vector<int> src(rp.size());
  for (int i = 0; i < rp.size(); ++i) src[i] = i;
  std::shuffle(src.begin(), src.end(), g);
  LabeledPartition shuffled;
  shuffled.domain = rp.domain;
  shuffled.atoms.resize(rp.size());
  for (int k = 0; k < rp.size(); ++k) shuffled.atoms[k] = rp.atoms[src[k]];
  auto bij = equal_up_to_relabeling(rp, shuffled);
  REQUIRE(bij.has_value());
  for (int k = 0; k < rp.size(); ++k) CHECK((*bij)[src[k]] == k);
  // identity on itself
  auto self = equal_up_to_relabeling(rp, rp);
  REQUIRE(self.has_value());
  for (int i = 0; i < rp.size(); ++i) CHECK((*self)[i] == i);
  // translating every atom breaks equality
  QuadNum half = q(Rat(1, 2), n), zero = q(0, n);
  LabeledPartition moved;
  moved.domain = rp.domain;
  moved.atoms.resize(rp.size());
  for (int i = 0; i < rp.size(); ++i)
    for (const auto& piece : rp.atoms[i])
      for (auto& m : translate_mod1(piece, half, zero))
        moved.atoms[i].push_back(std::move(m));
  CHECK_FALSE(equal_up_to_relabeling(rp, moved).has_value());
  // size mismatch
  LabeledPartition chopped;
  chopped.domain = rp.domain;
  chopped.atoms.assign(rp.atoms.begin(), rp.atoms.end() - 1);
  CHECK_FALSE(equal_up_to_relabeling(rp, chopped).has_value());
}

TEST_CASE("window regions contain their base point") {
  for (int n : {1, 2}) {
    CAPTURE(n);
    auto g = rng(705 + n);
    for (int t = 0; t < 6; ++t) {
      TorusPoint p{q(rand_rat01(g), n), q(rand_rat01(g), n)};
      Window w = make_window(n, p, -2, -2, 5, 5);
      auto region = pattern_region(n, w);
      REQUIRE_FALSE(region.empty());
      bool covered = false;
      for (const auto& poly : region) covered = covered || poly.contains({p.x, p.y});
      CHECK(covered);
    }
  }
}

TEST_CASE("singleton window region is the tile's atom") {
  int n = 2;
  LabeledPartition rp = refined_partition(n);
  TorusPoint p{q(Rat(2, 7), n), q(Rat(3, 11), n)};
  Window w = make_window(n, p, 0, 0, 1, 1);
  auto region = pattern_region(n, w);
  const auto& expect = rp.atoms[w.index(0, 0)];
  REQUIRE(region.size() == expect.size());
  for (const auto& poly : region) {
    bool found = false;
    for (const auto& a : expect) found = found || a == poly;
    CHECK(found);
  }
}

TEST_CASE("corrupting one cell of a window empties its region") {
  int n = 2;
  TorusPoint p{q(Rat(2, 7), n), q(Rat(3, 11), n)};
  Window w = make_window(n, p, 0, 0, 3, 3);
  int orig = w.cells[1][1];
  for (int r = 0; r < (int)w.tiles.size(); ++r) {
    if (r == orig) continue;
    w.cells[1][1] = r;
    CHECK(pattern_region(n, w).empty());
  }
}
