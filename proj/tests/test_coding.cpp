#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "metallic/coding.hpp"
#include "testutil.hpp"

using namespace metallic;
using testutil::rand_rat01;

namespace {

QuadNum q(Rat r, int n) { return QuadNum::rational(r, n); }

std::string name_at(int n, const QuadNum& x, const QuadNum& y) {
  return classify(n, tile_at(n, x, y)).name();
}

// Random point of the torus whose coordinates involve beta.
TorusPoint rand_point(std::mt19937_64& g, int n) {
  return TorusPoint(QuadNum(rand_rat01(g), rand_rat01(g, 23), n).frac(),
                    QuadNum(rand_rat01(g), rand_rat01(g, 23), n).frac());
}

}  // namespace

TEST_CASE("the two offset forms of the coding map agree") {
  for (int n = 1; n <= 8; ++n) {
    QuadNum lhs = QuadNum::beta_star(n) + QuadNum::rational(1, n);
    QuadNum rhs = QuadNum::rational(1, n) - QuadNum::beta_inv(n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("coding labels at hand-checked points") {
  int n = 3;
  QuadNum zero = q(0, n), half = q(Rat(1, 2), n);
  QuadNum binv = QuadNum::beta_inv(n);
  QuadNum one = q(1, n);

  CHECK(lambda_floor(n, zero, zero) == Label{0, 0, 0});
  CHECK(lambda_floor(n, one - binv, zero) == Label{0, 0, 3});
  CHECK(lambda_floor(n, half, half) == Label{1, 1, 2});
  // the same forms for n = 1 (Ammann alphabet)
  CHECK(lambda_floor(1, q(0, 1), q(0, 1)) == Label{0, 0, 0});
  CHECK(lambda_floor(1, q(1, 1) - QuadNum::beta_inv(1), q(0, 1)) ==
        Label{0, 0, 1});
}

TEST_CASE("coding labels stay in the alphabet at random points") {
  auto g = testutil::rng(401);
  for (int n : {1, 2, 3, 5, 8}) {
    for (int trial = 0; trial < 300; ++trial) {
      TorusPoint p = rand_point(g, n);
      Label v = lambda_floor(n, p.x, p.y);
      CHECK(in_Vn(n, v));
      CHECK(v.v0 <= v.v1);
      CHECK(v.v1 <= v.v2);
      CHECK(v.v1 <= 1);
    }
  }
}

TEST_CASE("coding map rejects points outside the unit square") {
  int n = 2;
  CHECK_THROWS_AS(lambda_floor(n, q(1, n), q(0, n)), std::domain_error);
  CHECK_THROWS_AS(lambda_floor(n, q(0, n), q(Rat(-1, 2), n)), std::domain_error);
  CHECK_THROWS_AS(tile_at_closed(n, q(2, n), q(0, n)), std::domain_error);
  CHECK_THROWS_AS(tile_at_closed(n, q(0, n), q(Rat(-1, 3), n)), std::domain_error);
}

TEST_CASE("tiles at named points") {
  int n = 3;
  QuadNum zero = q(0, n), binv = QuadNum::beta_inv(n);
  CHECK(name_at(n, zero, zero) == "j[0,0,0,0]");
  CHECK(name_at(n, binv, binv) == "w[1,1]");
  CHECK(name_at(n, binv, zero) == "b[0]");
  CHECK(name_at(n, zero, binv) == "bv[0]");
  // coordinate exactly 1 wraps to 0 under the torus reading ...
  CHECK(name_at(n, q(1, n), zero) == "j[0,0,0,0]");
  // ... and stays on the far edge under the closed reading
  CHECK(classify(n, tile_at_closed(n, q(1, n), zero)).name() == "g[3]");
}

TEST_CASE("tile of the point is always a base tile") {
  auto g = testutil::rng(402);
  for (int n : {1, 2, 3, 4}) {
    TileSet base = metallic_tiles(n);
    for (int trial = 0; trial < 200; ++trial) {
      TorusPoint p = rand_point(g, n);
      CHECK(base.contains(tile_at(n, p.x, p.y)));
    }
  }
}

TEST_CASE("reflection swaps the roles of the two coordinates") {
  auto g = testutil::rng(403);
  for (int n : {1, 2, 3}) {
    for (int trial = 0; trial < 100; ++trial) {
      TorusPoint p = rand_point(g, n);
      CHECK(tile_at(n, p.y, p.x) == reflect(tile_at(n, p.x, p.y)));
    }
  }
}

TEST_CASE("coding label factors through the right-color rule") {
  auto g = testutil::rng(404);
  for (int n : {1, 2, 3}) {
    QuadNum bstar = QuadNum::beta_star(n);
    for (int trial = 0; trial < 500; ++trial) {
      QuadNum x = q(rand_rat01(g), n), y = q(rand_rat01(g), n);
      Label left = lambda_floor(n, (x + bstar).frac(), y);
      Label bottom = lambda_floor(n, (y + bstar).frac(), x);
      CHECK(lambda_floor(n, x, y) == theta(n, left, bottom));
    }
  }
}

TEST_CASE("named witness points hit their tiles") {
  for (int n = 1; n <= 4; ++n) {
    auto pts = witness_points(n);
    TileSet base = metallic_tiles(n);
    REQUIRE(static_cast<int>(pts.size()) == (n + 3) * (n + 3));
    std::set<std::string> seen;
    for (const auto& wp : pts) {
      WangTile expect = family_tile(n, wp.tag);
      CHECK(tile_at_closed(n, wp.x, wp.y) == expect);
      seen.insert(wp.tag.name());
    }
    // the witnesses name every base tile exactly once
    CHECK(static_cast<int>(seen.size()) == base.size());
    for (const auto& t : base.tiles) CHECK(seen.count(classify(n, t).name()) == 1);
  }
}

TEST_CASE("windows are valid patterns of base tiles") {
  auto g = testutil::rng(405);
  std::uniform_int_distribution<int> dsz(1, 8);
  std::uniform_int_distribution<long> dorg(-5, 5);
  for (int n : {1, 2, 3}) {
    for (int trial = 0; trial < 12; ++trial) {
      TorusPoint p = rand_point(g, n);
      Window w = make_window(n, p, dorg(g), dorg(g), dsz(g), dsz(g));
      CHECK(w.tiles.kind == TileSetKind::base);
      CHECK(check_valid(w).empty());
    }
  }
}

TEST_CASE("window of the origin point matches the hand-computed corner") {
  int n = 3;
  Window w = make_window(n, TorusPoint(q(0, n), q(0, n)), 0, 0, 2, 2);
  CHECK(classify(n, w.tile(0, 0)).name() == "j[0,0,0,0]");
  // the cell above (0,0) starts at y = 1/beta
  CHECK(w.tile(0, 1) == tile_at(n, q(0, n), QuadNum::beta_inv(n)));
  CHECK(check_valid(w).empty());
}

TEST_CASE("shifting the window range matches shifting the base point") {
  auto g = testutil::rng(406);
  for (int n : {1, 2, 3}) {
    QuadNum binv = QuadNum::beta_inv(n);
    for (int trial = 0; trial < 6; ++trial) {
      TorusPoint p = rand_point(g, n);
      Window a = make_window(n, p, 1, 0, 4, 3);
      Window b = make_window(n, TorusPoint(p.x + binv, p.y), 0, 0, 4, 3);
      CHECK(a.cells == b.cells);
      Window c = make_window(n, p, 0, -2, 4, 3);
      Window d = make_window(n, TorusPoint(p.x, p.y - binv - binv), 0, 0, 4, 3);
      CHECK(c.cells == d.cells);
    }
  }
}

TEST_CASE("corrupting a window cell is detected with its position") {
  auto g = testutil::rng(407);
  for (int n : {1, 2, 3}) {
    TorusPoint p = rand_point(g, n);
    Window w = make_window(n, p, 0, 0, 4, 4);
    int old = w.cells[1][1];
    w.cells[1][1] = (old + 1) % w.tiles.size();
    auto viol = check_valid(w);
    REQUIRE(!viol.empty());
    // every reported violation touches the corrupted cell (1,1)
    for (const auto& v : viol) {
      bool touches = (v.horizontal && v.j == 1 && (v.i == 0 || v.i == 1)) ||
                     (!v.horizontal && v.i == 1 && (v.j == 0 || v.j == 1));
      CHECK(touches);
    }
  }
}

TEST_CASE("configuration over the diagonal point is symmetric") {
  for (int n : {1, 3}) {
    Window w = make_window(n, TorusPoint(q(0, n), q(0, n)), 0, 0, 5, 5);
    for (long i = 0; i < 5; ++i)
      for (long j = 0; j < 5; ++j)
        CHECK(w.tile(j, i) == reflect(w.tile(i, j)));
  }
}

TEST_CASE("window construction rejects empty ranges") {
  TorusPoint p(q(0, 2), q(0, 2));
  CHECK_THROWS_AS(make_window(2, p, 0, 0, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_window(2, p, 0, 0, 3, -1), std::invalid_argument);
}

TEST_CASE("forbidden tiles never appear in windows") {
  auto g = testutil::rng(408);
  for (int n : {1, 2}) {
    TileSet ext = extended_tiles(n);
    TileSet base = metallic_tiles(n);
    for (int trial = 0; trial < 5; ++trial) {
      TorusPoint p = rand_point(g, n);
      Window w = make_window(n, p, -3, -3, 7, 7);
      for (long j = -3; j < 4; ++j)
        for (long i = -3; i < 4; ++i) {
          const WangTile& t = w.tile(i, j);
          CHECK(base.contains(t));
          FamilyTag tag = classify(n, t);
          CHECK(tag.family != Family::antigreen);
          if (tag.family == Family::blue) CHECK(tag.i < n);
          if (tag.family == Family::junction) {
            CHECK(tag.jcode != std::array<int, 4>{1, 1, 0, 0});
            CHECK(tag.jcode != std::array<int, 4>{0, 0, 1, 1});
          }
        }
    }
  }
}
