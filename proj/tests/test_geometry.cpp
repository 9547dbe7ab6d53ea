#include "gip/polygon.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace gip;
using gip::test::pt;

TEST_CASE("rational parsing and formatting") {
  CHECK(*parse_rational("3/4") == Rational(3, 4));
  CHECK(*parse_rational("-6/8") == Rational(-3, 4));
  CHECK(*parse_rational("12") == Rational(12));
  CHECK(!parse_rational("1.5"));
  CHECK(!parse_rational("1/0"));
  CHECK(!parse_rational(""));
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(to_decimal(Rational(1, 2)) == "0.5");
  CHECK(to_decimal(Rational(1, 3), 6) == "0.333333");
}

TEST_CASE("orientation basics") {
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == Orientation::CCW);
  CHECK(orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == Orientation::COLLINEAR);
  CHECK(orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == Orientation::CW);
}

TEST_CASE("orientation is antisymmetric under swapping q and r") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> c(-4, 4);
  for (int i = 0; i < 500; ++i) {
    Point p = pt(c(rng), c(rng)), q = pt(c(rng), c(rng)), r = pt(c(rng), c(rng));
    auto o1 = orientation(p, q, r);
    auto o2 = orientation(p, r, q);
    if (o1 == Orientation::COLLINEAR) CHECK(o2 == Orientation::COLLINEAR);
    if (o1 == Orientation::CCW) CHECK(o2 == Orientation::CW);
    if (o1 == Orientation::CW) CHECK(o2 == Orientation::CCW);
  }
}

TEST_CASE("classify_intersection examples") {
  CHECK(classify_intersection({pt(0, 0), pt(1, 0)}, {pt(1, 0), pt(2, 1)}) ==
        IntersectKind::SHARED_ENDPOINT_ONLY);
  CHECK(classify_intersection({pt(0, 0), pt(2, 2)}, {pt(0, 2), pt(2, 0)}) ==
        IntersectKind::PROPER_CROSSING);
  CHECK(crossing_point({pt(0, 0), pt(2, 2)}, {pt(0, 2), pt(2, 0)}) == pt(1, 1));
  CHECK(classify_intersection({pt(0, 0), pt(2, 0)}, {pt(1, 0), pt(3, 0)}) ==
        IntersectKind::OVERLAPPING);
  // T-junction: one point, endpoint of one segment only.
  CHECK(classify_intersection({pt(0, 0), pt(2, 0)}, {pt(1, 0), pt(1, 1)}) ==
        IntersectKind::TOUCHING);
  // Interior-to-interior touching cannot happen without crossing; endpoint in
  // interior of the other is TOUCHING as well.
  CHECK(classify_intersection({pt(0, 0), pt(2, 0)}, {pt(1, -1), pt(1, 1)}) ==
        IntersectKind::PROPER_CROSSING);
  CHECK(classify_intersection({pt(0, 0), pt(1, 0)}, {pt(2, 0), pt(3, 0)}) ==
        IntersectKind::DISJOINT);
  // Collinear, single shared endpoint.
  CHECK(classify_intersection({pt(0, 0), pt(1, 0)}, {pt(1, 0), pt(2, 0)}) ==
        IntersectKind::SHARED_ENDPOINT_ONLY);
}

TEST_CASE("classify_intersection is symmetric") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-3, 3);
  for (int i = 0; i < 800; ++i) {
    Point a = pt(c(rng), c(rng)), b = pt(c(rng), c(rng));
    Point d = pt(c(rng), c(rng)), e = pt(c(rng), c(rng));
    if (a == b || d == e) continue;
    CHECK(classify_intersection({a, b}, {d, e}) == classify_intersection({d, e}, {a, b}));
  }
}

TEST_CASE("point_in_region on the unit square") {
  auto sq = gip::test::unit_square();
  CHECK(validate_region(sq).empty());
  CHECK(point_in_region(sq, pt(1, 2, 1, 2)) == RegionLocation::INTERIOR);
  CHECK(point_in_region(sq, pt(0, 1, 1, 2)) == RegionLocation::ON_BOUNDARY);
  CHECK(point_in_region(sq, pt(2, 1)) == RegionLocation::OUTSIDE);
  CHECK(point_in_region(sq, pt(0, 0)) == RegionLocation::ON_BOUNDARY);
}

TEST_CASE("point_in_region with a hole") {
  auto r = gip::test::square_with_center_hole();
  CHECK(validate_region(r).empty());
  // center of the open hole interior
  CHECK(point_in_region(r, pt(1, 2, 1, 2)) == RegionLocation::OUTSIDE);
  // on the hole edge
  CHECK(point_in_region(r, pt(1, 4, 1, 2)) == RegionLocation::ON_BOUNDARY);
  // between hole and outer boundary
  CHECK(point_in_region(r, pt(1, 8, 1, 2)) == RegionLocation::INTERIOR);
}

TEST_CASE("segment_in_region examples") {
  auto sq = gip::test::unit_square();
  CHECK(segment_in_region(sq, {pt(0, 0), pt(1, 1)}));
  CHECK(segment_in_region(sq, {pt(0, 0), pt(1, 0)}));  // lies on the boundary
  auto r = gip::test::square_with_center_hole();
  CHECK_FALSE(segment_in_region(r, {pt(0, 0), pt(1, 1)}));  // through the hole
  // grazing the hole along its edge is allowed
  CHECK(segment_in_region(r, {pt(1, 4, 1, 4), pt(3, 4, 1, 4)}));
  // leaving the square
  CHECK_FALSE(segment_in_region(sq, {pt(1, 2, 1, 2), pt(2, 1, 2, 1)}));
}

TEST_CASE("segment_in_region agrees with dense sampling") {
  auto r = gip::test::square_with_center_hole();
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    Point a{gip::test::random_rational(rng, 0, 1), gip::test::random_rational(rng, 0, 1)};
    Point b{gip::test::random_rational(rng, 0, 1), gip::test::random_rational(rng, 0, 1)};
    if (a == b) continue;
    bool in = segment_in_region(r, {a, b});
    if (in) {
      ++checked;
      Point d = b - a;
      for (int k = 0; k <= 64; ++k) {
        Point m = a + Rational(k, 64) * d;
        CHECK(point_in_region(r, m) != RegionLocation::OUTSIDE);
      }
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("region validation catches broken shapes") {
  SimplePolygon bowtie{{pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2)}};
  CHECK_FALSE(validate_simple_polygon(bowtie).empty());

  // Collinear consecutive vertices are permitted.
  SimplePolygon collinear{{pt(0, 0), pt(1, 0), pt(2, 0), pt(2, 2), pt(0, 2)}};
  CHECK(validate_simple_polygon(collinear).empty());

  PolygonalRegion bad = gip::test::unit_square();
  bad.holes.push_back({{pt(0, 0), pt(0, 1, 1, 2), pt(1, 2, 0, 1)}});  // CW triangle touching corner
  CHECK_FALSE(validate_region(bad).empty());

  // Overlapping holes.
  PolygonalRegion overlap = gip::test::unit_square();
  overlap.holes.push_back({{pt(1, 8, 1, 8), pt(1, 8, 1, 2), pt(1, 2, 1, 2), pt(1, 2, 1, 8)}});
  overlap.holes.push_back({{pt(1, 4, 1, 4), pt(1, 4, 3, 4), pt(3, 4, 3, 4), pt(3, 4, 1, 4)}});
  CHECK_FALSE(validate_region(overlap).empty());
}
