#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace tribrac;

namespace {

ParseErrc parse_kind(const std::string& text) {
  try {
    parse_pd(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("no parse error for: " << text);
  return ParseErrc::syntax;
}

bool same_crossings(const PlanarDiagram& x, const PlanarDiagram& y) {
  if (x.crossing_count() != y.crossing_count() || x.circles() != y.circles()) return false;
  for (int i = 0; i < x.crossing_count(); ++i)
    if (x.sign(i) != y.sign(i) || x.crossings()[i].ids != y.crossings()[i].ids) return false;
  return true;
}

}  // namespace

TEST_CASE("trefoil structure") {
  auto d = load_table("3_1");
  CHECK(d.crossing_count() == 3);
  CHECK(d.semi_arc_count() == 6);
  CHECK(d.face_count() == 5);
  CHECK(d.component_count() == 1);
  CHECK(d.writhe() == 3);
  CHECK(d.connected());
  int corners = 0;
  for (const auto& f : d.face_corners()) corners += static_cast<int>(f.size());
  CHECK(corners == 12);
  for (int arc = 0; arc < d.semi_arc_count(); ++arc) CHECK(d.left_face(arc) != d.right_face(arc));
}

TEST_CASE("every bundled diagram is planar") {
  for (const auto& name : table_names()) {
    auto d = load_table(name);
    CAPTURE(name);
    if (d.connected() && d.crossing_count() > 0) CHECK(d.face_count() == d.crossing_count() + 2);
    for (int x = 0; x < d.crossing_count(); ++x) {
      int in = 0;
      for (int p = 0; p < 4; ++p) in += d.incoming(x, p);
      CHECK(in == 2);
      CHECK(d.incoming(x, 0));
      CHECK(d.incoming(x, d.sign(x) > 0 ? 3 : 1));
      auto f = crossing_frame(d, x);
      std::set<int> regions(f.regions.begin(), f.regions.end());
      std::set<int> corners;
      for (int c = 0; c < 4; ++c) corners.insert(d.face(x, c));
      CHECK(regions == corners);
    }
    auto again = parse_pd(write_pd(d), name);
    CHECK(write_pd(again) == write_pd(d));
  }
}

TEST_CASE("links and the unknot") {
  auto hopf = load_table("L2a1");
  CHECK(hopf.component_count() == 2);
  CHECK(hopf.face_count() == 4);
  CHECK(hopf.writhe() == 2);
  auto u = load_table("0_1");
  CHECK(u.crossing_count() == 0);
  CHECK(u.face_count() == 2);
  CHECK(u.component_count() == 1);
  CHECK(u.is_circle(0));
  auto split = parse_pd("X+ 1 2 3 4\nX+ 2 1 4 3\nO 5\n");
  CHECK_FALSE(split.connected());
  CHECK(split.component_count() == 3);
  CHECK(split.face_count() == 5);
}

TEST_CASE("mirror, reverse and connected sum") {
  for (const char* name : {"3_1", "4_1", "L2a1", "L6a4", "8_18"}) {
    auto d = load_table(name);
    auto m = mirror(d);
    CHECK(m.writhe() == -d.writhe());
    CHECK(m.face_count() == d.face_count());
    CHECK(same_crossings(mirror(m), d));
    auto r = reverse(d);
    CHECK(r.writhe() == d.writhe());
    CHECK(same_crossings(reverse(r), d));
  }
  auto s = connected_sum(load_table("3_1"), load_table("3_1"));
  CHECK(s.crossing_count() == 6);
  CHECK(s.component_count() == 1);
  CHECK(s.face_count() == 8);
  CHECK(s.writhe() == 6);
  CHECK(connected_sum(load_table("3_1"), mirror(load_table("3_1"))).writhe() == 0);
}

TEST_CASE("parse errors") {
  CHECK(parse_kind("X+ 1 2 3\n") == ParseErrc::syntax);
  CHECK(parse_kind("Y 1 2 3 4\n") == ParseErrc::syntax);
  CHECK(parse_kind("X+ 1 2 3 4\n") == ParseErrc::dangling_end);
  CHECK(parse_kind("X+ 1 1 1 2\nX+ 2 3 4 3\n") == ParseErrc::repeated_id);
  CHECK(parse_kind("X+ 1 2 3 4\nX- 5 1 4 6\nX+ 2 5 6 3\n") == ParseErrc::sign);
  CHECK(parse_kind("X+ 1 2 3 4\nX+ 1 4 3 2\n") == ParseErrc::orientation);
  CHECK(parse_kind("X+ 1 3 2 4\nX+ 2 4 1 3\n") == ParseErrc::face_count);
  try {
    parse_pd("# comment\nX+ 1 2 3 4\nX+ 2 1 4 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(load_diagram("no-such-diagram"), Error);
}
