#include "doctest.h"
#include "support.hpp"

using namespace tribrac;

TEST_CASE("Alexander local biquandle on Z5") {
  auto l = local_biquandle_from_horizontal(alexander(5, 3, 2));
  // (1,3) under (1,4) = (4,1), (1,3) over (1,4) = (4,2), labels 1-based as residues
  CHECK(l.under({1, 3}, {1, 4}) == Pair{4, 1});
  CHECK(l.over({1, 3}, {1, 4}) == Pair{4, 2});
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c) {
        CHECK(l.under2(a, b, c) == ((3 * b + 2 * c - 6 * a) % 5 + 5) % 5);
        CHECK(l.over2(a, b, c) == ((3 * c + 2 * b - 6 * a) % 5 + 5) % 5);
      }
  CHECK(check_axioms(l).passed());
  CHECK_THROWS_AS(l.under({1, 3}, {2, 4}), Error);
}

TEST_CASE("Dehn local biquandle") {
  auto g = symmetric_group(3);
  auto l = local_biquandle_from_horizontal(dehn(g));
  CHECK(check_axioms(l).passed());
  std::vector<int> inv(6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      if (g(a, b) == 0) inv[a] = b;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c) {
        CHECK(l.under2(a, b, c) == g(g(b, inv[a]), c));
        CHECK(l.over2(a, b, c) == g(g(c, inv[a]), b));
      }
}

TEST_CASE("every small tribracket gives a local biquandle and back") {
  for (const auto& t : test::small_tribrackets()) {
    auto l = local_biquandle_from_horizontal(t.horizontal());
    CHECK(check_axioms(l).passed());
    CHECK(local_biquandle_to_horizontal(l) == t.horizontal());
    CHECK(local_biquandle_from_json(local_biquandle_to_json(l)) == l);
    const int n = t.size();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          Pair x{static_cast<Elem>(a), static_cast<Elem>(b)}, y{static_cast<Elem>(a), static_cast<Elem>(c)};
          auto [p, q] = l.exchange(x, y);
          CHECK(p == l.over(y, x));
          CHECK(q == l.under(x, y));
          CHECK(p.second == q.second);
        }
  }
}

TEST_CASE("local biquandle axioms reject a non-tribracket") {
  OperationTensor t(3, Kind::horizontal);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) t.set(a, b, c, static_cast<Elem>((a + 2 * b + c) % 3));
  auto l = local_biquandle_from_horizontal(t);
  CHECK(check_axioms(l).passed() == test::naive_is_horizontal(t));
  LocalBiquandle constant(2, std::vector<Elem>(8, 0), std::vector<Elem>(8, 0));
  auto r = check_axioms(constant);
  CHECK_FALSE(r.passed());
  CHECK(r.violation_count >= r.violations.size());
}
