#include "doctest.h"
#include "support.hpp"

using namespace tribrac;
using test::words;

namespace {

Elem angle(const Tribracket& t, std::vector<Elem> w) { return bold_angle(t, w); }

Elem square(const Tribracket& t, std::vector<Elem> w, Elem b) { return bold_square(t, w, b); }

Elem naive_angle(const Tribracket& t, const Word& a) {
  const int n = static_cast<int>(a.size()) - 1;
  if (n == 0) return a[0];
  if (n == 1) return a[1];
  Elem r = t.v(a[n - 2], a[n - 1], a[n]);
  for (int k = n - 3; k >= 0; --k) r = t.v(a[k], a[k + 1], r);
  return r;
}

Elem naive_square(const Tribracket& t, const Word& a, Elem b) {
  Elem r = b;
  for (std::size_t k = 0; k + 1 < a.size(); ++k) r = t.h(a[k], a[k + 1], r);
  return r;
}

int y(const Tribracket& t, const Word& a, int i, int j) {
  if (j == i || j == i + 1) return t.v(a[j - 1], a[j], a[j + 1]);
  if (j < i) return t.v(a[j - 1], a[j], y(t, a, i, j + 1));
  return t.v(y(t, a, i, j - 1), a[j], a[j + 1]);
}

Word slice(const Word& a, int from, int to) { return Word(a.begin() + from, a.begin() + to + 1); }

}  // namespace

TEST_CASE("bold brackets match their nested definitions") {
  for (const auto& t : test::small_tribrackets())
    for (int len = 1; len <= 5; ++len)
      for (const auto& w : words(t.size(), len)) {
        CHECK(bold_angle(t, w) == naive_angle(t, w));
        for (int b = 0; b < t.size(); ++b) CHECK(bold_square(t, w, static_cast<Elem>(b)) == naive_square(t, w, static_cast<Elem>(b)));
      }
}

TEST_CASE("bold bracket identities") {
  for (const auto& t : test::small_tribrackets()) {
    const int sz = t.size();
    for (int n = 1; n <= 5; ++n)
      for (const auto& a : words(sz, n + 1)) {
        const Elem full = angle(t, a);
        if (n >= 2) {
          for (int i = 0; i <= n - 2; ++i) {
            Word outer = slice(a, 0, i);
            outer.push_back(angle(t, slice(a, i, n)));
            CHECK(full == angle(t, outer));
          }
          // (2) fails at n = 2, where it would say <a0,a1,a2> = <a0,<a0,a1,a2>,a2>
          if (n >= 3) {
            Word moved = a;
            moved[1] = t.v(a[0], a[1], a[2]);
            CHECK(full == angle(t, moved));
          }
        }
        for (int b = 0; b < sz; ++b) {
          Word ext = a;
          ext.push_back(square(t, a, static_cast<Elem>(b)));
          CHECK(angle(t, ext) == b);
        }
        // square of angle with x = y = a
        if (n >= 2)
          for (int m = 1; m <= n; ++m) {
            const Elem lhs = square(t, slice(a, 0, m), full);
            if (m < n - 1) CHECK(lhs == angle(t, slice(a, m, n)));
            else if (m == n - 1) CHECK(lhs == a[n]);
            else CHECK(lhs == square(t, slice(a, n - 1, m), a[n]));
          }
      }
    // (4) in general
    for (int m = 1; m <= 3; ++m)
      for (int n = 2; n <= 4; ++n)
        for (int i = 0; i <= std::min(m - 1, n - 2); ++i) {
          const int vars = (i + 1) + (m - i) + (n - i);
          for (const auto& v : words(sz, vars)) {
            Word xs(v.begin(), v.begin() + m + 1);
            Word ys(v.begin(), v.begin() + i + 1);
            ys.insert(ys.end(), v.begin() + m + 1, v.end());
            const Elem lhs = square(t, xs, angle(t, ys));
            const Elem rhs = square(t, slice(xs, i, m), angle(t, slice(ys, i, n)));
            CHECK(lhs == rhs);
          }
        }
  }
}

TEST_CASE("phi and psi in substitution form") {
  for (const auto& t : test::small_tribrackets())
    for (int n = 1; n <= 4; ++n)
      for (const auto& w : words(t.size(), n + 1)) {
        const Word z = phi(t, w);
        const Word p = psi(t, w);
        REQUIRE(z.size() == w.size());
        CHECK(z[0] == w[0]);
        CHECK(z[1] == w[1]);
        CHECK(p[0] == w[0]);
        CHECK(p[1] == w[1]);
        for (int i = 2; i <= n; ++i) {
          CHECK(z[i] == phi_substitution_term(i).evaluate(t, w));
          CHECK(z[i] == square(t, slice(z, 0, i - 1), w[i]));
          CHECK(p[i] == psi_substitution_term(i).evaluate(t, w));
          CHECK(p[i] == angle(t, slice(w, 0, i)));
        }
        if (n >= 2) CHECK(z[2] == t.h(w[0], w[1], w[2]));
        if (n >= 2) CHECK(p[2] == t.v(w[0], w[1], w[2]));
      }
}

TEST_CASE("y identities") {
  for (const auto& t : test::small_tribrackets())
    for (int n = 2; n <= 5; ++n)
      for (const auto& a : words(t.size(), n + 1)) {
        const Word w = psi(t, a);
        for (int i = 0; i <= n - 1; ++i) {
          auto lib = nie_y(t, a, i);
          for (int j = 1; j <= n - 1; ++j) CHECK(lib[j] == y(t, a, i, j));
        }
        for (int i = 1; i <= n; ++i) {
          auto Y = [&](int j) { return static_cast<Elem>(y(t, a, i - 1, j)); };
          for (int j = 1; j <= i - 1; ++j) {
            const Elem l1 = t.h(a[j - 1], a[j], Y(j));
            CHECK(l1 == (j < i - 1 ? Y(j + 1) : a[i]));
            CHECK(angle(t, slice(a, j - 1, i)) == Y(j));
            Word r4;
            for (int k = 1; k <= std::min(j + 1, i - 1); ++k) r4.push_back(Y(k));
            if (j == i - 1) r4.push_back(a[i]);
            CHECK(t.h(a[0], w[j], w[i]) == angle(t, r4));
          }
          if (i >= 2) CHECK(w[i] == Y(1));
          for (int j = i + 1; j <= n; ++j) {
            Word r3{a[i - 1]};
            for (int k = i; k <= j - 1; ++k) r3.push_back(Y(k));
            CHECK(angle(t, slice(a, i - 1, j)) == angle(t, r3));
            Word r5;
            for (int k = 1; k <= i - 1; ++k) r5.push_back(Y(k));
            for (int k = i; k <= j; ++k) r5.push_back(a[k]);
            CHECK(t.h(a[0], w[i], w[j]) == angle(t, r5));
          }
        }
      }
}

TEST_CASE("phi and psi are inverse chain maps") {
  for (const auto& t : test::small_tribrackets()) {
    for (int n = 1; n <= 4; ++n)
      for (const auto& w : words(t.size(), n + 1)) {
        CHECK(psi(t, phi(t, w)) == w);
        CHECK(phi(t, psi(t, w)) == w);
        CHECK(is_degenerate(t, Side::lb, w) == is_degenerate(t, Side::nie, phi(t, w)));
      }
    for (int n = 2; n <= 3; ++n)
      for (const auto& w : nondegenerate_generators(t, Side::lb, n)) {
        auto g = single(Side::lb, t.size(), w);
        auto lhs = project_nondegenerate(t, boundary(t, phi_chain(t, g)));
        auto rhs = phi_chain(t, project_nondegenerate(t, boundary(t, g)));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("bridge report") {
  auto t = load_example("5.7").tribracket;
  auto reports = verify_bridge(t, 3);
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) {
    CHECK(r.passed());
    CHECK(r.generators > 0);
  }
  CHECK(reports[2].lb_homology.to_string() == "Z/3 + Z/3");
}

TEST_CASE("pulled cochains evaluate through the bridge") {
  auto e = load_example("5.7");
  const auto& t = e.tribracket;
  auto g = pull_cochain(t, e.cocycle, Via::psi);
  CHECK(g.side() == Side::nie);
  CHECK(g.degree() == 1);
  CHECK(is_cocycle(t, g));
  for (const auto& w : nondegenerate_generators(t, Side::nie, 1))
    CHECK(g.value(w) == e.cocycle.value(psi(t, w)));
  auto back = pull_cochain(t, g, Via::phi);
  CHECK(back == e.cocycle);
  CHECK_THROWS_AS(pull_cochain(t, e.cocycle, Via::phi), Error);
}
