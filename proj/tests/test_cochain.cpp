#include "doctest.h"
#include "support.hpp"

using namespace tribrac;
using test::W;

namespace {

// delta f evaluated on one generator, straight from the boundary
int naive_delta(const Tribracket& t, const CochainTensor& f, const Word& w) {
  auto b = f.side() == Side::lb ? lb_boundary(t, w) : nie_boundary(t, w);
  return evaluate(f, b);
}

}  // namespace

TEST_CASE("printed cocycles") {
  auto e6 = load_example("5.6");
  auto e7 = load_example("5.7");
  auto e8 = load_example("5.8");
  CHECK(e6.cocycle.modulus() == 5);
  CHECK(e7.cocycle.modulus() == 3);
  CHECK(e6.cocycle.side() == Side::lb);
  CHECK(e6.cocycle.degree() == 2);
  CHECK(is_cocycle(e6.tribracket, e6.cocycle));
  CHECK(is_cocycle(e7.tribracket, e7.cocycle));
  CHECK_FALSE(is_cocycle(e8.tribracket, e8.cocycle));
  // theta(1,2,1) = 1 and theta(1,1,2) = 0 in the Hopf computation
  CHECK(e6.cocycle.value(W({1, 2, 1})) == 1);
  CHECK(e6.cocycle.value(W({1, 1, 2})) == 0);
  CHECK(e6.cocycle.value(W({1, 1, 1})) == 0);
}

TEST_CASE("coboundary matches evaluation on boundaries") {
  auto e = load_example("5.6");
  auto df = coboundary(e.tribracket, e.cocycle);
  CHECK(df.degree() == 3);
  CHECK(df.is_zero());
  CochainTensor f(Side::nie, 1, 3, 5);
  for (const auto& w : all_generators(3, Side::nie, 1))
    if (!is_degenerate(e.tribracket, Side::nie, w)) f.set(w, w[0] + 2 * w[1] + 3 * w[2]);
  auto g = coboundary(e.tribracket, f);
  for (const auto& w : all_generators(3, Side::nie, 2)) {
    if (is_degenerate(e.tribracket, Side::nie, w)) continue;
    CHECK(g.value(w) == naive_delta(e.tribracket, f, w));
  }
}

TEST_CASE("cocycle bases") {
  for (const auto& t : test::small_tribrackets()) {
    if (t.size() != 3) continue;
    for (Side s : {Side::lb, Side::nie}) {
      const int deg = s == Side::lb ? 2 : 1;
      auto basis = cocycle_basis(t, s, deg, 3);
      for (const auto& f : basis) CHECK(is_cocycle(t, f));
      auto bm = boundary_matrix(t, s, deg + 1);
      CHECK(basis.size() == bm.row_basis.size() - rank_mod_p(bm.matrix, 3));
    }
  }
  auto e = load_example("5.7");
  auto basis = cocycle_basis(e.tribracket, Side::lb, 2, 3);
  CHECK(in_span(e.tribracket, basis, e.cocycle));
  CHECK_THROWS_AS(cocycle_basis(e.tribracket, Side::lb, 2, 4), Error);
}

TEST_CASE("cohomologous cocycles") {
  auto e = load_example("5.7");
  CochainTensor phi(Side::lb, 1, 3, 3);
  phi.set(W({1, 2}), 1);
  phi.set(W({3, 1}), 2);
  auto g = e.cocycle + coboundary(e.tribracket, phi);
  CHECK(is_cocycle(e.tribracket, g));
  CHECK(are_cohomologous(e.tribracket, e.cocycle, g));
  CochainTensor zero(Side::lb, 2, 3, 3);
  CHECK_FALSE(are_cohomologous(e.tribracket, e.cocycle, zero));
  auto e8 = load_example("5.8");
  CHECK_THROWS_AS(are_cohomologous(e8.tribracket, e8.cocycle, e8.cocycle), Error);
}

TEST_CASE("cochain validation and JSON") {
  auto e = load_example("5.6");
  std::vector<int> v(27, 0);
  v[0] = 1;  // (1;1,1) is degenerate
  CHECK_THROWS_AS(CochainTensor(e.tribracket, Side::lb, 2, 5, v), Error);
  auto back = cochain_from_json(cochain_to_json(e.cocycle), e.tribracket);
  CHECK(back == e.cocycle);
  CHECK(vanishes_on_degenerates(e.tribracket, e.cocycle));
  FormalChain c(Side::lb, 2, 3);
  c.add(W({1, 2, 1}), 3);
  c.add(W({3, 3, 1}), 1);
  CHECK(evaluate(e.cocycle, c) == (3 * 1 + e.cocycle.value(W({3, 3, 1}))) % 5);
}
