#include "doctest.h"
#include "support.hpp"

using namespace tribrac;

namespace {

IntMatrix make(int r, int c, std::initializer_list<std::int64_t> v) {
  IntMatrix m(r, c);
  auto it = v.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = *it++;
  return m;
}

std::vector<std::int64_t> diag(const SmithForm& s) {
  std::vector<std::int64_t> d;
  for (const auto& x : s.diagonal) d.push_back(static_cast<std::int64_t>(x));
  return d;
}

// Determinantal-divisor oracle for 2x2 and 2x3 matrices.
std::int64_t gcd_all(const std::vector<std::int64_t>& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, std::abs(x));
  return g;
}

}  // namespace

TEST_CASE("Smith normal form on fixed matrices") {
  CHECK(diag(smith_normal_form(make(2, 2, {2, 4, 6, 8}))) == std::vector<std::int64_t>{2, 4});
  CHECK(diag(smith_normal_form(make(3, 3, {2, 0, 0, 0, 3, 0, 0, 0, 5}))) == std::vector<std::int64_t>{1, 1, 30});
  CHECK(diag(smith_normal_form(make(2, 3, {0, 0, 0, 0, 0, 0}))).empty());
  CHECK(diag(smith_normal_form(make(1, 2, {6, 10}))) == std::vector<std::int64_t>{2});
  CHECK(diag(smith_normal_form(IntMatrix(0, 3))).empty());
}

TEST_CASE("Smith normal form against determinantal divisors") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix m(2, 3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = d(rng);
    std::vector<std::int64_t> entries, minors;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) entries.push_back(m.at(i, j));
    for (int j = 0; j < 3; ++j)
      for (int k = j + 1; k < 3; ++k) minors.push_back(m.at(0, j) * m.at(1, k) - m.at(0, k) * m.at(1, j));
    std::vector<std::int64_t> want;
    const auto d1 = gcd_all(entries), d2 = gcd_all(minors);
    if (d1) want.push_back(d1);
    if (d2) want.push_back(d2 / d1);
    auto s = smith_normal_form(m, true);
    CHECK(diag(s) == want);
    CHECK(s.rank() == rank_rational(m));
    REQUIRE(s.left.size() == 2);
    BigInt det = s.left[0][0] * s.left[1][1] - s.left[0][1] * s.left[1][0];
    CHECK(abs(det) == 1);
  }
}

TEST_CASE("ranks and null spaces mod p") {
  auto m = make(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(rank_rational(m) == 2);
  CHECK(rank_mod_p(m, 3) == 1);
  CHECK(rank_mod_p(make(2, 2, {3, 0, 0, 3}), 3) == 0);
  auto ns = nullspace_mod_p(m, 5);
  REQUIRE(ns.size() == 1);
  for (int i = 0; i < 3; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < 3; ++j) s += m.at(i, j) * ns[0][j];
    CHECK(s % 5 == 0);
  }
  std::vector<int> row{5, 7, 9};
  CHECK(in_row_space_mod_p(m, row, 7));
  std::vector<int> off{0, 0, 1};
  CHECK_FALSE(in_row_space_mod_p(make(2, 3, {1, 0, 0, 0, 1, 0}), off, 5));
  CHECK_THROWS_AS(rank_mod_p(m, 4), Error);
  CHECK(is_prime(5));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
}

TEST_CASE("homology of the order-3 example") {
  auto t = load_example("5.7").tribracket;
  CHECK(homology(t, Side::lb, 1).to_string() == "Z^3");
  CHECK(homology(t, Side::lb, 2).to_string() == "Z/3");
  CHECK(homology(t, Side::lb, 3).to_string() == "Z/3 + Z/3");
  CHECK(homology(t, Side::nie, 0) == homology(t, Side::lb, 1));
  CHECK(homology(t, Side::nie, 2) == homology(t, Side::lb, 3));
}

TEST_CASE("homology agrees with rational rank and universal coefficients") {
  for (const auto& t : test::small_tribrackets()) {
    for (Side s : {Side::lb, Side::nie})
      for (int deg = min_degree(s); deg <= min_degree(s) + 2; ++deg) {
        auto h = homology(t, s, deg);
        auto hp = homology(t, s, deg, Coefficients::mod(3));
        auto bn = boundary_matrix(t, s, deg);
        auto bn1 = boundary_matrix(t, s, deg + 1);
        const std::size_t dim = bn.col_basis.size();
        CHECK(h.free_rank == dim - rank_rational(bn.matrix) - rank_rational(bn1.matrix));
        const std::size_t zp = dim - rank_mod_p(bn.matrix, 3) - rank_mod_p(bn1.matrix, 3);
        CHECK(hp.free_rank == zp);
        CHECK(hp.torsion.empty());
        // dim H_n(Z_3) = free rank + 3-torsion of H_n + 3-torsion of H_(n-1)
        std::size_t expect = h.free_rank;
        for (const auto& d : h.torsion) expect += (d % 3 == 0);
        if (deg > min_degree(s))
          for (const auto& d : homology(t, s, deg - 1).torsion) expect += (d % 3 == 0);
        CHECK(hp.free_rank == expect);
      }
  }
}

TEST_CASE("boundary matrices compose to zero") {
  auto t = load_example("5.6").tribracket;
  for (Side s : {Side::lb, Side::nie}) {
    auto a = boundary_matrix(t, s, min_degree(s) + 1);
    auto b = boundary_matrix(t, s, min_degree(s) + 2);
    CHECK(a.col_basis == b.row_basis);
    CHECK((a.matrix * b.matrix).is_zero());
  }
}

TEST_CASE("cycle classes") {
  auto t = load_example("5.7").tribracket;
  CycleClassifier k(t, Side::lb, 2);
  FormalChain zero(Side::lb, 2, 3);
  for (const auto& x : k.label(zero)) CHECK(x == 0);
  auto bm = boundary_matrix(t, Side::lb, 3);
  for (const auto& w : bm.col_basis) {
    auto b = project_nondegenerate(t, boundary(t, single(Side::lb, 3, w)));
    for (const auto& x : k.label(b)) CHECK(x == 0);
  }
  CHECK_THROWS_AS(homology(t, Side::lb, 9, {}, {1000, 1}), CapExceeded);
}
