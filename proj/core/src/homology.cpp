#include "tribrac/homology.hpp"

#include "parallel.hpp"
#include "tribrac/error.hpp"

namespace tribrac {

BoundaryMatrix boundary_matrix(const Tribracket& t, Side side, int degree, const Limits& lim) {
  if (degree < min_degree(side))
    throw Error(Errc::invalid_argument, std::string(side_name(side)) + " complex has no degree " + std::to_string(degree));
  BoundaryMatrix bm;
  bm.col_basis = nondegenerate_generators(t, side, degree, lim);
  bm.row_basis = nondegenerate_generators(t, side, degree - 1, lim);
  const int rows = static_cast<int>(bm.row_basis.size()), cols = static_cast<int>(bm.col_basis.size());
  bm.matrix = IntMatrix(rows, cols);
  if (rows == 0) return bm;
  std::map<Word, int> index;
  for (int i = 0; i < rows; ++i) index.emplace(bm.row_basis[i], i);
  detail::parallel_for(cols, lim.threads, [&](int j) {
    const Word& g = bm.col_basis[j];
    FormalChain d = side == Side::lb ? lb_boundary(t, g) : nie_boundary(t, g);
    for (const auto& [w, c] : d.terms()) {
      auto it = index.find(w);
      if (it != index.end()) bm.matrix.at(it->second, j) = c;
    }
  });
  return bm;
}

std::string HomologyResult::to_string() const {
  std::string s;
  if (free_rank > 0) s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const auto& d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.str();
  }
  return s.empty() ? "0" : s;
}

HomologyResult homology(const Tribracket& t, Side side, int degree, Coefficients k, const Limits& lim) {
  if (k.prime != 0 && !is_prime(k.prime))
    throw Error(Errc::composite_modulus, "coefficients Z/" + std::to_string(k.prime) + " are not a field; use a prime modulus");
  BoundaryMatrix a = boundary_matrix(t, side, degree, lim);
  BoundaryMatrix b = boundary_matrix(t, side, degree + 1, lim);
  const std::size_t gens = a.col_basis.size();
  HomologyResult r;
  if (k.prime != 0) {
    r.free_rank = gens - rank_mod_p(a.matrix, k.prime) - rank_mod_p(b.matrix, k.prime);
    return r;
  }
  const std::size_t ra = smith_normal_form(a.matrix).rank();
  SmithForm sb = smith_normal_form(b.matrix);
  r.free_rank = gens - ra - sb.rank();
  for (const auto& d : sb.diagonal)
    if (d > 1) r.torsion.push_back(d);
  return r;
}

CycleClassifier::CycleClassifier(const Tribracket& t, Side side, int degree, const Limits& lim)
    : t_(&t), side_(side), degree_(degree) {
  BoundaryMatrix b = boundary_matrix(t, side, degree + 1, lim);
  for (int i = 0; i < static_cast<int>(b.row_basis.size()); ++i) index_.emplace(b.row_basis[i], i);
  snf_ = smith_normal_form(b.matrix, true);
}

ClassLabel CycleClassifier::label(const FormalChain& cycle) const {
  if (cycle.side() != side_ || cycle.degree() != degree_)
    throw Error(Errc::invalid_argument, "cycle side or degree does not match the classifier");
  const int n = static_cast<int>(index_.size());
  std::vector<BigInt> z(n);
  const FormalChain reduced = project_nondegenerate(*t_, cycle);
  for (const auto& [w, c] : reduced.terms()) {
    auto it = index_.find(w);
    if (it == index_.end()) throw Error(Errc::invalid_argument, "chain has a generator outside degree " + std::to_string(degree_));
    z[it->second] += c;
  }
  ClassLabel out;
  const std::size_t r = snf_.rank();
  for (int i = 0; i < n; ++i) {
    if (i < static_cast<int>(r) && snf_.diagonal[i] == 1) continue;
    BigInt y = 0;
    for (int j = 0; j < n; ++j)
      if (z[j] != 0) y += snf_.left[i][j] * z[j];
    if (i < static_cast<int>(r)) {
      y %= snf_.diagonal[i];
      if (y < 0) y += snf_.diagonal[i];
    }
    out.push_back(y);
  }
  return out;
}

}  // namespace tribrac
