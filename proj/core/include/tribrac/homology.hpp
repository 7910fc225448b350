#pragma once

#include <map>
#include <string>
#include <vector>

#include "tribrac/chain.hpp"
#include "tribrac/matrix.hpp"

namespace tribrac {

struct BoundaryMatrix {
  std::vector<Word> row_basis;  // nondegenerate generators of degree n-1
  std::vector<Word> col_basis;  // nondegenerate generators of degree n
  IntMatrix matrix;
};

BoundaryMatrix boundary_matrix(const Tribracket& t, Side side, int degree, const Limits& lim = {});

struct Coefficients {
  int prime = 0;  // 0 means the integers
  static Coefficients integers() { return {}; }
  static Coefficients mod(int p) { return {p}; }
};

struct HomologyResult {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, each dividing the next

  std::string to_string() const;  // "Z^2 + Z/3", "0"
  friend bool operator==(const HomologyResult&, const HomologyResult&) = default;
};

HomologyResult homology(const Tribracket& t, Side side, int degree, Coefficients k = {}, const Limits& lim = {});

using ClassLabel = std::vector<BigInt>;

// Assigns each degree-n cycle coordinates that identify its class modulo boundaries.
class CycleClassifier {
 public:
  CycleClassifier(const Tribracket& t, Side side, int degree, const Limits& lim = {});

  ClassLabel label(const FormalChain& cycle) const;
  const std::vector<BigInt>& invariant_factors() const noexcept { return snf_.diagonal; }

 private:
  const Tribracket* t_;
  Side side_;
  int degree_;
  std::map<Word, int> index_;
  SmithForm snf_;
};

}  // namespace tribrac
