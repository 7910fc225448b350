#pragma once

#include <vector>

#include "tribrac/chain.hpp"

namespace tribrac {

// A Z_m-valued function on the generators of one side and degree, stored densely
// over all words in lexicographic order. Entries on degenerate generators are 0.
class CochainTensor {
 public:
  CochainTensor() = default;
  CochainTensor(Side side, int degree, int size, int modulus);
  // Throws if a degenerate generator carries a nonzero value.
  CochainTensor(const Tribracket& t, Side side, int degree, int modulus, std::vector<int> values);

  Side side() const noexcept { return side_; }
  int degree() const noexcept { return degree_; }
  int size() const noexcept { return size_; }
  int modulus() const noexcept { return m_; }
  int length() const noexcept { return word_length(side_, degree_); }

  int value(std::span<const Elem> w) const { return v_[index(w)]; }
  void set(std::span<const Elem> w, long long value);
  const std::vector<int>& values() const noexcept { return v_; }
  bool is_zero() const noexcept;

  std::size_t index(std::span<const Elem> w) const;

  friend bool operator==(const CochainTensor&, const CochainTensor&) = default;
  friend CochainTensor operator+(CochainTensor x, const CochainTensor& y);
  friend CochainTensor operator-(CochainTensor x, const CochainTensor& y);

 private:
  Side side_ = Side::lb;
  int degree_ = 0, size_ = 0, m_ = 2;
  std::vector<int> v_;
};

bool vanishes_on_degenerates(const Tribracket& t, const CochainTensor& f);

CochainTensor coboundary(const Tribracket& t, const CochainTensor& f, const Limits& lim = {});
bool is_cocycle(const Tribracket& t, const CochainTensor& f, const Limits& lim = {});
std::vector<CochainTensor> cocycle_basis(const Tribracket& t, Side side, int degree, int p, const Limits& lim = {});
bool in_span(const Tribracket& t, const std::vector<CochainTensor>& basis, const CochainTensor& f);
bool are_cohomologous(const Tribracket& t, const CochainTensor& f, const CochainTensor& g, const Limits& lim = {});

// sum of coeff * f(generator) reduced into [0, m)
int evaluate(const CochainTensor& f, const FormalChain& c);

}  // namespace tribrac
