#pragma once

#include <utility>
#include <vector>

#include "tribrac/tensor.hpp"

namespace tribrac {

using Pair = std::pair<Elem, Elem>;

// Only second components are stored: (a,b) under_a (a,c) = (c, under2(a,b,c)) and
// (a,b) over_a (a,c) = (c, over2(a,b,c)).
class LocalBiquandle {
 public:
  LocalBiquandle() = default;
  LocalBiquandle(int size, std::vector<Elem> under2, std::vector<Elem> over2);

  int size() const noexcept { return n_; }
  Elem under2(int a, int b, int c) const noexcept { return u_[idx(a, b, c)]; }
  Elem over2(int a, int b, int c) const noexcept { return o_[idx(a, b, c)]; }
  const std::vector<Elem>& under_table() const noexcept { return u_; }
  const std::vector<Elem>& over_table() const noexcept { return o_; }

  // Pair operations; both arguments must share their first component.
  Pair under(Pair x, Pair y) const;
  Pair over(Pair x, Pair y) const;
  // S((a,b),(a,c)) = ((b, over2(a,c,b)), (c, under2(a,b,c)))
  std::pair<Pair, Pair> exchange(Pair x, Pair y) const;

  friend bool operator==(const LocalBiquandle&, const LocalBiquandle&) = default;

 private:
  std::size_t idx(int a, int b, int c) const noexcept { return (static_cast<std::size_t>(a) * n_ + b) * n_ + c; }
  int n_ = 0;
  std::vector<Elem> u_, o_;
};

LocalBiquandle local_biquandle_from_horizontal(const OperationTensor& t);
OperationTensor local_biquandle_to_horizontal(const LocalBiquandle& l);
AxiomReport check_axioms(const LocalBiquandle& l);

}  // namespace tribrac
