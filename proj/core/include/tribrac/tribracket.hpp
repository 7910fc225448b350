#pragma once

#include "tribrac/tensor.hpp"

namespace tribrac {

// A validated tribracket carrying both its horizontal and vertical tables.
class Tribracket {
 public:
  // Throws Error(axiom_failure) unless the tensor passes the quasigroup and exchange checks.
  static Tribracket from_horizontal(const OperationTensor& h);
  static Tribracket from_vertical(const OperationTensor& v);

  int size() const noexcept { return h_.size(); }
  Elem h(int a, int b, int c) const noexcept { return h_(a, b, c); }
  Elem v(int a, int b, int c) const noexcept { return v_(a, b, c); }
  const OperationTensor& horizontal() const noexcept { return h_; }
  const OperationTensor& vertical() const noexcept { return v_; }

  friend bool operator==(const Tribracket& x, const Tribracket& y) { return x.h_ == y.h_; }

 private:
  Tribracket(OperationTensor h, OperationTensor v) : h_(std::move(h)), v_(std::move(v)) {}
  OperationTensor h_, v_;
};

}  // namespace tribrac
