#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tribrac {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : r_(rows), c_(cols), d_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const noexcept { return r_; }
  int cols() const noexcept { return c_; }
  std::int64_t at(int i, int j) const noexcept { return d_[static_cast<std::size_t>(i) * c_ + j]; }
  std::int64_t& at(int i, int j) noexcept { return d_[static_cast<std::size_t>(i) * c_ + j]; }
  bool is_zero() const noexcept;
  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);

 private:
  int r_ = 0, c_ = 0;
  std::vector<std::int64_t> d_;
};

struct SmithForm {
  // nonzero invariant factors, positive, each dividing the next
  std::vector<BigInt> diagonal;
  // P with P*A*Q = D, filled when requested (rows x rows)
  std::vector<std::vector<BigInt>> left;

  std::size_t rank() const noexcept { return diagonal.size(); }
};

SmithForm smith_normal_form(const IntMatrix& a, bool with_left = false);

// Independent rank computations used as cross-checks.
std::size_t rank_rational(const IntMatrix& a);
std::size_t rank_mod_p(const IntMatrix& a, int p);

bool is_prime(int p) noexcept;

// Basis of {x : A x = 0} over Z_p, from the reduced row echelon form of A.
// One vector per free column, in increasing column order.
std::vector<std::vector<int>> nullspace_mod_p(const IntMatrix& a, int p);
// Whether v (length a.cols()) lies in the row space of A over Z_p.
bool in_row_space_mod_p(const IntMatrix& a, std::span<const int> v, int p);

}  // namespace tribrac
