#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace tribrac {

// Multiset of Z_m values written as sum of multiplicity * u^value.
class WeightPolynomial {
 public:
  explicit WeightPolynomial(int modulus = 0) : m_(modulus) {}

  int modulus() const noexcept { return m_; }
  void add(long long exponent, std::uint64_t multiplicity = 1);
  const std::map<int, std::uint64_t>& counts() const noexcept { return c_; }
  std::uint64_t total() const noexcept;
  std::uint64_t at_one() const noexcept { return total(); }

  // "c", "cu", "cu^k" terms by ascending exponent; "0" for the empty multiset
  std::string to_string() const;
  static WeightPolynomial parse(std::string_view text, int modulus = 0);

  bool same_terms(const WeightPolynomial& o) const { return c_ == o.c_; }
  friend bool operator==(const WeightPolynomial&, const WeightPolynomial&) = default;

 private:
  int m_;
  std::map<int, std::uint64_t> c_;
};

std::string format_polynomial(const WeightPolynomial& w);

}  // namespace tribrac
