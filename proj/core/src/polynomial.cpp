#include "tribrac/polynomial.hpp"

#include <cctype>
#include <charconv>

#include "tribrac/error.hpp"

namespace tribrac {

void WeightPolynomial::add(long long exponent, std::uint64_t multiplicity) {
  if (multiplicity == 0) return;
  if (m_ > 0) {
    exponent %= m_;
    if (exponent < 0) exponent += m_;
  }
  c_[static_cast<int>(exponent)] += multiplicity;
}

std::uint64_t WeightPolynomial::total() const noexcept {
  std::uint64_t t = 0;
  for (const auto& [e, k] : c_) t += k;
  return t;
}

std::string WeightPolynomial::to_string() const {
  std::string s;
  for (const auto& [e, k] : c_) {
    if (!s.empty()) s += "+";
    if (e == 0) {
      s += std::to_string(k);
      continue;
    }
    if (k != 1) s += std::to_string(k);
    s += "u";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "0" : s;
}

std::string format_polynomial(const WeightPolynomial& w) { return w.to_string(); }

WeightPolynomial WeightPolynomial::parse(std::string_view text, int modulus) {
  WeightPolynomial w(modulus);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s == "0") return w;
  auto bad = [&] { return Error(Errc::invalid_argument, "malformed polynomial '" + std::string(text) + "'"); };
  std::size_t i = 0;
  auto number = [&](long long& v) {
    auto [p, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
    if (ec != std::errc()) return false;
    i = static_cast<std::size_t>(p - s.data());
    return true;
  };
  if (s.empty()) throw bad();
  while (i < s.size()) {
    long long coeff = 1, exp = 0;
    bool have = number(coeff);
    if (i < s.size() && s[i] == 'u') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (!number(exp)) throw bad();
      }
    } else if (!have) {
      throw bad();
    }
    if (coeff < 0 || exp < 0) throw bad();
    w.add(exp, static_cast<std::uint64_t>(coeff));
    if (i < s.size()) {
      if (s[i] != '+') throw bad();
      ++i;
      if (i == s.size()) throw bad();
    }
  }
  return w;
}

}  // namespace tribrac
