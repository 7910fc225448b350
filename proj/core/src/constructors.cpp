#include <algorithm>
#include <numeric>

#include "tribrac/error.hpp"
#include "tribrac/tensor.hpp"

namespace tribrac {

namespace {

int mod(long long v, int m) {
  long long r = v % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

std::string witness(std::initializer_list<int> xs) {
  std::string s = "(";
  for (int x : xs) {
    if (s.size() > 1) s += ",";
    s += std::to_string(x + 1);
  }
  return s + ")";
}

void check_table(const BinaryTable& t, const char* what) {
  if (t.n < 1 || t.n > max_size || t.entries.size() != static_cast<std::size_t>(t.n) * t.n)
    throw Error(Errc::invalid_argument, std::string(what) + ": table must be n x n with 1 <= n <= 255");
  for (Elem v : t.entries)
    if (v >= t.n) throw Error(Errc::invalid_argument, std::string(what) + ": entry out of range");
}

void check_latin(const BinaryTable& t, const char* what) {
  check_table(t, what);
  const int n = t.n;
  for (int i = 0; i < n; ++i) {
    std::vector<char> row(n), col(n);
    for (int j = 0; j < n; ++j) {
      if (row[t(i, j)]++) throw Error(Errc::axiom_failure, std::string(what) + ": row " + std::to_string(i + 1) + " repeats a value");
      if (col[t(j, i)]++) throw Error(Errc::axiom_failure, std::string(what) + ": column " + std::to_string(i + 1) + " repeats a value");
    }
  }
}

}  // namespace

OperationTensor alexander(int m, int x, int y) {
  if (m < 2 || m > max_size) throw Error(Errc::invalid_argument, "alexander: modulus must be in 2..255");
  x = mod(x, m);
  y = mod(y, m);
  if (std::gcd(x, m) != 1) throw Error(Errc::invalid_argument, "alexander: x = " + std::to_string(x) + " is not a unit mod " + std::to_string(m));
  if (std::gcd(y, m) != 1) throw Error(Errc::invalid_argument, "alexander: y = " + std::to_string(y) + " is not a unit mod " + std::to_string(m));
  OperationTensor t(m, Kind::horizontal);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        t.set(a, b, c, static_cast<Elem>(mod(1LL * x * b + 1LL * y * c - 1LL * x * y * a, m)));
  return t;
}

OperationTensor dehn(const BinaryTable& g) {
  check_table(g, "dehn");
  const int n = g.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g(g(a, b), c) != g(a, g(b, c)))
          throw Error(Errc::axiom_failure, "dehn: associativity fails at " + witness({a, b, c}));
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g(i, a) == a && g(a, i) == a;
    if (ok) e = i;
  }
  if (e < 0) throw Error(Errc::axiom_failure, "dehn: no identity element");
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g(a, b) == e && g(b, a) == e) inv[a] = b;
    if (inv[a] < 0) throw Error(Errc::axiom_failure, "dehn: element " + witness({a}) + " has no inverse");
  }
  OperationTensor t(n, Kind::horizontal);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) t.set(a, b, c, g(g(b, inv[a]), c));
  return t;
}

OperationTensor biquasile_to_vertical(const BinaryTable& star, const BinaryTable& dot) {
  check_latin(star, "biquasile star");
  check_latin(dot, "biquasile dot");
  if (star.n != dot.n) throw Error(Errc::invalid_argument, "biquasile tables differ in size");
  const int n = star.n;
  OperationTensor t(n, Kind::vertical);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) t.set(a, b, c, star(b, dot(a, c)));
  return t;
}

BinaryTable cyclic_group(int m) {
  if (m < 1 || m > max_size) throw Error(Errc::invalid_argument, "cyclic_group: order must be in 1..255");
  BinaryTable t{m, std::vector<Elem>(static_cast<std::size_t>(m) * m)};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t.entries[a * m + b] = static_cast<Elem>((a + b) % m);
  return t;
}

BinaryTable symmetric_group(int k) {
  if (k < 1 || k > 5) throw Error(Errc::invalid_argument, "symmetric_group: degree must be in 1..5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  BinaryTable t{n, std::vector<Elem>(static_cast<std::size_t>(n) * n)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> q(k);
      for (int i = 0; i < k; ++i) q[i] = perms[a][perms[b][i]];
      auto it = std::lower_bound(perms.begin(), perms.end(), q);
      t.entries[a * n + b] = static_cast<Elem>(it - perms.begin());
    }
  return t;
}

}  // namespace tribrac
