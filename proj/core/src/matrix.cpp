#include "tribrac/matrix.hpp"

#include <algorithm>

#include "tribrac/error.hpp"

namespace tribrac {

bool IntMatrix::is_zero() const noexcept {
  return std::all_of(d_.begin(), d_.end(), [](std::int64_t v) { return v == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols() != y.rows()) throw Error(Errc::invalid_argument, "matrix product dimension mismatch");
  IntMatrix p(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      const std::int64_t v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols(); ++j) p.at(i, j) += v * y.at(k, j);
    }
  return p;
}

namespace {

using Dense = std::vector<std::vector<BigInt>>;

Dense to_dense(const IntMatrix& a) {
  Dense m(a.rows(), std::vector<BigInt>(a.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m[i][j] = a.at(i, j);
  return m;
}

class Smith {
 public:
  Smith(const IntMatrix& a, bool with_left) : m_(to_dense(a)), rows_(a.rows()), cols_(a.cols()), track_(with_left) {
    if (track_) {
      p_.assign(rows_, std::vector<BigInt>(rows_));
      for (int i = 0; i < rows_; ++i) p_[i][i] = 1;
    }
  }

  SmithForm run() {
    SmithForm out;
    const int lim = std::min(rows_, cols_);
    for (int t = 0; t < lim; ++t) {
      if (!bring_min_to(t)) break;
      for (;;) {
        if (!clear_column(t)) continue;
        if (!clear_row(t)) continue;
        int bi = -1;
        for (int i = t + 1; i < rows_ && bi < 0; ++i)
          for (int j = t + 1; j < cols_; ++j)
            if (m_[i][j] % m_[t][t] != 0) {
              bi = i;
              break;
            }
        if (bi < 0) break;
        add_row(t, bi, 1);  // pulls a non-multiple into row t
      }
      if (m_[t][t] < 0) negate_row(t);
      out.diagonal.push_back(m_[t][t]);
    }
    if (track_) out.left = std::move(p_);
    return out;
  }

 private:
  bool bring_min_to(int t) {
    int bi = -1, bj = -1;
    BigInt best;
    for (int i = t; i < rows_; ++i)
      for (int j = t; j < cols_; ++j) {
        if (m_[i][j] == 0) continue;
        BigInt v = abs(m_[i][j]);
        if (bi < 0 || v < best) {
          best = v;
          bi = i;
          bj = j;
          if (best == 1) goto found;
        }
      }
    if (bi < 0) return false;
  found:
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Returns true when the column below the pivot is zero.
  bool clear_column(int t) {
    for (int i = t + 1; i < rows_; ++i) {
      if (m_[i][t] == 0) continue;
      BigInt q = m_[i][t] / m_[t][t];
      add_row(i, t, -q);
      if (m_[i][t] != 0) {
        swap_rows(t, i);
        return false;
      }
    }
    return true;
  }

  bool clear_row(int t) {
    for (int j = t + 1; j < cols_; ++j) {
      if (m_[t][j] == 0) continue;
      BigInt q = m_[t][j] / m_[t][t];
      for (int i = t; i < rows_; ++i)
        if (m_[i][t] != 0) m_[i][j] -= q * m_[i][t];
      if (m_[t][j] != 0) {
        swap_cols(t, j);
        return false;
      }
    }
    return true;
  }

  // row dst += k * row src
  void add_row(int dst, int src, const BigInt& k) {
    for (int j = 0; j < cols_; ++j)
      if (m_[src][j] != 0) m_[dst][j] += k * m_[src][j];
    if (track_)
      for (int j = 0; j < rows_; ++j)
        if (p_[src][j] != 0) p_[dst][j] += k * p_[src][j];
  }
  void swap_rows(int i, int k) {
    if (i == k) return;
    std::swap(m_[i], m_[k]);
    if (track_) std::swap(p_[i], p_[k]);
  }
  void swap_cols(int j, int k) {
    if (j == k) return;
    for (auto& row : m_) std::swap(row[j], row[k]);
  }
  void negate_row(int i) {
    for (auto& v : m_[i]) v = -v;
    if (track_)
      for (auto& v : p_[i]) v = -v;
  }

  Dense m_, p_;
  int rows_, cols_;
  bool track_;
};

long long modp(long long v, int p) {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

long long inverse_mod(long long a, int p) {
  long long r = 1, e = p - 2;
  a = modp(a, p);
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

void require_prime(int p) {
  if (!is_prime(p))
    throw Error(Errc::composite_modulus, "modulus " + std::to_string(p) + " is not prime; linear algebra needs prime coefficients");
}

// Reduced row echelon form mod p in place; returns pivot columns.
std::vector<int> rref_mod_p(std::vector<std::vector<long long>>& m, int cols, int p) {
  std::vector<int> pivots;
  int r = 0;
  const int rows = static_cast<int>(m.size());
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    const long long inv = inverse_mod(m[r][c], p);
    for (auto& v : m[r]) v = v * inv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const long long f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] = modp(m[i][j] - f * m[r][j], p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<long long>> reduce(const IntMatrix& a, int p) {
  std::vector<std::vector<long long>> m(a.rows(), std::vector<long long>(a.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m[i][j] = modp(a.at(i, j), p);
  return m;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a, bool with_left) { return Smith(a, with_left).run(); }

std::size_t rank_rational(const IntMatrix& a) {
  // fraction-free Bareiss elimination
  Dense m = to_dense(a);
  const int rows = a.rows(), cols = a.cols();
  BigInt prev = 1;
  std::size_t rank = 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
    ++rank;
  }
  return rank;
}

bool is_prime(int p) noexcept {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::size_t rank_mod_p(const IntMatrix& a, int p) {
  require_prime(p);
  auto m = reduce(a, p);
  return rref_mod_p(m, a.cols(), p).size();
}

std::vector<std::vector<int>> nullspace_mod_p(const IntMatrix& a, int p) {
  require_prime(p);
  auto m = reduce(a, p);
  const int cols = a.cols();
  std::vector<int> pivots = rref_mod_p(m, cols, p);
  std::vector<int> pivot_row(cols, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<int>(r);
  std::vector<std::vector<int>> basis;
  for (int f = 0; f < cols; ++f) {
    if (pivot_row[f] >= 0) continue;
    std::vector<int> x(cols, 0);
    x[f] = 1;
    for (int c = 0; c < cols; ++c)
      if (pivot_row[c] >= 0) x[c] = static_cast<int>(modp(-m[pivot_row[c]][f], p));
    basis.push_back(std::move(x));
  }
  return basis;
}

bool in_row_space_mod_p(const IntMatrix& a, std::span<const int> v, int p) {
  require_prime(p);
  if (static_cast<int>(v.size()) != a.cols()) throw Error(Errc::invalid_argument, "vector length does not match matrix columns");
  auto m = reduce(a, p);
  const std::size_t r0 = rref_mod_p(m, a.cols(), p).size();
  std::vector<long long> extra(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) extra[j] = modp(v[j], p);
  m.push_back(extra);
  return rref_mod_p(m, a.cols(), p).size() == r0;
}

}  // namespace tribrac
