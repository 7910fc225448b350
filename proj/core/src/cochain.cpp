#include "tribrac/cochain.hpp"

#include "tribrac/error.hpp"
#include "tribrac/homology.hpp"

namespace tribrac {

namespace {

int reduce(long long v, int m) {
  long long r = v % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

Word word_at(std::size_t idx, int len, int n) {
  Word w(len);
  for (int i = len - 1; i >= 0; --i) {
    w[i] = static_cast<Elem>(idx % n);
    idx /= n;
  }
  return w;
}

void same_shape(const CochainTensor& f, const CochainTensor& g) {
  if (f.side() != g.side() || f.degree() != g.degree() || f.size() != g.size() || f.modulus() != g.modulus())
    throw Error(Errc::invalid_argument, "cochains differ in side, degree, size or modulus");
}

}  // namespace

CochainTensor::CochainTensor(Side side, int degree, int size, int modulus)
    : side_(side), degree_(degree), size_(size), m_(modulus) {
  if (modulus < 2) throw Error(Errc::invalid_argument, "cochain modulus must be at least 2");
  if (degree < min_degree(side)) throw Error(Errc::invalid_argument, "cochain degree below the complex's lowest degree");
  if (size < 1 || size > max_size) throw Error(Errc::invalid_argument, "cochain size out of range");
  std::uint64_t count = generator_count(size, side, degree);
  if (count > 50'000'000) throw CapExceeded("cochain-size", "cochain table would have " + std::to_string(count) + " entries");
  v_.assign(count, 0);
}

CochainTensor::CochainTensor(const Tribracket& t, Side side, int degree, int modulus, std::vector<int> values)
    : CochainTensor(side, degree, t.size(), modulus) {
  if (values.size() != v_.size()) throw Error(Errc::invalid_argument, "cochain value table has the wrong length");
  for (std::size_t i = 0; i < values.size(); ++i) v_[i] = reduce(values[i], m_);
  if (!vanishes_on_degenerates(t, *this))
    throw Error(Errc::invalid_argument, "cochain is nonzero on a degenerate generator");
}

std::size_t CochainTensor::index(std::span<const Elem> w) const {
  if (static_cast<int>(w.size()) != length()) throw Error(Errc::invalid_argument, "generator length does not match the cochain degree");
  std::size_t k = 0;
  for (Elem e : w) k = k * size_ + e;
  return k;
}

void CochainTensor::set(std::span<const Elem> w, long long value) { v_[index(w)] = reduce(value, m_); }

bool CochainTensor::is_zero() const noexcept {
  for (int x : v_)
    if (x) return false;
  return true;
}

CochainTensor operator+(CochainTensor x, const CochainTensor& y) {
  same_shape(x, y);
  for (std::size_t i = 0; i < x.v_.size(); ++i) x.v_[i] = (x.v_[i] + y.v_[i]) % x.m_;
  return x;
}

CochainTensor operator-(CochainTensor x, const CochainTensor& y) {
  same_shape(x, y);
  for (std::size_t i = 0; i < x.v_.size(); ++i) x.v_[i] = (x.v_[i] - y.v_[i] + x.m_) % x.m_;
  return x;
}

bool vanishes_on_degenerates(const Tribracket& t, const CochainTensor& f) {
  const int len = f.length();
  for (std::size_t i = 0; i < f.values().size(); ++i)
    if (f.values()[i] != 0 && is_degenerate(t, f.side(), word_at(i, len, f.size()))) return false;
  return true;
}

int evaluate(const CochainTensor& f, const FormalChain& c) {
  if (c.side() != f.side() || c.degree() != f.degree())
    throw Error(Errc::invalid_argument, "chain and cochain differ in side or degree");
  long long s = 0;
  for (const auto& [w, k] : c.terms()) s = (s + reduce(k, f.modulus()) * 1LL * f.value(w)) % f.modulus();
  return static_cast<int>(s);
}

CochainTensor coboundary(const Tribracket& t, const CochainTensor& f, const Limits& lim) {
  CochainTensor out(f.side(), f.degree() + 1, f.size(), f.modulus());
  for (const Word& g : nondegenerate_generators(t, f.side(), f.degree() + 1, lim)) {
    FormalChain d = f.side() == Side::lb ? lb_boundary(t, g) : nie_boundary(t, g);
    out.set(g, evaluate(f, project_nondegenerate(t, d)));
  }
  return out;
}

bool is_cocycle(const Tribracket& t, const CochainTensor& f, const Limits& lim) {
  return vanishes_on_degenerates(t, f) && coboundary(t, f, lim).is_zero();
}

std::vector<CochainTensor> cocycle_basis(const Tribracket& t, Side side, int degree, int p, const Limits& lim) {
  if (!is_prime(p)) throw Error(Errc::composite_modulus, "cocycle basis needs a prime modulus, got " + std::to_string(p));
  BoundaryMatrix b = boundary_matrix(t, side, degree + 1, lim);
  // f is a cocycle iff f B = 0, i.e. B^T f^T = 0
  const std::vector<Word>& basis = b.row_basis;
  std::vector<CochainTensor> out;
  for (const auto& x : nullspace_mod_p(b.matrix.transpose(), p)) {
    CochainTensor f(side, degree, t.size(), p);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i]) f.set(basis[i], x[i]);
    out.push_back(std::move(f));
  }
  return out;
}

bool in_span(const Tribracket& t, const std::vector<CochainTensor>& basis, const CochainTensor& f) {
  std::vector<Word> gens = nondegenerate_generators(t, f.side(), f.degree());
  IntMatrix m(static_cast<int>(basis.size()), static_cast<int>(gens.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    same_shape(basis[i], f);
    for (std::size_t j = 0; j < gens.size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = basis[i].value(gens[j]);
  }
  std::vector<int> v(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) v[j] = f.value(gens[j]);
  return in_row_space_mod_p(m, v, f.modulus());
}

bool are_cohomologous(const Tribracket& t, const CochainTensor& f, const CochainTensor& g, const Limits& lim) {
  same_shape(f, g);
  if (!is_prime(f.modulus()))
    throw Error(Errc::composite_modulus, "cohomology test needs a prime modulus, got " + std::to_string(f.modulus()));
  if (!is_cocycle(t, f, lim) || !is_cocycle(t, g, lim))
    throw Error(Errc::not_cocycle, "are_cohomologous expects two cocycles");
  CochainTensor diff = f - g;
  if (f.degree() == min_degree(f.side())) return diff.is_zero();
  // the image of the coboundary is the row space of the degree-n boundary matrix
  BoundaryMatrix a = boundary_matrix(t, f.side(), f.degree(), lim);
  std::vector<int> v(a.col_basis.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = diff.value(a.col_basis[j]);
  return in_row_space_mod_p(a.matrix, v, f.modulus());
}

}  // namespace tribrac
