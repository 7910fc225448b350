#include "tribrac/bridge.hpp"

#include "tribrac/error.hpp"

namespace tribrac {

Elem bold_angle(const Tribracket& t, std::span<const Elem> w) {
  if (w.empty()) throw Error(Errc::invalid_argument, "bold angle bracket of an empty word");
  const int n = static_cast<int>(w.size()) - 1;
  Elem x = w[n];
  for (int i = n - 2; i >= 0; --i) x = t.v(w[i], w[i + 1], x);
  return x;
}

Elem bold_square(const Tribracket& t, std::span<const Elem> w, Elem b) {
  if (w.empty()) throw Error(Errc::invalid_argument, "bold square bracket of an empty word");
  Elem x = b;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) x = t.h(w[i], w[i + 1], x);
  return x;
}

Word phi(const Tribracket& t, std::span<const Elem> w) {
  if (w.size() < 2) throw Error(Errc::invalid_argument, "phi needs an LB generator of degree at least 1");
  Word z(w.size());
  z[0] = w[0];
  z[1] = w[1];
  for (std::size_t i = 2; i < w.size(); ++i) z[i] = bold_square(t, std::span<const Elem>(z.data(), i), w[i]);
  return z;
}

Word psi(const Tribracket& t, std::span<const Elem> w) {
  if (w.size() < 2) throw Error(Errc::invalid_argument, "psi needs a Nie generator of degree at least 0");
  Word out(w.size());
  out[0] = w[0];
  out[1] = w[1];
  for (std::size_t i = 2; i < w.size(); ++i) out[i] = bold_angle(t, w.subspan(0, i + 1));
  return out;
}

static FormalChain map_chain(const Tribracket& t, const FormalChain& c, Side from, Side to,
                             Word (*f)(const Tribracket&, std::span<const Elem>)) {
  if (c.side() != from) throw Error(Errc::invalid_argument, "chain is on the wrong side for this map");
  FormalChain out(to, from == Side::lb ? c.degree() - 1 : c.degree() + 1, c.size());
  for (const auto& [w, k] : c.terms()) out.add(f(t, w), k);
  return project_nondegenerate(t, out);
}

FormalChain phi_chain(const Tribracket& t, const FormalChain& c) { return map_chain(t, c, Side::lb, Side::nie, phi); }
FormalChain psi_chain(const Tribracket& t, const FormalChain& c) { return map_chain(t, c, Side::nie, Side::lb, psi); }

CochainTensor pull_cochain(const Tribracket& t, const CochainTensor& f, Via via) {
  const bool from_lb = f.side() == Side::lb;
  if (from_lb != (via == Via::psi))
    throw Error(Errc::invalid_argument, "LB cochains are pulled back along psi and Nie cochains along phi");
  const Side to = from_lb ? Side::nie : Side::lb;
  const int degree = from_lb ? f.degree() - 1 : f.degree() + 1;
  CochainTensor out(to, degree, f.size(), f.modulus());
  for (const Word& w : all_generators(t.size(), to, degree, {UINT64_MAX, 1}))
    out.set(w, f.value(from_lb ? psi(t, w) : phi(t, w)));
  return out;
}

std::vector<BridgeDegreeReport> verify_bridge(const Tribracket& t, int max_degree, const Limits& lim) {
  std::vector<BridgeDegreeReport> out;
  for (int n = 1; n <= max_degree; ++n) {
    BridgeDegreeReport r;
    r.degree = n;
    std::vector<Word> lb = all_generators(t.size(), Side::lb, n, lim);
    std::vector<Word> nie = all_generators(t.size(), Side::nie, n - 1, lim);
    r.generators = lb.size();
    for (const Word& w : lb) {
      Word z = phi(t, w);
      if (psi(t, z) != w) ++r.inverse_residuals;
      if (is_degenerate(t, Side::lb, w) != is_degenerate(t, Side::nie, z)) ++r.degeneracy_residuals;
    }
    for (const Word& w : nie) {
      Word g = psi(t, w);
      if (phi(t, g) != w) ++r.inverse_residuals;
      if (is_degenerate(t, Side::nie, w) != is_degenerate(t, Side::lb, g)) ++r.degeneracy_residuals;
    }
    for (const Word& w : lb) {
      if (is_degenerate(t, Side::lb, w)) continue;
      FormalChain lhs = project_nondegenerate(t, nie_boundary(t, phi(t, w)));
      FormalChain rhs = phi_chain(t, lb_boundary(t, w));
      if (lhs != rhs) ++r.chain_map_residuals;
    }
    r.lb_homology = homology(t, Side::lb, n, {}, lim);
    r.nie_homology = homology(t, Side::nie, n - 1, {}, lim);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace tribrac
