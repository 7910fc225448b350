#include "tribrac/coloring.hpp"

#include <algorithm>

#include "parallel.hpp"
#include "tribrac/error.hpp"

namespace tribrac {

namespace {

std::vector<CrossingFrame> frames(const PlanarDiagram& d) {
  std::vector<CrossingFrame> f;
  for (int x = 0; x < d.crossing_count(); ++x) f.push_back(crossing_frame(d, x));
  return f;
}

bool satisfied(const Tribracket& t, const CrossingFrame& f, const RegionColoring& c) {
  const auto& r = f.regions;
  return t.v(c[r[0]], c[r[1]], c[r[2]]) == c[r[3]];
}

void check_size(const PlanarDiagram& d, const RegionColoring& c) {
  if (static_cast<int>(c.size()) != d.face_count()) throw Error(Errc::invalid_argument, "region coloring has the wrong number of faces");
}

class Propagator {
 public:
  Propagator(const PlanarDiagram& d, const Tribracket& t) : t_(t), fr_(frames(d)), F_(d.face_count()) {
    // greedy order: next the face sharing most crossings with faces already placed
    std::vector<char> placed(F_, 0);
    std::vector<std::vector<int>> at_face(F_);
    for (int x = 0; x < static_cast<int>(fr_.size()); ++x)
      for (int r : fr_[x].regions)
        if (at_face[r].empty() || at_face[r].back() != x) at_face[r].push_back(x);
    for (int k = 0; k < F_; ++k) {
      int best = -1, score = -1;
      for (int f = 0; f < F_; ++f) {
        if (placed[f]) continue;
        int s = 0;
        for (int x : at_face[f])
          for (int r : fr_[x].regions) s += placed[r];
        if (s > score) {
          score = s;
          best = f;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
    }
    std::vector<int> pos(F_);
    for (int k = 0; k < F_; ++k) pos[order_[k]] = k;
    complete_.resize(F_);
    for (int x = 0; x < static_cast<int>(fr_.size()); ++x) {
      int last = 0;
      for (int r : fr_[x].regions) last = std::max(last, pos[r]);
      complete_[last].push_back(x);
    }
  }

  int first_face() const { return order_.empty() ? -1 : order_[0]; }

  void run(int first_value, std::vector<RegionColoring>& out) {
    RegionColoring c(F_, 0);
    out_ = &out;
    if (F_ == 0) return;
    c[order_[0]] = static_cast<Elem>(first_value);
    if (ok(0, c)) descend(1, c);
  }

 private:
  bool ok(int k, const RegionColoring& c) const {
    for (int x : complete_[k])
      if (!satisfied(t_, fr_[x], c)) return false;
    return true;
  }

  void descend(int k, RegionColoring& c) {
    if (k == F_) {
      out_->push_back(c);
      return;
    }
    const int f = order_[k];
    for (int v = 0; v < t_.size(); ++v) {
      c[f] = static_cast<Elem>(v);
      if (ok(k, c)) descend(k + 1, c);
    }
  }

  const Tribracket& t_;
  std::vector<CrossingFrame> fr_;
  int F_;
  std::vector<int> order_;
  std::vector<std::vector<int>> complete_;
  std::vector<RegionColoring>* out_ = nullptr;
};

std::vector<RegionColoring> brute_force(const PlanarDiagram& d, const Tribracket& t, const ColoringOptions& opts) {
  const int F = d.face_count(), n = t.size();
  std::uint64_t total = 1;
  for (int i = 0; i < F; ++i) {
    if (total > opts.max_checks / static_cast<std::uint64_t>(n) + 1) {
      total = opts.max_checks + 1;
      break;
    }
    total *= static_cast<std::uint64_t>(n);
  }
  if (total > opts.max_checks)
    throw CapExceeded("max-checks", std::to_string(n) + "^" + std::to_string(F) +
                                        " candidate region colorings exceed the brute-force cap of " +
                                        std::to_string(opts.max_checks) + "; use the propagation engine");
  const std::vector<CrossingFrame> fr = frames(d);
  std::vector<std::vector<RegionColoring>> parts(n);
  detail::parallel_for(n, opts.threads, [&](int first) {
    RegionColoring c(F, 0);
    c[0] = static_cast<Elem>(first);
    for (;;) {
      bool good = true;
      for (const auto& f : fr)
        if (!satisfied(t, f, c)) {
          good = false;
          break;
        }
      if (good) parts[first].push_back(c);
      int i = F - 1;
      for (; i >= 1; --i) {
        if (++c[i] < n) break;
        c[i] = 0;
      }
      if (i < 1) break;
    }
  });
  std::vector<RegionColoring> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

bool is_region_coloring(const PlanarDiagram& d, const Tribracket& t, const RegionColoring& c) {
  check_size(d, c);
  for (Elem e : c)
    if (e >= t.size()) return false;
  for (int x = 0; x < d.crossing_count(); ++x)
    if (!satisfied(t, crossing_frame(d, x), c)) return false;
  return true;
}

bool is_semiarc_coloring(const PlanarDiagram& d, const Tribracket& t, const SemiArcColoring& c) {
  if (static_cast<int>(c.size()) != d.semi_arc_count()) return false;
  for (int x = 0; x < d.crossing_count(); ++x) {
    const CrossingFrame f = crossing_frame(d, x);
    const Pair u1 = c[f.semi_arcs[0]], o1 = c[f.semi_arcs[1]], u2 = c[f.semi_arcs[2]], o2 = c[f.semi_arcs[3]];
    if (u1.first != o1.first) return false;
    const Elem a = u1.first, b = u1.second, cc = o1.second, abc = t.h(a, b, cc);
    if (u2 != Pair{cc, abc} || o2 != Pair{b, abc}) return false;
  }
  return true;
}

std::vector<RegionColoring> enumerate_region_colorings(const PlanarDiagram& d, const Tribracket& t,
                                                       const ColoringOptions& opts) {
  std::vector<RegionColoring> out;
  if (opts.engine == Engine::brute_force) {
    out = brute_force(d, t, opts);
  } else {
    std::vector<std::vector<RegionColoring>> parts(t.size());
    detail::parallel_for(t.size(), opts.threads, [&](int v) {
      Propagator p(d, t);
      p.run(v, parts[v]);
    });
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

SemiArcColoring region_to_semiarc(const PlanarDiagram& d, const Tribracket& t, const RegionColoring& c) {
  if (!d.connected()) throw Error(Errc::disconnected, "semi-arc colorings are defined from region colorings only for connected diagrams");
  check_size(d, c);
  SemiArcColoring s(d.semi_arc_count());
  for (int a = 0; a < d.semi_arc_count(); ++a) s[a] = {c[d.right_face(a)], c[d.left_face(a)]};
  if (is_region_coloring(d, t, c) && !is_semiarc_coloring(d, t, s))
    throw Error(Errc::invalid_argument, "translated coloring violates the semi-arc crossing condition");
  return s;
}

RegionColoring semiarc_to_region(const PlanarDiagram& d, const SemiArcColoring& c) {
  if (!d.connected()) throw Error(Errc::disconnected, "region colorings are recovered from semi-arc colorings only for connected diagrams");
  if (static_cast<int>(c.size()) != d.semi_arc_count()) throw Error(Errc::invalid_argument, "semi-arc coloring has the wrong length");
  std::vector<int> col(d.face_count(), -1);
  auto put = [&](int face, Elem v) {
    if (col[face] >= 0 && col[face] != v)
      throw Error(Errc::invalid_argument, "semi-arc coloring assigns two colors to face " + std::to_string(face));
    col[face] = v;
  };
  for (int a = 0; a < d.semi_arc_count(); ++a) {
    put(d.right_face(a), c[a].first);
    put(d.left_face(a), c[a].second);
  }
  RegionColoring out(d.face_count());
  for (int f = 0; f < d.face_count(); ++f) {
    if (col[f] < 0) throw Error(Errc::invalid_argument, "face " + std::to_string(f) + " touches no semi-arc");
    out[f] = static_cast<Elem>(col[f]);
  }
  return out;
}

FormalChain nie_weight_chain(const PlanarDiagram& d, const Tribracket& t, const RegionColoring& c) {
  check_size(d, c);
  FormalChain w(Side::nie, 1, t.size());
  for (int x = 0; x < d.crossing_count(); ++x) {
    const CrossingFrame f = crossing_frame(d, x);
    const Elem g[3] = {c[f.regions[0]], c[f.regions[1]], c[f.regions[2]]};
    w.add(g, f.sign);
  }
  return w;
}

FormalChain lb_weight_chain(const PlanarDiagram& d, const Tribracket& t, const SemiArcColoring& c) {
  if (static_cast<int>(c.size()) != d.semi_arc_count()) throw Error(Errc::invalid_argument, "semi-arc coloring has the wrong length");
  FormalChain w(Side::lb, 2, t.size());
  for (int x = 0; x < d.crossing_count(); ++x) {
    const CrossingFrame f = crossing_frame(d, x);
    const Pair u1 = c[f.semi_arcs[0]], o1 = c[f.semi_arcs[1]];
    const Elem g[3] = {u1.first, u1.second, o1.second};
    w.add(g, f.sign);
  }
  return w;
}

WeightPolynomial invariant(const PlanarDiagram& d, const Tribracket& t, const CochainTensor& theta,
                           const ColoringOptions& opts) {
  const bool lb = theta.side() == Side::lb;
  if (theta.degree() != (lb ? 2 : 1))
    throw Error(Errc::invalid_argument, "link invariants use LB degree 2 or Nie degree 1 cocycles");
  if (theta.size() != t.size()) throw Error(Errc::invalid_argument, "cocycle and tribracket differ in size");
  if (!is_cocycle(t, theta))
    throw Error(Errc::not_cocycle, std::string(side_name(theta.side())) + " degree " + std::to_string(theta.degree()) +
                                       " cochain is not a cocycle of this tribracket; its weights would not be invariant");
  WeightPolynomial w(theta.modulus());
  for (const RegionColoring& c : enumerate_region_colorings(d, t, opts)) {
    FormalChain chain = lb ? lb_weight_chain(d, t, region_to_semiarc(d, t, c)) : nie_weight_chain(d, t, c);
    w.add(evaluate(theta, chain));
  }
  return w;
}

std::vector<ClassLabel> homology_class_multiset(const PlanarDiagram& d, const Tribracket& t, Side side,
                                                const ColoringOptions& opts, const Limits& lim) {
  const bool lb = side == Side::lb;
  CycleClassifier cls(t, side, lb ? 2 : 1, lim);
  std::vector<ClassLabel> out;
  for (const RegionColoring& c : enumerate_region_colorings(d, t, opts))
    out.push_back(cls.label(lb ? lb_weight_chain(d, t, region_to_semiarc(d, t, c)) : nie_weight_chain(d, t, c)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tribrac
