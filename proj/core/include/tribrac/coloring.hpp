#pragma once

#include <cstdint>
#include <vector>

#include "tribrac/cochain.hpp"
#include "tribrac/diagram.hpp"
#include "tribrac/homology.hpp"
#include "tribrac/local_biquandle.hpp"
#include "tribrac/polynomial.hpp"

namespace tribrac {

using RegionColoring = std::vector<Elem>;   // indexed by face
using SemiArcColoring = std::vector<Pair>;  // indexed by semi-arc

enum class Engine { brute_force, propagation };

struct ColoringOptions {
  Engine engine = Engine::propagation;
  std::uint64_t max_checks = 100'000'000;  // cap on |X|^F for the brute-force engine
  int threads = 1;
};

bool is_region_coloring(const PlanarDiagram& d, const Tribracket& t, const RegionColoring& c);
bool is_semiarc_coloring(const PlanarDiagram& d, const Tribracket& t, const SemiArcColoring& c);

// All region colorings in lexicographic order.
std::vector<RegionColoring> enumerate_region_colorings(const PlanarDiagram& d, const Tribracket& t,
                                                       const ColoringOptions& opts = {});

SemiArcColoring region_to_semiarc(const PlanarDiagram& d, const Tribracket& t, const RegionColoring& c);
RegionColoring semiarc_to_region(const PlanarDiagram& d, const SemiArcColoring& c);

FormalChain nie_weight_chain(const PlanarDiagram& d, const Tribracket& t, const RegionColoring& c);
FormalChain lb_weight_chain(const PlanarDiagram& d, const Tribracket& t, const SemiArcColoring& c);

// The side is taken from the cocycle: LB degree 2 or Nie degree 1. Refuses non-cocycles.
WeightPolynomial invariant(const PlanarDiagram& d, const Tribracket& t, const CochainTensor& theta,
                           const ColoringOptions& opts = {});

// Class of every weight cycle (LB degree 2 or Nie degree 1), sorted.
std::vector<ClassLabel> homology_class_multiset(const PlanarDiagram& d, const Tribracket& t, Side side,
                                                const ColoringOptions& opts = {}, const Limits& lim = {});

}  // namespace tribrac
