#pragma once

#include <vector>

#include "tribrac/cochain.hpp"
#include "tribrac/homology.hpp"

namespace tribrac {

// <<a0..an>> = <a0,a1,<a1,a2,...<a(n-2),a(n-1),an>...>>; a length-1 word gives a0
// and a length-2 word gives a1.
Elem bold_angle(const Tribracket& t, std::span<const Elem> w);
// [[a0..an; b]] = [a(n-1),an,[...[a0,a1,b]...]]; a length-1 word gives b.
Elem bold_square(const Tribracket& t, std::span<const Elem> w, Elem b);

// LB word (a,b1..bn) -> Nie word (z0..zn)
Word phi(const Tribracket& t, std::span<const Elem> w);
// Nie word (a,a1..an) -> LB word (a,w1..wn)
Word psi(const Tribracket& t, std::span<const Elem> w);

FormalChain phi_chain(const Tribracket& t, const FormalChain& c);
FormalChain psi_chain(const Tribracket& t, const FormalChain& c);

// LB cochains are pulled back along psi, Nie cochains along phi.
enum class Via { phi, psi };
CochainTensor pull_cochain(const Tribracket& t, const CochainTensor& f, Via via);

struct BridgeDegreeReport {
  int degree = 0;                          // LB degree n, compared with Nie degree n-1
  std::size_t generators = 0;              // words checked on each side
  std::size_t inverse_residuals = 0;       // words where psi(phi(w)) != w or phi(psi(w)) != w
  std::size_t degeneracy_residuals = 0;    // words whose degeneracy is not preserved
  std::size_t chain_map_residuals = 0;     // nondegenerate g with d(phi g) != phi(d g)
  HomologyResult lb_homology, nie_homology;
  bool homology_agrees() const { return lb_homology == nie_homology; }
  bool passed() const {
    return inverse_residuals == 0 && degeneracy_residuals == 0 && chain_map_residuals == 0 && homology_agrees();
  }
};

std::vector<BridgeDegreeReport> verify_bridge(const Tribracket& t, int max_degree, const Limits& lim = {});

}  // namespace tribrac
