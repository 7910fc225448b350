#include "tribrac/tribracket.hpp"

#include "tribrac/error.hpp"

namespace tribrac {

static void require(const AxiomReport& r, const char* what) {
  if (r.passed()) return;
  std::string msg = std::string(what) + " fails";
  if (!r.violations.empty()) {
    const auto& v = r.violations.front();
    msg += " (" + v.axiom + " at";
    for (int w : v.witness) msg += " " + std::to_string(w);
    msg += ")";
  }
  throw Error(Errc::axiom_failure, msg);
}

Tribracket Tribracket::from_horizontal(const OperationTensor& h) {
  if (h.kind() != Kind::horizontal) throw Error(Errc::kind_mismatch, "expected a horizontal tensor");
  require(check_quasigroup(h), "quasigroup axiom");
  require(check_horizontal_exchange(h), "horizontal exchange axiom");
  return Tribracket(h, horizontal_to_vertical(h));
}

Tribracket Tribracket::from_vertical(const OperationTensor& v) {
  if (v.kind() != Kind::vertical) throw Error(Errc::kind_mismatch, "expected a vertical tensor");
  require(check_quasigroup(v), "quasigroup axiom");
  require(check_vertical_exchange(v), "vertical exchange axiom");
  return Tribracket(vertical_to_horizontal(v), v);
}

}  // namespace tribrac
