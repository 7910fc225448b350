#pragma once

#include <string>
#include <string_view>

#include "tribrac/cochain.hpp"
#include "tribrac/local_biquandle.hpp"
#include "tribrac/polynomial.hpp"
#include "tribrac/tribracket.hpp"

namespace tribrac {

// {"size": n, "kind": "horizontal"|"vertical", "entries": [[[...]]]} with labels 1..n
std::string tensor_to_json(const OperationTensor& t);
OperationTensor tensor_from_json(std::string_view text);
// accepts either kind of tensor
Tribracket tribracket_from_json(std::string_view text);

// {"size": n, "under2": [[[...]]], "over2": [[[...]]]}
std::string local_biquandle_to_json(const LocalBiquandle& l);
LocalBiquandle local_biquandle_from_json(std::string_view text);

// {"size", "modulus", "degree", "side": "LB"|"N", "entries"} nested by word position
std::string cochain_to_json(const CochainTensor& f);
CochainTensor cochain_from_json(std::string_view text, const Tribracket& t);

// {"modulus": m, "counts": {"0": 9, "1": 18}, "polynomial": "9+18u"}
std::string polynomial_to_json(const WeightPolynomial& w);

}  // namespace tribrac
