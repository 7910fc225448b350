#include "tribrac/json_io.hpp"

#include "json.hpp"
#include "tribrac/error.hpp"

namespace tribrac {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_argument, std::string("malformed JSON: ") + e.what());
  }
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw Error(Errc::invalid_argument, std::string("JSON field '") + key + "' must be an integer");
  return j[key].get<int>();
}

json cube(int n, auto&& value) {
  json out = json::array();
  for (int a = 0; a < n; ++a) {
    json m = json::array();
    for (int b = 0; b < n; ++b) {
      json row = json::array();
      for (int c = 0; c < n; ++c) row.push_back(value(a, b, c));
      m.push_back(std::move(row));
    }
    out.push_back(std::move(m));
  }
  return out;
}

// Flattens an n x ... x n nested array of the given depth; `offset` is subtracted from each entry.
std::vector<int> flatten(const json& j, int n, int depth, const char* what) {
  std::vector<int> out;
  auto rec = [&](auto&& self, const json& x, int d) -> void {
    if (d == 0) {
      if (!x.is_number_integer()) throw Error(Errc::invalid_argument, std::string(what) + ": entries must be integers");
      out.push_back(x.get<int>());
      return;
    }
    if (!x.is_array() || static_cast<int>(x.size()) != n)
      throw Error(Errc::invalid_argument, std::string(what) + ": expected nested arrays of length " + std::to_string(n));
    for (const auto& y : x) self(self, y, d - 1);
  };
  rec(rec, j, depth);
  return out;
}

std::vector<Elem> labels(const std::vector<int>& v, int n, const char* what) {
  std::vector<Elem> out;
  out.reserve(v.size());
  for (int x : v) {
    if (x < 1 || x > n) throw Error(Errc::invalid_argument, std::string(what) + ": entry " + std::to_string(x) + " is outside 1.." + std::to_string(n));
    out.push_back(static_cast<Elem>(x - 1));
  }
  return out;
}

json nested(const std::vector<int>& v, int n, int depth, std::size_t& pos) {
  if (depth == 0) return v[pos++];
  json a = json::array();
  for (int i = 0; i < n; ++i) a.push_back(nested(v, n, depth - 1, pos));
  return a;
}

}  // namespace

std::string tensor_to_json(const OperationTensor& t) {
  json j;
  j["size"] = t.size();
  j["kind"] = kind_name(t.kind());
  j["entries"] = cube(t.size(), [&](int a, int b, int c) { return t(a, b, c) + 1; });
  return j.dump();
}

OperationTensor tensor_from_json(std::string_view text) {
  json j = parse(text);
  const int n = get_int(j, "size");
  if (n < 1 || n > max_size) throw Error(Errc::invalid_argument, "tensor size out of range");
  if (!j.contains("kind") || !j["kind"].is_string()) throw Error(Errc::invalid_argument, "JSON field 'kind' is required");
  const std::string kind = j["kind"];
  if (kind != "horizontal" && kind != "vertical")
    throw Error(Errc::invalid_argument, "tensor kind must be horizontal or vertical");
  if (!j.contains("entries")) throw Error(Errc::invalid_argument, "JSON field 'entries' is required");
  return OperationTensor(n, kind == "horizontal" ? Kind::horizontal : Kind::vertical,
                         labels(flatten(j["entries"], n, 3, "tensor"), n, "tensor"));
}

Tribracket tribracket_from_json(std::string_view text) {
  OperationTensor t = tensor_from_json(text);
  return t.kind() == Kind::horizontal ? Tribracket::from_horizontal(t) : Tribracket::from_vertical(t);
}

std::string local_biquandle_to_json(const LocalBiquandle& l) {
  const int n = l.size();
  json j;
  j["size"] = n;
  j["under2"] = cube(n, [&](int a, int b, int c) { return l.under2(a, b, c) + 1; });
  j["over2"] = cube(n, [&](int a, int b, int c) { return l.over2(a, b, c) + 1; });
  return j.dump();
}

LocalBiquandle local_biquandle_from_json(std::string_view text) {
  json j = parse(text);
  const int n = get_int(j, "size");
  if (n < 1 || n > max_size) throw Error(Errc::invalid_argument, "local biquandle size out of range");
  if (!j.contains("under2") || !j.contains("over2")) throw Error(Errc::invalid_argument, "under2 and over2 are required");
  return LocalBiquandle(n, labels(flatten(j["under2"], n, 3, "under2"), n, "under2"),
                        labels(flatten(j["over2"], n, 3, "over2"), n, "over2"));
}

std::string cochain_to_json(const CochainTensor& f) {
  json j;
  j["size"] = f.size();
  j["modulus"] = f.modulus();
  j["degree"] = f.degree();
  j["side"] = side_name(f.side());
  std::size_t pos = 0;
  j["entries"] = nested(f.values(), f.size(), f.length(), pos);
  return j.dump();
}

CochainTensor cochain_from_json(std::string_view text, const Tribracket& t) {
  json j = parse(text);
  const int m = get_int(j, "modulus");
  const int degree = get_int(j, "degree");
  if (!j.contains("side") || !j["side"].is_string()) throw Error(Errc::invalid_argument, "JSON field 'side' is required");
  const Side side = parse_side(j["side"].get<std::string>());
  if (j.contains("size") && get_int(j, "size") != t.size())
    throw Error(Errc::invalid_argument, "cochain size does not match the tribracket");
  if (!j.contains("entries")) throw Error(Errc::invalid_argument, "JSON field 'entries' is required");
  if (degree < min_degree(side)) throw Error(Errc::invalid_argument, "cochain degree below the complex's lowest degree");
  return CochainTensor(t, side, degree, m, flatten(j["entries"], t.size(), word_length(side, degree), "cochain"));
}

std::string polynomial_to_json(const WeightPolynomial& w) {
  json j;
  j["modulus"] = w.modulus();
  json counts = json::object();
  for (const auto& [e, k] : w.counts()) counts[std::to_string(e)] = k;
  j["counts"] = counts;
  j["polynomial"] = w.to_string();
  j["total"] = w.total();
  return j.dump();
}

}  // namespace tribrac
