#include "tribrac/examples.hpp"

#include <sstream>

#include "bundled_data.hpp"
#include "json.hpp"
#include "tribrac/error.hpp"
#include "tribrac/json_io.hpp"

namespace tribrac {

namespace {

const detail::BundledFile& find(const std::vector<detail::BundledFile>& files, std::string_view id, const char* what) {
  for (const auto& f : files)
    if (id == f.name) return f;
  std::string msg = std::string("unknown ") + what + " '" + std::string(id) + "'; available:";
  for (const auto& f : files) msg += std::string(" ") + f.name;
  throw Error(Errc::unknown_name, msg);
}

}  // namespace

std::vector<std::string> example_ids() {
  std::vector<std::string> ids;
  for (const auto& f : detail::bundled_examples()) ids.emplace_back(f.name);
  return ids;
}

ExamplePack load_example(std::string_view id) {
  const auto& f = find(detail::bundled_examples(), id, "example");
  nlohmann::json j = nlohmann::json::parse(f.text);
  Tribracket t = tribracket_from_json(j.at("tribracket").dump());
  CochainTensor theta = cochain_from_json(j.at("cocycle").dump(), t);
  return ExamplePack{f.name, std::move(t), std::move(theta)};
}

std::vector<std::string> golden_ids() {
  std::vector<std::string> ids;
  for (const auto& f : detail::bundled_golden()) ids.emplace_back(f.name);
  return ids;
}

std::vector<GoldenEntry> golden_table(std::string_view id) {
  const auto& f = find(detail::bundled_golden(), id, "golden table");
  const int m = load_example(id).cocycle.modulus();
  std::vector<GoldenEntry> out;
  std::istringstream in(f.text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h == 0) continue;
    std::istringstream ls(line);
    std::string name, poly;
    if (!(ls >> name)) continue;
    if (!(ls >> poly)) throw Error(Errc::parse_error, "golden table " + std::string(id) + ": entry '" + name + "' has no value");
    out.push_back({name, WeightPolynomial::parse(poly, m)});
  }
  return out;
}

}  // namespace tribrac
