#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = tribrac::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli enumerate") {
  auto r = run({"enumerate", "--size", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("count 12\n", 0) == 0);
  auto j = run({"--format", "json", "enumerate", "--size", "2"});
  CHECK(j.code == 0);
  auto v = nlohmann::json::parse(j.out);
  CHECK(v["count"] == 2);
  CHECK(v["tensors"].size() == 2);
  CHECK(run({"enumerate", "--size", "5"}).code == 3);
  CHECK(run({"enumerate", "--size", "3", "--latin"}).out == "latin cubes 24\n");
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"enumerate"}).code == 2);
  CHECK(run({"--format", "xml", "enumerate", "--size", "2"}).code == 2);
  CHECK(run({"invariant", "--diagram", "nope", "--example", "5.6"}).code == 2);
  CHECK(run({"invariant", "--diagram", "3_1", "--example", "9.9"}).code == 2);
  auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("verify-bridge") != std::string::npos);
}

TEST_CASE("cli invariant") {
  auto r = run({"invariant", "--diagram", "L2a1", "--example", "5.6"});
  CHECK(r.code == 0);
  CHECK(r.out == "9+18u\n{\"counts\":{\"0\":9,\"1\":18}}\n");
  CHECK(run({"invariant", "--diagram", "L2a1", "--example", "5.6", "--side", "nie"}).out == r.out);
  CHECK(run({"invariant", "--diagram", "L2a1", "--example", "5.6", "--expect", "9+18u"}).code == 0);
  CHECK(run({"invariant", "--diagram", "L2a1", "--example", "5.6", "--expect", "27"}).code == 1);
  CHECK(run({"invariant", "--diagram", "3_1", "--example", "5.8"}).code == 1);
  CHECK(run({"invariant", "--diagram", "3_1", "--example", "5.7", "--mod", "5"}).code == 2);
  auto j = run({"--format", "json", "invariant", "--diagram", "3_1", "--example", "5.7"});
  auto v = nlohmann::json::parse(j.out);
  CHECK(v["polynomial"] == "9+18u");
  CHECK(v["counts"]["1"] == 18);
}

TEST_CASE("cli text and json agree") {
  auto t = run({"homology", "--example", "5.7", "--degree", "3"});
  auto j = run({"--format", "json", "homology", "--example", "5.7", "--degree", "3"});
  CHECK(t.out == "H_3^LB(X; Z) = Z/3 + Z/3\n");
  CHECK(nlohmann::json::parse(j.out)["group"] == "Z/3 + Z/3");
  auto c = run({"color", "--example", "5.7", "--diagram", "4_1"});
  auto cj = run({"--format", "json", "color", "--example", "5.7", "--diagram", "4_1"});
  CHECK(c.out == "colorings " + nlohmann::json::parse(cj.out)["count"].dump() + "\n");
}

TEST_CASE("cli determinism and threads") {
  auto a = run({"tables", "--example", "5.7"});
  auto b = run({"--threads", "4", "tables", "--example", "5.7"});
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);
  CHECK(run({"enumerate", "--size", "3"}).out == run({"--threads", "3", "enumerate", "--size", "3"}).out);
}

TEST_CASE("cli check, convert, cocycles, bridge") {
  auto r = run({"check", "--example", "5.6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("fail") == std::string::npos);
  CHECK(run({"cocycles", "--example", "5.6", "--check"}).out == "cocycle\n");
  CHECK(run({"cocycles", "--example", "5.8", "--check"}).code == 1);
  auto basis = run({"--format", "json", "cocycles", "--example", "5.7", "--side", "lb", "--degree", "2", "--mod", "3"});
  CHECK(basis.code == 0);
  CHECK(nlohmann::json::parse(basis.out)["dimension"].get<int>() >= 1);
  CHECK(run({"cocycles", "--example", "5.7", "--mod", "4"}).code == 2);
  auto m = run({"convert", "--diagram", "3_1", "--to", "mirror"});
  CHECK(m.code == 0);
  CHECK(m.out.find("X-") != std::string::npos);
  auto vb = run({"verify-bridge", "--size", "2", "--max-degree", "3"});
  CHECK(vb.code == 0);
  CHECK(vb.out.find("all bridge identities hold") != std::string::npos);
}
