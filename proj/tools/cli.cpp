#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tribrac/tribrac.hpp"

namespace tribrac::cli {

namespace {

using nlohmann::json;

struct Common {
  int threads = 1;
  std::string format = "text";
  bool json() const { return format == "json"; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_argument, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string labels(std::span<const Elem> w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i] + 1);
  return s;
}

json entries_json(const OperationTensor& t) { return json::parse(tensor_to_json(t))["entries"]; }

json report_json(const AxiomReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"axiom", x.axiom}, {"witness", x.witness}});
  return {{"passed", r.passed()}, {"violation_count", r.violation_count}, {"violations", v}};
}

void print_report(std::ostream& out, const std::string& what, const AxiomReport& r) {
  out << what << ": " << (r.passed() ? "pass" : "fail");
  if (!r.passed()) out << " (" << r.violation_count << " violations)";
  out << "\n";
  for (std::size_t i = 0; i < r.violations.size() && i < 5; ++i) {
    out << "  " << r.violations[i].axiom;
    for (int w : r.violations[i].witness) out << " " << w;
    out << "\n";
  }
}

// --tribracket FILE or --example ID
struct Source {
  std::string tribracket_file;
  std::string example;
  std::string cocycle_file;

  void add_tribracket(CLI::App* app) {
    app->add_option("--tribracket", tribracket_file, "tensor JSON file (horizontal or vertical)");
    app->add_option("--example", example, "bundled example pack (5.6, 5.7, 5.8)");
  }
  void add_cocycle(CLI::App* app) { app->add_option("--cocycle", cocycle_file, "cochain JSON file"); }

  Tribracket tribracket() const {
    if (!example.empty()) {
      if (!tribracket_file.empty()) throw Error(Errc::invalid_argument, "give either --tribracket or --example, not both");
      return load_example(example).tribracket;
    }
    if (tribracket_file.empty()) throw Error(Errc::invalid_argument, "a tribracket is required (--tribracket or --example)");
    return tribracket_from_json(read_file(tribracket_file));
  }
  std::optional<CochainTensor> cocycle(const Tribracket& t) const {
    if (!cocycle_file.empty()) return cochain_from_json(read_file(cocycle_file), t);
    if (!example.empty()) return load_example(example).cocycle;
    return std::nullopt;
  }
};

Engine parse_engine(const std::string& s) {
  if (s == "brute" || s == "brute-force") return Engine::brute_force;
  if (s == "propagation") return Engine::propagation;
  throw Error(Errc::invalid_argument, "unknown engine '" + s + "'");
}

int cmd_enumerate(const Common& c, int size, int cap, bool latin, std::ostream& out) {
  EnumerateOptions o{cap, c.threads};
  if (latin) {
    const auto n = count_latin_cubes(size, o);
    if (c.json()) out << json{{"size", size}, {"latin_cubes", n}}.dump() << "\n";
    else out << "latin cubes " << n << "\n";
    return ok;
  }
  auto ts = enumerate_horizontal(size, o);
  if (c.json()) {
    json arr = json::array();
    for (const auto& t : ts) arr.push_back(json::parse(tensor_to_json(t)));
    out << json{{"size", size}, {"count", ts.size()}, {"tensors", arr}}.dump() << "\n";
  } else {
    out << "count " << ts.size() << "\n";
    for (const auto& t : ts) out << entries_json(t).dump() << "\n";
  }
  return ok;
}

int cmd_check(const Common& c, const std::string& tensor_file, const std::string& lb_file, const Source& src,
              std::ostream& out) {
  json j;
  bool passed = true;
  auto tensor_checks = [&](const OperationTensor& t) {
    AxiomReport q = check_quasigroup(t);
    AxiomReport x = t.kind() == Kind::horizontal ? check_horizontal_exchange(t) : check_vertical_exchange(t);
    passed = passed && q.passed() && x.passed();
    if (c.json()) {
      j["kind"] = kind_name(t.kind());
      j["quasigroup"] = report_json(q);
      j["exchange"] = report_json(x);
    } else {
      out << "kind: " << kind_name(t.kind()) << "\n";
      print_report(out, "quasigroup", q);
      print_report(out, std::string(kind_name(t.kind())) + " exchange", x);
    }
    if (q.passed() && t.kind() == Kind::horizontal && x.passed()) {
      AxiomReport l = check_axioms(local_biquandle_from_horizontal(t));
      passed = passed && l.passed();
      if (c.json()) j["local_biquandle"] = report_json(l);
      else print_report(out, "local biquandle", l);
    }
  };
  if (!lb_file.empty()) {
    AxiomReport l = check_axioms(local_biquandle_from_json(read_file(lb_file)));
    passed = l.passed();
    if (c.json()) j["local_biquandle"] = report_json(l);
    else print_report(out, "local biquandle", l);
  } else if (!tensor_file.empty()) {
    tensor_checks(tensor_from_json(read_file(tensor_file)));
  } else if (!src.example.empty()) {
    tensor_checks(load_example(src.example).tribracket.horizontal());
  } else {
    throw Error(Errc::invalid_argument, "check needs --tensor, --local-biquandle or --example");
  }
  if (c.json()) {
    j["passed"] = passed;
    out << j.dump() << "\n";
  }
  return passed ? ok : mismatch;
}

int cmd_convert(const Common&, const std::string& tensor_file, const std::string& lb_file,
                const std::string& diagram, const std::string& to, std::ostream& out) {
  if (!diagram.empty()) {
    PlanarDiagram d = load_diagram(diagram);
    if (to == "pd") out << write_pd(d);
    else if (to == "mirror") out << write_pd(mirror(d));
    else if (to == "reverse") out << write_pd(reverse(d));
    else throw Error(Errc::invalid_argument, "diagrams convert to pd, mirror or reverse");
    return ok;
  }
  if (!lb_file.empty()) {
    if (to != "horizontal") throw Error(Errc::invalid_argument, "local biquandles convert to horizontal");
    out << tensor_to_json(local_biquandle_to_horizontal(local_biquandle_from_json(read_file(lb_file)))) << "\n";
    return ok;
  }
  if (tensor_file.empty()) throw Error(Errc::invalid_argument, "convert needs --tensor, --local-biquandle or --diagram");
  OperationTensor t = tensor_from_json(read_file(tensor_file));
  if (to == "vertical") out << tensor_to_json(t.kind() == Kind::vertical ? t : horizontal_to_vertical(t)) << "\n";
  else if (to == "horizontal") out << tensor_to_json(t.kind() == Kind::horizontal ? t : vertical_to_horizontal(t)) << "\n";
  else if (to == "local-biquandle") {
    OperationTensor h = t.kind() == Kind::horizontal ? t : vertical_to_horizontal(t);
    out << local_biquandle_to_json(local_biquandle_from_horizontal(h)) << "\n";
  } else {
    throw Error(Errc::invalid_argument, "unknown conversion target '" + to + "'");
  }
  return ok;
}

int cmd_homology(const Common& c, const Source& src, const std::string& side_s, int degree, int p,
                 std::uint64_t max_gens, std::ostream& out) {
  Tribracket t = src.tribracket();
  const Side side = parse_side(side_s);
  Limits lim{max_gens, c.threads};
  HomologyResult h = homology(t, side, degree, p ? Coefficients::mod(p) : Coefficients::integers(), lim);
  const std::string coeff = p ? "Z/" + std::to_string(p) : "Z";
  if (c.json()) {
    json tor = json::array();
    for (const auto& d : h.torsion) tor.push_back(d.str());
    out << json{{"side", side_name(side)}, {"degree", degree}, {"coefficients", coeff}, {"free_rank", h.free_rank},
                {"torsion", tor}, {"group", h.to_string()}}
               .dump()
        << "\n";
  } else {
    out << "H_" << degree << "^" << side_name(side) << "(X; " << coeff << ") = " << h.to_string() << "\n";
  }
  return ok;
}

int cmd_cocycles(const Common& c, const Source& src, const std::string& side_s, int degree, int p, bool check,
                 std::ostream& out) {
  Tribracket t = src.tribracket();
  if (check) {
    auto f = src.cocycle(t);
    if (!f) throw Error(Errc::invalid_argument, "--check needs --cocycle or --example");
    const bool yes = is_cocycle(t, *f);
    if (c.json()) out << json{{"is_cocycle", yes}, {"side", side_name(f->side())}, {"degree", f->degree()}, {"modulus", f->modulus()}}.dump() << "\n";
    else out << (yes ? "cocycle" : "not a cocycle") << "\n";
    return yes ? ok : mismatch;
  }
  const Side side = parse_side(side_s);
  auto basis = cocycle_basis(t, side, degree, p, {200000, c.threads});
  if (c.json()) {
    json arr = json::array();
    for (const auto& f : basis) arr.push_back(json::parse(cochain_to_json(f)));
    out << json{{"side", side_name(side)}, {"degree", degree}, {"modulus", p}, {"dimension", basis.size()}, {"basis", arr}}.dump() << "\n";
  } else {
    out << "dimension " << basis.size() << "\n";
    for (const auto& f : basis) out << json::parse(cochain_to_json(f))["entries"].dump() << "\n";
  }
  return ok;
}

int cmd_color(const Common& c, const Source& src, const std::string& diagram, const std::string& engine, bool list,
              std::ostream& out) {
  Tribracket t = src.tribracket();
  PlanarDiagram d = load_diagram(diagram);
  ColoringOptions o;
  o.engine = parse_engine(engine);
  o.threads = c.threads;
  auto cols = enumerate_region_colorings(d, t, o);
  if (c.json()) {
    json j{{"diagram", d.name()}, {"faces", d.face_count()}, {"count", cols.size()}};
    if (list) {
      json arr = json::array();
      for (const auto& col : cols) {
        json row = json::array();
        for (Elem e : col) row.push_back(e + 1);
        arr.push_back(row);
      }
      j["colorings"] = arr;
    }
    out << j.dump() << "\n";
  } else {
    out << "colorings " << cols.size() << "\n";
    if (list)
      for (const auto& col : cols) out << labels(col) << "\n";
  }
  return ok;
}

int cmd_invariant(const Common& c, const Source& src, const std::string& diagram, const std::string& side_s, int mod,
                  const std::string& engine, const std::string& expect, std::ostream& out) {
  Tribracket t = src.tribracket();
  auto theta = src.cocycle(t);
  if (!theta) throw Error(Errc::invalid_argument, "invariant needs --cocycle or --example");
  if (mod && mod != theta->modulus())
    throw Error(Errc::invalid_argument, "--mod " + std::to_string(mod) + " does not match the cocycle modulus " +
                                            std::to_string(theta->modulus()));
  if (!side_s.empty()) {
    const Side want = parse_side(side_s);
    if (want != theta->side()) theta = pull_cochain(t, *theta, theta->side() == Side::lb ? Via::psi : Via::phi);
  }
  PlanarDiagram d = load_diagram(diagram);
  ColoringOptions o;
  o.engine = parse_engine(engine);
  o.threads = c.threads;
  WeightPolynomial w = invariant(d, t, *theta, o);
  json counts = json::object();
  for (const auto& [e, k] : w.counts()) counts[std::to_string(e)] = k;
  if (c.json())
    out << json{{"diagram", d.name()}, {"side", side_name(theta->side())}, {"modulus", w.modulus()},
                {"polynomial", w.to_string()}, {"counts", counts}}
               .dump()
        << "\n";
  else
    out << w.to_string() << "\n" << json{{"counts", counts}}.dump() << "\n";
  if (!expect.empty() && !WeightPolynomial::parse(expect, w.modulus()).same_terms(w)) return mismatch;
  return ok;
}

int cmd_verify_bridge(const Common& c, const Source& src, int size, int max_degree, std::ostream& out) {
  std::vector<Tribracket> ts;
  if (!src.example.empty() || !src.tribracket_file.empty()) {
    ts.push_back(src.tribracket());
  } else {
    for (const auto& h : enumerate_horizontal(size, {4, c.threads})) ts.push_back(Tribracket::from_horizontal(h));
  }
  bool all = true;
  json arr = json::array();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (const auto& r : verify_bridge(ts[i], max_degree, {200000, c.threads})) {
      all = all && r.passed();
      if (c.json()) {
        arr.push_back({{"tribracket", i + 1}, {"degree", r.degree}, {"generators", r.generators},
                       {"inverse_residuals", r.inverse_residuals}, {"degeneracy_residuals", r.degeneracy_residuals},
                       {"chain_map_residuals", r.chain_map_residuals}, {"lb_homology", r.lb_homology.to_string()},
                       {"nie_homology", r.nie_homology.to_string()}, {"homology_agrees", r.homology_agrees()}});
      } else {
        out << "tribracket " << i + 1 << " degree " << r.degree << ": inverse " << r.inverse_residuals << ", degeneracy "
            << r.degeneracy_residuals << ", chain-map " << r.chain_map_residuals << ", H_" << r.degree
            << "^LB = " << r.lb_homology.to_string() << ", H_" << r.degree - 1 << "^N = " << r.nie_homology.to_string()
            << (r.homology_agrees() ? ", agree" : ", DIFFER") << "\n";
      }
    }
  }
  if (c.json()) out << json{{"passed", all}, {"results", arr}}.dump() << "\n";
  else out << (all ? "all bridge identities hold" : "bridge identities FAIL") << "\n";
  return all ? ok : mismatch;
}

int cmd_tables(const Common& c, const std::string& only, const std::string& engine, std::ostream& out) {
  std::vector<std::string> ids = only.empty() ? golden_ids() : std::vector<std::string>{only};
  ColoringOptions o;
  o.engine = parse_engine(engine);
  o.threads = c.threads;
  bool all = true;
  json results = json::array();
  for (const auto& id : ids) {
    ExamplePack ex = load_example(id);
    int good = 0, total = 0;
    for (const auto& g : golden_table(id)) {
      ++total;
      std::string got;
      bool match = false;
      try {
        WeightPolynomial w = invariant(load_table(g.diagram), ex.tribracket, ex.cocycle, o);
        got = w.to_string();
        match = w.same_terms(g.expected);
      } catch (const CapExceeded&) {
        throw;
      } catch (const Error& e) {
        if (e.code() != Errc::not_cocycle) throw;
        got = "refused (not a cocycle)";
      }
      good += match;
      if (c.json()) {
        results.push_back({{"table", id}, {"diagram", g.diagram}, {"expected", g.expected.to_string()}, {"computed", got}, {"match", match}});
      } else {
        out << id << "  " << g.diagram << "  expected " << g.expected.to_string() << "  computed " << got
            << (match ? "  ok" : "  MISMATCH") << "\n";
      }
    }
    all = all && good == total;
    if (!c.json()) out << id << ": " << good << "/" << total << " match\n";
  }
  if (c.json()) out << json{{"passed", all}, {"results", results}}.dump() << "\n";
  return all ? ok : mismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tribracket and local biquandle computations"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--threads", common.threads, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"text", "json"}));

  int size = 3, enum_cap = 4, degree = 2, p = 0, max_degree = 3, mod = 0;
  std::uint64_t max_gens = 200000;
  bool latin = false, list = false, check = false;
  std::string tensor_file, lb_file, diagram, to, side = "lb", engine = "propagation", expect, only;
  Source src;

  auto* en = app.add_subcommand("enumerate", "list every horizontal tribracket of a given size");
  en->add_option("--size", size, "number of elements")->required()->check(CLI::PositiveNumber);
  en->add_option("--cap", enum_cap, "largest size allowed")->check(CLI::PositiveNumber);
  en->add_flag("--latin", latin, "count Latin cubes instead");

  auto* ch = app.add_subcommand("check", "verify tribracket and local biquandle axioms");
  ch->add_option("--tensor,--tribracket", tensor_file, "tensor JSON file");
  ch->add_option("--local-biquandle", lb_file, "local biquandle JSON file");
  ch->add_option("--example", src.example, "bundled example pack");

  auto* cv = app.add_subcommand("convert", "convert between tensor kinds, local biquandles and diagram forms");
  cv->add_option("--tensor", tensor_file, "tensor JSON file");
  cv->add_option("--local-biquandle", lb_file, "local biquandle JSON file");
  cv->add_option("--diagram", diagram, "diagram file or table name");
  cv->add_option("--to", to, "vertical, horizontal, local-biquandle, pd, mirror, reverse")->required();

  auto* ho = app.add_subcommand("homology", "homology of either complex");
  src.add_tribracket(ho);
  ho->add_option("--side", side, "lb or nie");
  ho->add_option("--degree", degree, "degree")->required();
  ho->add_option("--mod", p, "prime coefficients (default: integers)");
  ho->add_option("--max-generators", max_gens, "generator cap per degree");

  auto* co = app.add_subcommand("cocycles", "cocycle basis over Z_p, or check a cochain");
  src.add_tribracket(co);
  src.add_cocycle(co);
  co->add_option("--side", side, "lb or nie");
  co->add_option("--degree", degree, "degree");
  co->add_option("--mod", p, "prime modulus");
  co->add_flag("--check", check, "check that the given cochain is a cocycle");

  auto* cl = app.add_subcommand("color", "region colorings of a diagram");
  src.add_tribracket(cl);
  cl->add_option("--diagram", diagram, "diagram file or table name")->required();
  cl->add_option("--engine", engine, "propagation or brute");
  cl->add_flag("--list", list, "print every coloring");

  auto* in = app.add_subcommand("invariant", "cocycle invariant of a diagram");
  src.add_tribracket(in);
  src.add_cocycle(in);
  in->add_option("--diagram", diagram, "diagram file or table name")->required();
  in->add_option("--side", side, "lb or nie");
  in->add_option("--mod", mod, "expected cocycle modulus");
  in->add_option("--engine", engine, "propagation or brute");
  in->add_option("--expect", expect, "exit 1 unless the polynomial equals this");

  auto* vb = app.add_subcommand("verify-bridge", "check the chain maps between the two complexes");
  src.add_tribracket(vb);
  vb->add_option("--size", size, "check every tribracket of this size")->check(CLI::PositiveNumber);
  vb->add_option("--max-degree", max_degree, "highest LB degree")->check(CLI::PositiveNumber);

  auto* tb = app.add_subcommand("tables", "recompute the bundled invariant tables");
  tb->add_option("--example", only, "only this table");
  tb->add_option("--engine", engine, "propagation or brute");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return usage;
  }

  try {
    if (*en) return cmd_enumerate(common, size, enum_cap, latin, out);
    if (*ch) return cmd_check(common, tensor_file, lb_file, src, out);
    if (*cv) return cmd_convert(common, tensor_file, lb_file, diagram, to, out);
    if (*ho) {
      if (!ho->count("--side")) side = "lb";
      return cmd_homology(common, src, side, degree, p, max_gens, out);
    }
    if (*co) {
      if (!check && p == 0) throw Error(Errc::invalid_argument, "cocycles needs --mod p (or --check)");
      return cmd_cocycles(common, src, side, degree, p, check, out);
    }
    if (*cl) return cmd_color(common, src, diagram, engine, list, out);
    if (*in) return cmd_invariant(common, src, diagram, in->count("--side") ? side : "", mod, engine, expect, out);
    if (*vb) return cmd_verify_bridge(common, src, size, max_degree, out);
    if (*tb) return cmd_tables(common, only, engine, out);
  } catch (const CapExceeded& e) {
    err << "cap exceeded [" << e.cap() << "]: " << e.what() << "\n";
    return cap;
  } catch (const Error& e) {
    err << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return e.code() == Errc::not_cocycle ? mismatch : usage;
  }
  return usage;
}

}  // namespace tribrac::cli
