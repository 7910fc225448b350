#include "tribrac/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "bundled_data.hpp"
#include "tribrac/error.hpp"

namespace tribrac {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int a, int b) { p[find(a)] = find(b); }
};

enum Role : signed char { unknown = 0, in = 1, out = -1 };

}  // namespace

int PlanarDiagram::writhe() const noexcept {
  int w = 0;
  for (const auto& r : rec_) w += r.sign;
  return w;
}

PlanarDiagram PlanarDiagram::build(std::vector<CrossingRecord> crossings, std::vector<int> circles, std::string name) {
  PlanarDiagram d;
  d.name_ = std::move(name);
  const int V = static_cast<int>(crossings.size());

  // semi-arc ids and their ends
  std::map<int, std::vector<ArcEnd>> ends;
  std::map<int, int> first_line;
  for (int x = 0; x < V; ++x) {
    const auto& r = crossings[x];
    if (r.sign != 1 && r.sign != -1) throw ParseError(ParseErrc::syntax, r.line, "crossing sign must be + or -");
    for (int p = 0; p < 4; ++p) {
      if (r.ids[p] <= 0) throw ParseError(ParseErrc::syntax, r.line, "semi-arc ids must be positive integers");
      auto& e = ends[r.ids[p]];
      e.push_back({x, p});
      first_line.try_emplace(r.ids[p], r.line);
      if (e.size() > 2)
        throw ParseError(ParseErrc::repeated_id, r.line, "semi-arc " + std::to_string(r.ids[p]) + " is used more than twice");
    }
  }
  for (const auto& [id, e] : ends)
    if (e.size() != 2)
      throw ParseError(ParseErrc::dangling_end, first_line[id], "semi-arc " + std::to_string(id) + " has a dangling end");
  {
    std::vector<int> seen;
    for (int c : circles) {
      if (c <= 0) throw ParseError(ParseErrc::syntax, 0, "circle ids must be positive integers");
      if (ends.count(c) || std::find(seen.begin(), seen.end(), c) != seen.end())
        throw ParseError(ParseErrc::repeated_id, 0, "circle id " + std::to_string(c) + " is already in use");
      seen.push_back(c);
    }
  }

  std::map<int, int> arc_of;
  for (const auto& [id, e] : ends) {
    arc_of[id] = static_cast<int>(d.ids_.size());
    d.ids_.push_back(id);
  }
  for (int c : circles) {
    arc_of[c] = static_cast<int>(d.ids_.size());
    d.ids_.push_back(c);
  }
  const int E = static_cast<int>(d.ids_.size());
  d.arc_at_.resize(V);
  for (int x = 0; x < V; ++x)
    for (int p = 0; p < 4; ++p) d.arc_at_[x][p] = arc_of[crossings[x].ids[p]];

  auto other_end = [&](int x, int p) {
    const auto& e = ends[crossings[x].ids[p]];
    return (e[0].crossing == x && e[0].position == p) ? e[1] : e[0];
  };

  // orientation: under strand runs from position 0 to position 2
  std::vector<std::array<Role, 4>> role(V, {unknown, unknown, unknown, unknown});
  std::vector<ArcEnd> queue;
  auto assign = [&](int x, int p, Role r, ParseErrc kind) {
    if (role[x][p] == r) return;
    if (role[x][p] != unknown)
      throw ParseError(kind, crossings[x].line,
                       kind == ParseErrc::sign ? "crossing sign contradicts the orientation of its over strand"
                                               : "orientation is inconsistent along a component at semi-arc " +
                                                     std::to_string(crossings[x].ids[p]));
    role[x][p] = r;
    queue.push_back({x, p});
  };
  auto propagate = [&](ParseErrc kind) {
    while (!queue.empty()) {
      ArcEnd c = queue.back();
      queue.pop_back();
      const Role r = role[c.crossing][c.position];
      const Role flip = r == in ? out : in;
      ArcEnd o = other_end(c.crossing, c.position);
      assign(o.crossing, o.position, flip, kind);
      if (c.position % 2 == 1) assign(c.crossing, 4 - c.position, flip, kind);
      else assign(c.crossing, (c.position + 2) % 4, flip, kind);
    }
  };
  for (int x = 0; x < V; ++x) {
    assign(x, 0, in, ParseErrc::orientation);
    assign(x, 2, out, ParseErrc::orientation);
  }
  propagate(ParseErrc::orientation);
  for (int x = 0; x < V; ++x)
    if (role[x][1] == unknown) {
      // a strand passing over everywhere: orientation comes from the stated sign
      assign(x, crossings[x].sign > 0 ? 3 : 1, in, ParseErrc::sign);
      propagate(ParseErrc::sign);
    }
  d.incoming_.resize(V);
  d.head_.assign(E, {});
  d.tail_.assign(E, {});
  for (int x = 0; x < V; ++x) {
    const int derived = role[x][3] == in ? 1 : -1;
    if (derived != crossings[x].sign)
      throw ParseError(ParseErrc::sign, crossings[x].line,
                       "crossing is marked " + std::string(crossings[x].sign > 0 ? "+" : "-") +
                           " but its orientation makes it " + (derived > 0 ? "+" : "-"));
    for (int p = 0; p < 4; ++p) {
      d.incoming_[x][p] = role[x][p] == in;
      (role[x][p] == in ? d.head_ : d.tail_)[d.arc_at_[x][p]] = {x, p};
    }
  }

  // connected pieces
  UnionFind uf(std::max(V, 1));
  for (const auto& [id, e] : ends) uf.join(e[0].crossing, e[1].crossing);
  std::vector<int> piece_of(V), piece_root;
  for (int x = 0; x < V; ++x) {
    int r = uf.find(x);
    auto it = std::find(piece_root.begin(), piece_root.end(), r);
    piece_of[x] = static_cast<int>(it - piece_root.begin());
    if (it == piece_root.end()) piece_root.push_back(r);
  }
  const int crossing_pieces = static_cast<int>(piece_root.size());
  d.pieces_ = crossing_pieces + static_cast<int>(circles.size());

  // faces by walking corners: from corner (x,p) follow the arc at p+1 to its other end
  d.corner_face_.assign(V, {-1, -1, -1, -1});
  std::vector<std::vector<ArcEnd>> raw;
  for (int x = 0; x < V; ++x)
    for (int p = 0; p < 4; ++p) {
      if (d.corner_face_[x][p] >= 0) continue;
      const int f = static_cast<int>(raw.size());
      raw.emplace_back();
      ArcEnd c{x, p};
      while (d.corner_face_[c.crossing][c.position] < 0) {
        d.corner_face_[c.crossing][c.position] = f;
        raw[f].push_back(c);
        c = other_end(c.crossing, (c.position + 1) % 4);
      }
      if (c.crossing != x || c.position != p)
        throw ParseError(ParseErrc::face_count, crossings[x].line, "face traversal does not close");
    }
  std::vector<int> piece_faces(crossing_pieces, 0), piece_crossings(crossing_pieces, 0);
  for (int x = 0; x < V; ++x) ++piece_crossings[piece_of[x]];
  for (const auto& f : raw) ++piece_faces[piece_of[f.front().crossing]];
  for (int k = 0; k < crossing_pieces; ++k)
    if (piece_faces[k] != piece_crossings[k] + 2)
      throw ParseError(ParseErrc::face_count, 0,
                       "diagram is not planar: " + std::to_string(piece_faces[k]) + " faces for " +
                           std::to_string(piece_crossings[k]) + " crossings");

  // Split pieces sit side by side: the face at each piece's first corner is the common outer face.
  std::vector<int> remap(raw.size());
  std::vector<std::vector<ArcEnd>> faces;
  int outer = -1;
  std::vector<char> piece_done(crossing_pieces, 0);
  for (std::size_t f = 0; f < raw.size(); ++f) {
    const int k = piece_of[raw[f].front().crossing];
    const bool is_outer = d.pieces_ > 1 && !piece_done[k];
    piece_done[k] = 1;
    if (is_outer && outer >= 0) {
      remap[f] = outer;
      faces[outer].insert(faces[outer].end(), raw[f].begin(), raw[f].end());
      continue;
    }
    remap[f] = static_cast<int>(faces.size());
    if (is_outer) outer = remap[f];
    faces.push_back(raw[f]);
  }
  for (auto& cf : d.corner_face_)
    for (int& f : cf) f = remap[f];
  if (!circles.empty() && outer < 0) {
    outer = static_cast<int>(faces.size());
    faces.emplace_back();
  }
  d.right_.assign(E, -1);
  d.left_.assign(E, -1);
  for (int a = 0; a < E; ++a) {
    if (d.head_[a].crossing < 0) continue;
    const ArcEnd h = d.head_[a];
    d.right_[a] = d.corner_face_[h.crossing][h.position];
    d.left_[a] = d.corner_face_[h.crossing][(h.position + 3) % 4];
  }
  // circles run counterclockwise around their own inner face
  for (int c : circles) {
    const int a = arc_of[c];
    d.right_[a] = outer;
    d.left_[a] = static_cast<int>(faces.size());
    faces.emplace_back();
  }
  d.face_corners_ = std::move(faces);

  // link components: follow each strand through its crossings
  std::vector<char> visited(E, 0);
  for (int a = 0; a < E; ++a) {
    if (visited[a]) continue;
    ++d.components_;
    for (int cur = a; !visited[cur];) {
      visited[cur] = 1;
      if (d.head_[cur].crossing < 0) break;
      const ArcEnd h = d.head_[cur];
      cur = d.arc_at_[h.crossing][(h.position + 2) % 4];
    }
  }

  d.rec_ = std::move(crossings);
  d.circles_ = std::move(circles);
  return d;
}

PlanarDiagram parse_pd(std::string_view text, std::string name) {
  std::vector<CrossingRecord> recs;
  std::vector<int> circles;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    auto read_id = [&](int& v) {
      std::string tok;
      if (!(ls >> tok)) throw ParseError(ParseErrc::syntax, lineno, "expected a semi-arc id");
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size() || v <= 0)
        throw ParseError(ParseErrc::syntax, lineno, "'" + tok + "' is not a positive integer id");
    };
    if (head == "O") {
      int id;
      read_id(id);
      circles.push_back(id);
    } else if (head == "X+" || head == "X-") {
      CrossingRecord r;
      r.sign = head == "X+" ? 1 : -1;
      r.line = lineno;
      for (int& v : r.ids) read_id(v);
      recs.push_back(r);
    } else {
      throw ParseError(ParseErrc::syntax, lineno, "unknown record '" + head + "', expected X+, X- or O");
    }
    std::string extra;
    if (ls >> extra) throw ParseError(ParseErrc::syntax, lineno, "unexpected trailing field '" + extra + "'");
  }
  if (recs.empty() && circles.empty()) throw ParseError(ParseErrc::syntax, 0, "diagram has no crossings or circles");
  return PlanarDiagram::build(std::move(recs), std::move(circles), std::move(name));
}

std::string write_pd(const PlanarDiagram& d) {
  std::string s;
  if (!d.name().empty()) s += "# " + d.name() + "\n";
  for (int c : d.circles()) s += "O " + std::to_string(c) + "\n";
  for (const auto& r : d.crossings()) {
    s += r.sign > 0 ? "X+" : "X-";
    for (int v : r.ids) s += " " + std::to_string(v);
    s += "\n";
  }
  return s;
}

CrossingFrame crossing_frame(const PlanarDiagram& d, int x) {
  if (x < 0 || x >= d.crossing_count()) throw Error(Errc::invalid_argument, "crossing index out of range");
  CrossingFrame f;
  f.crossing = x;
  f.sign = d.sign(x);
  auto arc = [&](int p) { return d.arc_at(x, p); };
  auto face = [&](int c) { return d.face(x, c); };
  if (f.sign > 0) {
    f.semi_arcs = {arc(0), arc(1), arc(2), arc(3)};
    f.regions = {face(0), face(3), face(2), face(1)};
  } else {
    f.semi_arcs = {arc(2), arc(1), arc(0), arc(3)};
    f.regions = {face(1), face(2), face(3), face(0)};
  }
  return f;
}

namespace {

std::vector<CrossingRecord> strip_lines(std::vector<CrossingRecord> r) {
  for (auto& c : r) c.line = 0;
  return r;
}

}  // namespace

PlanarDiagram mirror(const PlanarDiagram& d) {
  std::vector<CrossingRecord> out = strip_lines(d.crossings());
  for (auto& r : out) {
    const auto [i, j, k, l] = r.ids;
    r.ids = r.sign > 0 ? std::array<int, 4>{l, i, j, k} : std::array<int, 4>{j, k, l, i};
    r.sign = -r.sign;
  }
  return PlanarDiagram::build(std::move(out), d.circles(), d.name().empty() ? "" : "m" + d.name());
}

PlanarDiagram reverse(const PlanarDiagram& d) {
  std::vector<CrossingRecord> out = strip_lines(d.crossings());
  for (auto& r : out) {
    const auto [i, j, k, l] = r.ids;
    r.ids = {k, l, i, j};
  }
  return PlanarDiagram::build(std::move(out), d.circles(), d.name().empty() ? "" : "r" + d.name());
}

PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2) {
  std::string name = d1.name() + "#" + d2.name();
  if (d1.crossing_count() == 0 && d1.circles().size() == 1) return PlanarDiagram::build(d2.crossings(), d2.circles(), name);
  if (d2.crossing_count() == 0 && d2.circles().size() == 1) return PlanarDiagram::build(d1.crossings(), d1.circles(), name);
  if (d1.crossing_count() == 0 || d2.crossing_count() == 0)
    throw Error(Errc::invalid_argument, "connected sum needs a crossing on each side");
  int offset = 0;
  for (const auto& r : d1.crossings())
    for (int v : r.ids) offset = std::max(offset, v);
  for (int c : d1.circles()) offset = std::max(offset, c);
  std::vector<CrossingRecord> a = strip_lines(d1.crossings()), b = strip_lines(d2.crossings());
  for (auto& r : b)
    for (int& v : r.ids) v += offset;
  std::vector<int> circles = d1.circles();
  for (int c : d2.circles()) circles.push_back(c + offset);
  // cut the incoming under arc of each first crossing and exchange the heads
  const int e = a[0].ids[0], f = b[0].ids[0];
  const ArcEnd h1 = d1.head(d1.arc_at(0, 0)), h2 = d2.head(d2.arc_at(0, 0));
  a[h1.crossing].ids[h1.position] = f;
  b[h2.crossing].ids[h2.position] = e;
  a.insert(a.end(), b.begin(), b.end());
  return PlanarDiagram::build(std::move(a), std::move(circles), name);
}

std::vector<std::string> table_names() {
  std::vector<std::string> names;
  for (const auto& f : detail::bundled_diagrams()) names.emplace_back(f.name);
  return names;
}

std::string_view table_source(std::string_view name) {
  for (const auto& f : detail::bundled_diagrams())
    if (name == f.name) return f.text;
  std::string msg = "unknown diagram '" + std::string(name) + "'; available:";
  for (const auto& n : table_names()) msg += " " + n;
  throw Error(Errc::unknown_name, msg);
}

PlanarDiagram load_table(std::string_view name) { return parse_pd(table_source(name), std::string(name)); }

PlanarDiagram load_diagram(const std::string& name_or_path) {
  for (const auto& f : detail::bundled_diagrams())
    if (name_or_path == f.name) return parse_pd(f.text, f.name);
  std::ifstream in(name_or_path);
  if (!in) return load_table(name_or_path);  // reports the unknown name
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_pd(ss.str(), name_or_path);
}

}  // namespace tribrac
