#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tribrac {

// One crossing of the text format: semi-arc ids counterclockwise from the incoming
// under end; the incoming over end sits at position 3 for sign +1, position 1 for -1.
struct CrossingRecord {
  int sign = 1;
  std::array<int, 4> ids{};
  int line = 0;
};

struct ArcEnd {
  int crossing = -1;
  int position = -1;
};

class PlanarDiagram {
 public:
  // Validates and derives orientation, faces and components; throws ParseError.
  static PlanarDiagram build(std::vector<CrossingRecord> crossings, std::vector<int> circles, std::string name = {});

  const std::string& name() const noexcept { return name_; }
  int crossing_count() const noexcept { return static_cast<int>(rec_.size()); }
  int semi_arc_count() const noexcept { return static_cast<int>(ids_.size()); }
  int face_count() const noexcept { return static_cast<int>(face_corners_.size()); }
  int component_count() const noexcept { return components_; }
  bool connected() const noexcept { return pieces_ <= 1; }
  int writhe() const noexcept;

  const std::vector<CrossingRecord>& crossings() const noexcept { return rec_; }
  const std::vector<int>& circles() const noexcept { return circles_; }

  int sign(int x) const { return rec_.at(x).sign; }
  int arc_at(int x, int pos) const { return arc_at_.at(x)[pos]; }
  int arc_id(int arc) const { return ids_.at(arc); }
  bool is_circle(int arc) const { return head_.at(arc).crossing < 0; }
  bool incoming(int x, int pos) const { return incoming_.at(x)[pos]; }
  ArcEnd head(int arc) const { return head_.at(arc); }
  ArcEnd tail(int arc) const { return tail_.at(arc); }

  // face of the corner between positions p and p+1 counterclockwise
  int face(int x, int corner) const { return corner_face_.at(x)[corner]; }
  const std::vector<std::vector<ArcEnd>>& face_corners() const noexcept { return face_corners_; }
  int right_face(int arc) const { return right_.at(arc); }
  int left_face(int arc) const { return left_.at(arc); }

 private:
  std::string name_;
  std::vector<CrossingRecord> rec_;
  std::vector<int> circles_;
  std::vector<int> ids_;
  std::vector<std::array<int, 4>> arc_at_;
  std::vector<std::array<bool, 4>> incoming_;
  std::vector<ArcEnd> head_, tail_;
  std::vector<std::array<int, 4>> corner_face_;
  std::vector<std::vector<ArcEnd>> face_corners_;
  std::vector<int> right_, left_;
  int components_ = 0;
  int pieces_ = 0;
};

PlanarDiagram parse_pd(std::string_view text, std::string name = {});
std::string write_pd(const PlanarDiagram& d);

struct CrossingFrame {
  int crossing = 0;
  int sign = 1;
  std::array<int, 4> semi_arcs{};  // u1, o1, u2, o2
  std::array<int, 4> regions{};    // r1, r2, r3, r4
};

CrossingFrame crossing_frame(const PlanarDiagram& d, int crossing);

PlanarDiagram mirror(const PlanarDiagram& d);
PlanarDiagram reverse(const PlanarDiagram& d);
PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2);

std::vector<std::string> table_names();
std::string_view table_source(std::string_view name);
PlanarDiagram load_table(std::string_view name);
// A bundled table name or a path to a file in the text format.
PlanarDiagram load_diagram(const std::string& name_or_path);

}  // namespace tribrac
