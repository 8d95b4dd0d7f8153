#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace gradrep {

struct Arrow {
  std::string name;
  int from = 0;
  int to = 0;
};

/// Marks a vertex where the finite quiver data is a truncation of a larger
/// quiver. `side` says whether the hidden part feeds arrows into the vertex or
/// continues out of it; `kind` says whether paths through the hidden part stay
/// finite (Bounded) or run off along an infinite ray (Ray).
struct Frontier {
  enum class Side { In, Out };
  enum class Kind { Ray, Bounded };
  int vertex = 0;
  Side side = Side::Out;
  Kind kind = Kind::Ray;
};

/// Arrow indices in written order: front() is the last arrow applied, so
/// {b, a} is the path b·a that runs a first. A trivial path has no arrows and
/// source == target.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool operator==(const Path&) const = default;
};

struct QuiverAnalysis {
  bool acyclic = true;
  bool infinite_forward_path = false;
  bool infinite_backward_path = false;
  bool strongly_locally_finite = true;
  std::vector<int> cycle;  // vertices of one oriented cycle, if any
  // Same flags once frontier markers are taken into account.
  bool frontier_forward = false;
  bool frontier_backward = false;
  std::string caveat;
};

class Quiver {
 public:
  Quiver() = default;
  /// Throws InputError on duplicate labels/names or unknown endpoints.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
         std::vector<Frontier> frontier = {});
  static Quiver from_labels(const std::vector<std::string>& vertices,
                            const std::vector<std::array<std::string, 3>>& arrows);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int i) const { return arrows_.at(i); }
  const std::vector<Frontier>& frontier() const { return frontier_; }
  const std::vector<int>& arrows_out(int x) const { return out_.at(x); }
  const std::vector<int>& arrows_in(int y) const { return in_.at(y); }

  int vertex_index(const std::string& label) const;
  int arrow_index(const std::string& name) const;
  bool has_vertex(const std::string& label) const { return vindex_.count(label) > 0; }

  /// Same vertices, every arrow reversed. Names gain a trailing "°", or lose
  /// it if already present, so opposite(opposite(Q)) has identical data.
  Quiver opposite() const;

  /// Paths of length n from x to y, lexicographic in the arrow-name sequence.
  std::vector<Path> paths(int n, int x, int y) const;
  std::vector<Path> paths(int n, const std::string& x, const std::string& y) const;
  std::string path_name(const Path& p) const;
  Path path_from_names(const std::vector<std::string>& names) const;
  Path trivial(int x) const { return Path{x, x, {}}; }

  QuiverAnalysis analyze() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<Frontier> frontier_;
  std::map<std::string, int> vindex_;
  std::map<std::string, int> aindex_;
  std::vector<std::vector<int>> out_, in_;
};

std::string opposite_arrow_name(const std::string& name);

}  // namespace gradrep
