#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gradrep/matrix.hpp"
#include "gradrep/quiver.hpp"

namespace gradrep {

/// A homogeneous linear combination of parallel paths of one length >= 2.
struct Relation {
  std::vector<Path> paths;
  std::vector<Scalar> coeffs;
  int degree = 0;
  int source = 0;
  int target = 0;
};

/// Element of the piece e_target Λ_degree e_source, in coordinates over the
/// normal basis of that piece. Negative degrees are allowed and always zero.
struct AlgElement {
  int degree = 0;
  int source = 0;
  int target = 0;
  std::vector<Scalar> coords;

  bool is_zero() const;
};

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

struct VertexBound {
  int vertex = 0;
  bool finite = false;          // a zero degree piece was found within the cap
  int total_dim = 0;            // exact when finite
  std::vector<int> profile;     // dims of degrees 0..(first zero or cap)
  bool frontier_ray = false;    // declared unbounded by a ray frontier
  bool frontier_assumed = false;  // touches a bounded frontier, trusted as bounded
};

struct Boundedness {
  std::vector<VertexBound> left;   // Λe_x
  std::vector<VertexBound> right;  // e_xΛ
  bool left_bounded() const;
  bool right_bounded() const;
  bool left_unknown() const;   // some vertex hit the cap
  bool right_unknown() const;
};

class GradedAlgebra : public std::enable_shared_from_this<GradedAlgebra> {
 public:
  struct Piece {
    std::vector<Path> paths;           // lexicographic
    std::vector<int> basis;            // indices into `paths` of the normal basis
    Matrix reduce;                     // dim x #paths, path coords -> normal coords
    Matrix ideal;                      // rref rows spanning the relation ideal piece
    std::map<std::vector<int>, int> index;
    int dim() const { return static_cast<int>(basis.size()); }
  };

  /// Validates homogeneity, parallelism and length >= 2 of every relation.
  static AlgebraPtr create(Field field, Quiver quiver, std::vector<Relation> relations);

  GradedAlgebra(const GradedAlgebra&) = delete;
  GradedAlgebra& operator=(const GradedAlgebra&) = delete;

  Field field() const { return field_; }
  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  int num_vertices() const { return quiver_.num_vertices(); }
  /// True when every relation generator is the zero polynomial.
  bool is_path_algebra() const;

  /// e_y Λ_i e_x. Empty for i < 0.
  const Piece& piece(int i, int x, int y) const;
  int dim(int i, int x, int y) const;
  Path basis_path(int i, int x, int y, int k) const;

  AlgElement zero(int degree, int source, int target) const;
  AlgElement idempotent(int x) const;
  AlgElement arrow(int a) const;
  AlgElement element(const Path& p) const;
  AlgElement basis_element(int i, int x, int y, int k) const;
  std::vector<Scalar> normal_form(const Path& p) const;

  /// u·v (v first). Throws InputError unless source(u) = target(v).
  AlgElement multiply(const AlgElement& u, const AlgElement& v) const;
  AlgElement add(const AlgElement& u, const AlgElement& v) const;
  AlgElement scale(const AlgElement& u, const Scalar& s) const;

  /// v ↦ u·v from e_{source u}Λ_j e_w to e_{target u}Λ_{j+|u|} e_w.
  Matrix left_mult(const AlgElement& u, int j, int w) const;
  /// v ↦ v·u from e_w Λ_j e_{target u} to e_w Λ_{j+|u|} e_{source u}.
  Matrix right_mult(const AlgElement& u, int j, int w) const;

  /// The opposite algebra. opposite()->opposite() is this same object.
  AlgebraPtr opposite() const;
  bool is_opposite_of(const GradedAlgebra& other) const;
  /// u ↦ u°, an element of the opposite algebra.
  AlgElement to_opposite(const AlgElement& u) const;

  /// Λe_x is finite dimensional iff some piece (Λe_x)_d vanishes.
  Boundedness boundedness(int cap) const;
  /// First degree d <= cap with (Λe_x)_d = 0, or nullopt.
  std::optional<int> left_vanishing_degree(int x, int cap) const;
  std::optional<int> right_vanishing_degree(int x, int cap) const;

  /// Vertices a for which Λe_a (out) or e_aΛ (in) reaches a frontier marker of
  /// the given kind through a nonzero piece.
  bool frontier_tainted_out(int a, Frontier::Kind kind, int cap) const;
  bool frontier_tainted_in(int a, Frontier::Kind kind, int cap) const;

  std::string element_to_string(const AlgElement& u) const;

 private:
  GradedAlgebra(Field field, Quiver quiver, std::vector<Relation> relations);
  std::unique_ptr<Piece> build_piece(int i, int x, int y) const;
  bool reaches(int from, int to, int cap) const;

  Field field_;
  Quiver quiver_;
  std::vector<Relation> relations_;

  mutable std::mutex mutex_;
  mutable std::map<std::tuple<int, int, int>, std::unique_ptr<Piece>> pieces_;
  mutable std::weak_ptr<const GradedAlgebra> opposite_cache_;
  AlgebraPtr opposite_of_;  // set on algebras built by opposite()
};

}  // namespace gradrep
