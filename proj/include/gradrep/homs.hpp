#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradrep/gmodule.hpp"

namespace gradrep {

class HomSpace {
 public:
  ModPtr src, tgt;
  std::vector<GradedMorphism> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  /// Flat coordinates of a morphism's pieces over the degrees where Hom can live.
  std::vector<Scalar> flatten(const GradedMorphism& f) const;
  /// Coordinates in `basis`, or nullopt if f is not in the span.
  std::optional<std::vector<Scalar>> coordinates(const GradedMorphism& f) const;
  GradedMorphism combine(const std::vector<Scalar>& c) const;
  GradedMorphism zero() const { return GradedMorphism(src, tgt); }

  struct Slot {
    int degree, vertex, rows, cols, offset;
  };
  std::vector<Slot> slots;
  int flat_size = 0;
  Matrix flat_basis;  // flat_size x dim
};

/// All graded morphisms M -> N via the naturality system. Refuses with a
/// WindowError when the overlap of supports is unbounded or when either module
/// is unknown one degree around it.
HomSpace ghom(const ModPtr& m, const ModPtr& n);

/// Hom(M, I_a<s>), realizing I_a<s> on a window matching M.
HomSpace ghom_to_injective(const ModPtr& m, int a, int s);
/// The morphism M -> I_a<s> sending m to (u ↦ ψ(u·m)) for a functional
/// ψ on M_{-s}(a) given as a row vector.
GradedMorphism functional_to_injective(const ModPtr& m, const ModPtr& injective, int a, int s,
                                       const Matrix& psi);

class EndAlgebra {
 public:
  HomSpace hom;
  /// structure[i][j] = coordinates of basis_i ∘ basis_j.
  std::vector<std::vector<std::vector<Scalar>>> structure;
  std::vector<Scalar> identity;
  Matrix radical;  // dim x r, columns span rad End(M)

  int dim() const { return hom.dim(); }
  int radical_dim() const { return radical.cols(); }
  std::vector<Scalar> product(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
  Matrix left_mult(const std::vector<Scalar>& a) const;
  std::vector<GradedMorphism> radical_basis() const;
};

/// Requires an exact module. Radical by the trace-form kernel of the regular
/// representation; throws UnsupportedRadical when 0 < char <= dim End.
EndAlgebra end_algebra(const ModPtr& m);

struct IndecVerdict {
  enum class Kind { Yes, No, Presumed };
  Kind kind = Kind::Presumed;
  std::optional<GradedMorphism> idempotent;  // for No
  int end_dim = 0;
  int radical_dim = 0;
  int tried = 0;
  std::string detail;
  std::string label() const;
};

IndecVerdict is_strongly_indecomposable(const ModPtr& m, int budget = 64, std::uint64_t seed = 0);

/// Search for an isomorphism using Hom basis elements, pairwise sums and a
/// seeded batch of random combinations.
std::optional<GradedMorphism> find_isomorphism(const ModPtr& a, const ModPtr& b, int budget = 64,
                                               std::uint64_t seed = 0);

}  // namespace gradrep
