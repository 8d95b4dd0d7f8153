#pragma once

#include <optional>
#include <vector>

#include "gradrep/homs.hpp"
#include "gradrep/presentations.hpp"

namespace gradrep {

struct StableHomDims {
  int hom = 0;
  int underline = 0;  // modulo maps factoring through projectives
  int overline = 0;   // modulo maps factoring through injectives
};

/// M and N exact. Projective factorization is tested by lifting along the
/// cover of N, injective factorization by extending along the envelope of M.
StableHomDims stable_hom_dims(const ModPtr& m, const ModPtr& n);

/// Ext¹(M, N) = coker(GHom(P0, N) -> GHom(K, N)) for the minimal presentation
/// K ⊆ P0 -> M. Classes are stored as morphisms K -> N.
class ExtSpace {
 public:
  ModPtr m, n;
  Presentation pres;
  HomSpace hom_k;
  Matrix boundary;    // hom_k coordinates, basis of the image of GHom(P0, N)
  Matrix complement;  // hom_k coordinates, completes `boundary` to a basis

  int dim() const { return complement.cols(); }
  /// Coordinates of the class of h : K -> N.
  std::vector<Scalar> class_of(const GradedMorphism& h) const;
  GradedMorphism representative(const std::vector<Scalar>& c) const;
  /// φ0 : P0 -> P0 lifting φ ∈ End(M) along the cover.
  GradedMorphism lift_to_cover(const GradedMorphism& phi) const;
  /// The restriction of the lift to K.
  GradedMorphism lift_to_syzygy(const GradedMorphism& phi) const;
  /// Matrix of ξ ↦ ξ·φ (pullback along φ) in class coordinates.
  Matrix action(const GradedMorphism& phi) const;
};

ExtSpace ext1(const ModPtr& m, const ModPtr& n);

}  // namespace gradrep
