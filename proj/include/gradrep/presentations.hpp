#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradrep/gmodule.hpp"

namespace gradrep {

/// P_a<shift> or I_a<shift>, depending on context.
struct Summand {
  int vertex = 0;
  int shift = 0;
  bool operator==(const Summand&) const = default;
};

/// A pure element of M used as a generator (top basis) or cogenerator
/// (socle basis): a column vector in the piece M_degree(vertex).
struct PureElement {
  int degree = 0;
  int vertex = 0;
  Matrix vector;
};

/// A map between finite sums of shifted standard projectives (kind P) or
/// injectives (kind I). entries[r][c] is u ∈ e_b Λ_{s-t} e_a for source
/// summand r = (b, t) and target summand c = (a, s). For projectives it acts
/// by right multiplication, v ↦ v·u; for injectives it is I[u], the transpose
/// of left multiplication by u.
struct SummandMap {
  StandardKind kind = StandardKind::P;
  AlgebraPtr algebra;
  std::vector<Summand> src, tgt;
  std::vector<std::vector<AlgElement>> entries;

  /// All entries in degree >= 1.
  bool is_radical() const;
  bool operator==(const SummandMap& o) const;
};

SummandMap zero_map(const AlgebraPtr& alg, StandardKind kind, std::vector<Summand> src, std::vector<Summand> tgt);

/// A realized direct sum of standard modules.
struct StandardSum {
  StandardKind kind = StandardKind::P;
  std::vector<Summand> summands;
  std::vector<ModPtr> parts;
  ModPtr module;
};

/// Projectives are cut at `hi` when infinite (or always, with `clip`);
/// injectives at `lo`. Finite summands otherwise keep their exact windows.
StandardSum projective_sum(const AlgebraPtr& alg, std::vector<Summand> summands, std::optional<int> hi = std::nullopt,
                           bool clip = false);
StandardSum injective_sum(const AlgebraPtr& alg, std::vector<Summand> summands, std::optional<int> lo = std::nullopt);
GradedMorphism realize(const SummandMap& f, const StandardSum& src, const StandardSum& tgt);

/// The morphism ⊕P_{x_r}<-d_r> -> M sending the r-th generator to images[r].
GradedMorphism morphism_from_generators(const StandardSum& p, const std::vector<Matrix>& images, const ModPtr& target);

/// Deterministic: per degree from the lowest, per vertex, the unit-vector
/// complement of the radical piece.
std::vector<PureElement> top_basis(const ModPtr& m);
std::vector<PureElement> soc_basis(const ModPtr& m);

struct Cover {
  ModPtr module;
  std::vector<PureElement> top;
  StandardSum projective;
  GradedMorphism epi;
};

/// The cover is realized on degrees up to `hi` (or the first degree where the
/// top of its kernel is certified zero) when a summand is infinite.
Cover projective_cover(const ModPtr& m, std::optional<int> hi = std::nullopt);
/// Ker(cover) with its top certificate when M is exact.
SubModule syzygy(const Cover& c);

struct Envelope {
  ModPtr module;
  std::vector<PureElement> socle;
  StandardSum injective;
  GradedMorphism mono;
};
Envelope injective_envelope(const ModPtr& m, std::optional<int> lo = std::nullopt);

/// P1 -d1-> P0 -cover-> M -> 0.
struct Presentation {
  ModPtr module;
  Cover cover;
  SubModule kernel;
  Cover kernel_cover;
  SummandMap d1;
  GradedMorphism d1_realized;

  bool is_minimal() const { return d1.is_radical(); }
};
Presentation minimal_presentation(const ModPtr& m, std::optional<int> hi = std::nullopt);

/// 0 -> M -> I0 -d0-> I1, computed as the dual of a minimal presentation of
/// 𝔇M over the opposite algebra.
struct Copresentation {
  ModPtr module;
  Presentation dual;
  std::vector<Summand> i0, i1;
  SummandMap d0;  // kind I
  ModPtr i0_module, i1_module;
  GradedMorphism envelope;
  GradedMorphism d0_realized;

  bool is_minimal() const { return d0.is_radical(); }
};
Copresentation minimal_copresentation(const ModPtr& m);

/// Cover entries of K ⊆ P0 as a map P1 -> P0.
SummandMap presentation_matrix(const Cover& kernel_cover, const GradedMorphism& inclusion, const StandardSum& p0);

struct Resolution {
  StandardKind kind = StandardKind::P;
  std::vector<std::vector<Summand>> terms;
  std::vector<SummandMap> maps;  // P: terms[n+1] -> terms[n]; I: terms[n] -> terms[n+1]
  std::optional<int> length;
  std::string reason;  // why the length is unknown
};

/// Minimal projective resolution, stopped after `cap`+1 terms. A cover
/// summand reaching an out-frontier of kind "bounded" stops with reason
/// "frontier".
Resolution projective_resolution(const ModPtr& m, int cap);
/// Minimal injective coresolution via the opposite algebra. Summands are
/// reported as I_a<s>.
Resolution injective_resolution(const ModPtr& m, int cap);

struct GradedDimension {
  std::optional<int> value;
  int cap = 0;
  std::string reason;
  Resolution resolution;
  std::string label() const;  // "n" or "unknown-at-cap"
};
GradedDimension projective_dimension(const ModPtr& m, int cap);
GradedDimension injective_dimension(const ModPtr& m, int cap);

/// The cokernel of a map between projective sums, realized on growing windows
/// until a vanishing degree above the generators proves it finite; exact.
ModPtr finite_cokernel(const SummandMap& f, int max_pad = 32);

/// Copy of m on [lo, hi] flagged exact; the caller vouches that M vanishes outside.
ModPtr exact_restriction(const ModPtr& m, int lo, int hi);

}  // namespace gradrep
