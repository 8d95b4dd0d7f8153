#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradrep/algebra.hpp"

namespace gradrep {

/// A graded module stored on a degree window [lo, hi]. On an exact side the
/// module vanishes outside the window; on a truncated side it is unknown.
class GradedModule {
 public:
  GradedModule(AlgebraPtr alg, int lo, int hi, bool truncated_below = false,
               bool truncated_above = false);

  const AlgebraPtr& algebra() const { return alg_; }
  Field field() const { return alg_->field(); }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool truncated_below() const { return trunc_below_; }
  bool truncated_above() const { return trunc_above_; }
  bool exact() const { return !trunc_below_ && !trunc_above_; }
  bool known(int i) const;
  void require_known(int i, const std::string& what) const;

  int dim(int i, int x) const;
  /// M_i(α) : M_i(x) -> M_{i+1}(y).
  Matrix map(int arrow, int i) const;
  /// M(p) from degree i along a path.
  Matrix act(const Path& p, int i) const;
  /// M(u) from degree i for u ∈ e_yΛe_x.
  Matrix act(const AlgElement& u, int i) const;

  void set_dim(int i, int x, int n);
  void set_map(int arrow, int i, Matrix m);

  int total_dim() const;
  int degree_dim(int i) const;
  bool is_zero() const { return total_dim() == 0 && exact(); }
  /// Smallest/largest degree carrying a nonzero piece inside the window.
  std::optional<int> min_degree() const;
  std::optional<int> max_degree() const;

  /// Certified: top(M)_j = 0 for all j >= this degree (used beyond a
  /// truncated-above window).
  std::optional<int> top_zero_from;

  bool same_data(const GradedModule& o) const;
  bool same_dims(const GradedModule& o) const;

 private:
  AlgebraPtr alg_;
  int lo_, hi_;
  bool trunc_below_, trunc_above_;
  std::vector<std::vector<int>> dims_;
  std::vector<std::vector<Matrix>> maps_;
};

using ModPtr = std::shared_ptr<const GradedModule>;

/// f_{i,x} for i in the source window; pieces outside that window are zero.
struct GradedMorphism {
  ModPtr src, tgt;
  std::vector<std::vector<Matrix>> f;

  GradedMorphism() = default;
  GradedMorphism(ModPtr s, ModPtr t);  // zero morphism

  Matrix at(int i, int x) const;
  void set(int i, int x, Matrix m);
  bool is_zero() const;
};

struct ValidationReport {
  bool ok = true;
  int relation = -1;
  int degree = 0;
  std::string message;
};

/// Submodule given with its inclusion, or quotient with its projection. The
/// quotient also keeps, per piece, the complement columns used as its basis.
struct SubModule {
  ModPtr module;
  GradedMorphism inclusion;
};

struct QuotientModule {
  ModPtr module;
  GradedMorphism projection;
  std::vector<std::vector<Matrix>> section;  // basis lifts, indexed like the parent window
};

ValidationReport validate(const GradedModule& m);
void require_valid(const GradedModule& m);

ModPtr shift(const ModPtr& m, int s);
ModPtr direct_sum(const std::vector<ModPtr>& parts);
/// Inclusions and projections of a direct sum built by direct_sum.
std::vector<GradedMorphism> sum_inclusions(const ModPtr& sum, const std::vector<ModPtr>& parts);
std::vector<GradedMorphism> sum_projections(const ModPtr& sum, const std::vector<ModPtr>& parts);
ModPtr zero_module(const AlgebraPtr& alg);
ModPtr restrict_window(const ModPtr& m, int lo, int hi);

/// 𝔇M over the opposite algebra. Requires an exact window.
ModPtr dual(const ModPtr& m);
/// 𝔇f : 𝔇N -> 𝔇M for f : M -> N.
GradedMorphism dual(const GradedMorphism& f, const ModPtr& dsrc, const ModPtr& dtgt);
GradedMorphism dual(const GradedMorphism& f);

/// Subspaces given per (degree, vertex) as column bases inside M's pieces.
using PieceSpaces = std::vector<std::vector<Matrix>>;
/// `spaces` covers degrees slo .. slo + spaces.size() - 1 of M's window.
SubModule submodule(const ModPtr& m, const PieceSpaces& spaces, int slo);
SubModule submodule(const ModPtr& m, const PieceSpaces& spaces);
QuotientModule quotient(const ModPtr& m, const PieceSpaces& spaces);

SubModule radical(const ModPtr& m);
SubModule socle(const ModPtr& m);
QuotientModule top(const ModPtr& m);

struct Classification {
  bool simple = false;
  bool semisimple = false;
  struct Part {
    int vertex;
    int shift;
    int multiplicity;
  };
  std::vector<Part> parts;
};
Classification classify(const GradedModule& m);

enum class StandardKind { P, I, S };
/// P_a<s>, I_a<s>, S_a<s>. Without a window, bounded modules get their exact
/// support and unbounded ones the window [support start, +cap] (or the mirror
/// image for injectives), flagged as truncated.
ModPtr standard(const AlgebraPtr& alg, StandardKind kind, int a, int s,
                std::optional<std::pair<int, int>> window = std::nullopt, int cap = 10);

// Morphism algebra.
GradedMorphism identity(const ModPtr& m);
GradedMorphism compose(const GradedMorphism& g, const GradedMorphism& f);  // g∘f
GradedMorphism add(const GradedMorphism& a, const GradedMorphism& b);
GradedMorphism scale(const GradedMorphism& a, const Scalar& s);
bool is_natural(const GradedMorphism& f);
bool is_isomorphism(const GradedMorphism& f);
bool is_injective(const GradedMorphism& f);
bool is_surjective(const GradedMorphism& f);
/// Morphism into/out of a direct sum assembled from components.
GradedMorphism stack_into(const ModPtr& sum, const std::vector<GradedMorphism>& parts);
GradedMorphism stack_from(const ModPtr& sum, const std::vector<GradedMorphism>& parts);

SubModule kernel(const GradedMorphism& f);
SubModule image(const GradedMorphism& f);
QuotientModule cokernel(const GradedMorphism& f);
/// For q : T -> T/U and h : T -> X vanishing on U, the induced T/U -> X.
GradedMorphism induced_from_quotient(const QuotientModule& q, const GradedMorphism& h);
/// Factor f : X -> M through an injective i : S -> M (f lands in Im i).
GradedMorphism factor_through_mono(const GradedMorphism& f, const GradedMorphism& i);

constexpr int kUnbounded = 1 << 28;
/// Degrees where a piece of a morphism a -> b can be nonzero. Truncated sides
/// count as unbounded (+-kUnbounded); an empty range has first > second.
std::pair<int, int> common_degrees(const GradedModule& a, const GradedModule& b);

}  // namespace gradrep
