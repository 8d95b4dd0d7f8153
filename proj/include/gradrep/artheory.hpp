#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradrep/ext.hpp"

namespace gradrep {

/// u ↦ u° entrywise, transposed, shifts negated: P_a<s> becomes P°_a<-s>.
SummandMap transpose_map(const SummandMap& f);

struct Transpose {
  ModPtr module;           // Tr M over the opposite algebra, exact
  Presentation presentation;  // minimal presentation of M
  SummandMap matrix;       // P0^t -> P1^t over the opposite algebra
};
Transpose transpose(const ModPtr& m);

/// P_a<s> ↦ I_a<s>, P[u] ↦ I[u], and back.
SummandMap nakayama(const SummandMap& f);
SummandMap nakayama_inverse(const SummandMap& f);

struct Translate {
  ModPtr module;
  std::string warning;
  std::string verdict;  // indecomposability verdict of the input when certified
};

/// τM = 𝔇 Tr M. With `certify`, refuses unless the indecomposability verdict
/// is "yes"; projective input gives the zero module with a warning.
Translate tau(const ModPtr& m, bool certify = true, int budget = 64, std::uint64_t seed = 0);
/// τ⁻N = Tr 𝔇N.
Translate tau_inverse(const ModPtr& n, bool certify = true, int budget = 64, std::uint64_t seed = 0);

bool is_projective(const ModPtr& m);
bool is_injective(const ModPtr& m);

struct ArFormulaReport {
  int underline_hom = 0;    // dim underline GHom(M, X)
  int ext_x_tau_m = 0;      // dim Ext¹(X, τM)
  int overline_hom = 0;     // dim overline GHom(X, M)
  int ext_tauinv_m_x = 0;   // dim Ext¹(τ⁻M, X)
  bool first_holds() const { return underline_hom == ext_x_tau_m; }
  bool second_holds() const { return overline_hom == ext_tauinv_m_x; }
};
ArFormulaReport ar_formula_check(const ModPtr& m, const ModPtr& x);

struct AlmostSplitSequence {
  ModPtr left, middle, right;
  GradedMorphism f, g;
  std::vector<Scalar> xi;  // class of the sequence in Ext¹(right, left)
  std::string direction;
};

enum class Direction { Ending, Starting };

/// Ending at C: A = τC, ξ the first echelon vector of the socle of Ext¹(C, τC)
/// under rad End(C), E the pushout along a representative of ξ. Starting at A:
/// the ending construction over the opposite algebra at 𝔇A, dualized back.
AlmostSplitSequence almost_split_sequence(const ModPtr& c, Direction dir, int budget = 64, std::uint64_t seed = 0);
/// 0 -> N -> E -> M -> 0 for the class c of Ext¹(M, N).
AlmostSplitSequence sequence_from_class(const ExtSpace& e, const std::vector<Scalar>& c);

struct ArsVerdict {
  bool pass = false;
  std::string reason;  // first failing check: exactness, nonsplit, socle, tau, indecomposable
  bool exact = false, nonsplit = false, socle = false, left_is_tau = false, ends_indecomposable = false;
  std::vector<Scalar> xi;
  int ext_dim = 0;
  int radical_dim = 0;
  std::string left_verdict, right_verdict;
  std::string label() const { return pass ? "pass" : "fail(" + reason + ")"; }
};
ArsVerdict verify_almost_split(const AlmostSplitSequence& s, int budget = 64, std::uint64_t seed = 0);

/// Copy of f's pieces as a morphism between modules with the same data.
GradedMorphism retarget(const GradedMorphism& f, const ModPtr& src, const ModPtr& tgt);

}  // namespace gradrep
