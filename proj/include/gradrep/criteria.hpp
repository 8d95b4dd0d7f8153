#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gradrep/presentations.hpp"

namespace gradrep {

/// yes / no are proofs; unknown-at-cap means a degree or resolution cap was
/// hit before an answer appeared; not-determined means the governing
/// sufficient condition fails, so the theorem says nothing.
enum class Verdict { Yes, No, UnknownAtCap, NotDetermined, NotApplicable };
std::string verdict_label(Verdict v);

struct CriterionVerdict {
  std::string category;  // e.g. "gmod+p", "D^b(gmod^b)"
  std::string side;      // "left", "right" or "both"
  Verdict verdict = Verdict::NotDetermined;
  std::string rule;      // the implication or equivalence applied
  std::string because;   // instance-specific evidence
};

struct DimensionRow {
  int vertex = 0;
  GradedDimension pd, id;
  std::string pd_error, id_error;  // non-empty when the computation refused
};

/// Sides on which the user asserts local noetherianity (no terminating test
/// exists in general).
struct NoetherianClaim {
  bool left = false;
  bool right = false;
};

struct NoetherianStatus {
  Verdict verdict = Verdict::NotDetermined;  // Yes when proved or asserted
  bool asserted = false;
  std::string because;
};

struct ExistenceReport {
  int cap = 10;
  Boundedness bounds;
  QuiverAnalysis analysis;
  bool path_algebra = false;
  bool special_multiserial = false;
  NoetherianStatus left_noetherian, right_noetherian;
  std::vector<DimensionRow> dimensions;
  std::vector<CriterionVerdict> verdicts;
  std::vector<std::string> caveats;
};

ExistenceReport existence_report(const AlgebraPtr& alg, int cap = 10, NoetherianClaim claim = {});

/// At most one arrow continues each arrow nontrivially on either side.
/// Only meaningful without frontier markers.
bool is_special_multiserial(const GradedAlgebra& alg);

nlohmann::json report_to_json(const GradedAlgebra& alg, const ExistenceReport& r);
std::string report_to_table(const GradedAlgebra& alg, const ExistenceReport& r);

}  // namespace gradrep
