#include "gradrep/criteria.hpp"

#include <sstream>

#include "gradrep/error.hpp"

namespace gradrep {

std::string verdict_label(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::UnknownAtCap: return "unknown-at-cap";
    case Verdict::NotDetermined: return "not-determined";
    default: return "not-applicable";
  }
}

namespace {

struct SideStatus {
  Verdict verdict;
  std::string because;
};

SideStatus bounded_side(const GradedAlgebra& alg, const std::vector<VertexBound>& side, const char* name) {
  const auto& labels = alg.quiver().vertices();
  for (const auto& v : side)
    if (v.frontier_ray)
      return {Verdict::NotDetermined,
              std::string("not locally ") + name + " bounded: vertex " + labels[v.vertex] + " reaches a ray frontier"};
  for (const auto& v : side)
    if (!v.finite)
      return {Verdict::UnknownAtCap, "no vanishing degree found within the cap at vertex " + labels[v.vertex]};
  return {Verdict::Yes, std::string("locally ") + name + " bounded"};
}

std::string dimension_summary(const std::vector<DimensionRow>& rows, bool proj, const GradedAlgebra& alg,
                              bool* all_finite) {
  std::ostringstream out;
  *all_finite = true;
  for (const auto& r : rows) {
    const GradedDimension& d = proj ? r.pd : r.id;
    const std::string& err = proj ? r.pd_error : r.id_error;
    if (!d.value || !err.empty()) *all_finite = false;
    if (out.tellp() > 0) out << ", ";
    out << (proj ? "pd S_" : "id S_") << alg.quiver().vertices()[r.vertex] << " = "
        << (err.empty() ? d.label() : "unknown-at-cap");
  }
  return out.str();
}

NoetherianStatus noetherian_side(Verdict bounded, bool multiserial, bool asserted, const char* side) {
  if (bounded == Verdict::Yes) return {Verdict::Yes, false, std::string("locally ") + side + " bounded"};
  if (multiserial) return {Verdict::Yes, false, "special multi-serial"};
  if (asserted) return {Verdict::Yes, true, "asserted by the user"};
  return {Verdict::NotDetermined, false, "not decided; assert it with --noetherian if known"};
}

}  // namespace

bool is_special_multiserial(const GradedAlgebra& alg) {
  const Quiver& q = alg.quiver();
  if (!q.frontier().empty()) return false;
  for (int a = 0; a < q.num_arrows(); ++a) {
    int after = 0, before = 0;
    for (int b : q.arrows_out(q.arrow(a).to))
      after += alg.element(Path{q.arrow(a).from, q.arrow(b).to, {b, a}}).is_zero() ? 0 : 1;
    for (int c : q.arrows_in(q.arrow(a).from))
      before += alg.element(Path{q.arrow(c).from, q.arrow(a).to, {a, c}}).is_zero() ? 0 : 1;
    if (after > 1 || before > 1) return false;
  }
  return true;
}

ExistenceReport existence_report(const AlgebraPtr& alg, int cap, NoetherianClaim claim) {
  if (cap <= 0) throw InputError("criteria: cap must be positive");
  ExistenceReport r;
  r.cap = cap;
  r.bounds = alg->boundedness(cap);
  r.analysis = alg->quiver().analyze();
  r.path_algebra = alg->is_path_algebra();
  const auto& labels = alg->quiver().vertices();

  for (int x = 0; x < alg->num_vertices(); ++x) {
    DimensionRow row;
    row.vertex = x;
    ModPtr s = standard(alg, StandardKind::S, x, 0);
    try {
      row.pd = projective_dimension(s, cap);
    } catch (const std::exception& e) {
      row.pd_error = e.what();
    }
    try {
      row.id = injective_dimension(s, cap);
    } catch (const std::exception& e) {
      row.id_error = e.what();
    }
    r.dimensions.push_back(std::move(row));
  }

  SideStatus left = bounded_side(*alg, r.bounds.left, "left");
  SideStatus right = bounded_side(*alg, r.bounds.right, "right");
  const char* pi_rule_l = "locally left bounded => almost split sequences on the left";
  const char* pi_rule_r = "locally right bounded => almost split sequences on the right";
  for (const char* cat : {"gmod+p", "gmod-i"}) {
    r.verdicts.push_back({cat, "left", left.verdict, pi_rule_l, left.because});
    r.verdicts.push_back({cat, "right", right.verdict, pi_rule_r, right.because});
  }
  r.verdicts.push_back({"gmod^b", "left", left.verdict, pi_rule_l, left.because});
  r.verdicts.push_back({"gmod^b", "right", right.verdict, pi_rule_r, right.because});

  Verdict lb;
  std::string lb_because;
  if (left.verdict == Verdict::Yes && right.verdict == Verdict::Yes) {
    lb = Verdict::Yes;
    lb_because = "locally bounded";
  } else if (left.verdict == Verdict::NotDetermined || right.verdict == Verdict::NotDetermined) {
    lb = Verdict::NotDetermined;
    lb_because = left.verdict == Verdict::NotDetermined ? left.because : right.because;
  } else {
    lb = Verdict::UnknownAtCap;
    lb_because = left.verdict != Verdict::Yes ? left.because : right.because;
  }
  r.verdicts.push_back({"gmod^b", "both", lb, "locally bounded => almost split sequences", lb_because});

  for (int proj = 1; proj >= 0; --proj) {
    bool finite = false;
    std::string table = dimension_summary(r.dimensions, proj, *alg, &finite);
    CriterionVerdict v{"D^b(gmod^b)", proj ? "right" : "left", Verdict::UnknownAtCap,
                       proj ? "locally bounded: almost split triangles on the right <=> every simple has finite graded "
                              "projective dimension"
                            : "locally bounded: almost split triangles on the left <=> every simple has finite graded "
                              "injective dimension",
                       table};
    if (lb != Verdict::Yes) {
      v.verdict = lb;
      v.because = "hypothesis: " + lb_because + "; " + table;
    } else if (finite) {
      v.verdict = Verdict::Yes;
    }
    r.verdicts.push_back(std::move(v));
  }

  r.special_multiserial = is_special_multiserial(*alg);
  r.left_noetherian = noetherian_side(left.verdict, r.special_multiserial, claim.left, "left");
  r.right_noetherian = noetherian_side(right.verdict, r.special_multiserial, claim.right, "right");
  auto noeth_because = [](const NoetherianStatus& n, const char* side) {
    return std::string("locally ") + side + " noetherian: " + n.because;
  };
  r.verdicts.push_back({"gmod^{+,b}", "abelian", r.left_noetherian.verdict,
                        "abelian <=> locally left noetherian", noeth_because(r.left_noetherian, "left")});
  r.verdicts.push_back({"gmod^{-,b}", "abelian", r.right_noetherian.verdict,
                        "abelian <=> locally right noetherian", noeth_because(r.right_noetherian, "right")});
  const bool both_noeth = r.left_noetherian.verdict == Verdict::Yes && r.right_noetherian.verdict == Verdict::Yes;
  for (int proj = 1; proj >= 0; --proj) {
    bool finite = false;
    std::string table = dimension_summary(r.dimensions, proj, *alg, &finite);
    CriterionVerdict v{"D^b(gmod) at simples", proj ? "right" : "left", Verdict::UnknownAtCap,
                       proj ? "locally noetherian: an indecomposable of D^b(gmod^{+,b}) ends an almost split triangle "
                              "<=> finite graded projective resolution"
                            : "locally noetherian: an indecomposable of D^b(gmod^{-,b}) starts an almost split "
                              "triangle <=> finite graded injective coresolution",
                       table};
    if (!both_noeth) {
      v.verdict = Verdict::NotDetermined;
      v.because = "hypothesis: " +
                  (r.left_noetherian.verdict != Verdict::Yes ? noeth_because(r.left_noetherian, "left")
                                                             : noeth_because(r.right_noetherian, "right"));
    } else if (finite) {
      v.verdict = Verdict::Yes;
    }
    if (r.left_noetherian.asserted || r.right_noetherian.asserted) v.because += " (noetherianity asserted)";
    r.verdicts.push_back(std::move(v));
  }

  bool forward_ray = false, backward_ray = false;
  for (const Frontier& f : alg->quiver().frontier())
    if (f.kind == Frontier::Kind::Ray) (f.side == Frontier::Side::Out ? forward_ray : backward_ray) = true;
  auto hered = [&](bool infinite, bool via_ray, const std::string& what) -> std::pair<Verdict, std::string> {
    if (!r.path_algebra) return {Verdict::NotApplicable, "relations present"};
    if (!r.analysis.acyclic) {
      std::string cyc;
      for (int v : r.analysis.cycle) cyc += (cyc.empty() ? "" : "->") + labels[v];
      return {Verdict::No, "oriented cycle " + cyc + " gives an infinite path" + what};
    }
    if (infinite || via_ray) return {Verdict::No, "a ray frontier declares an infinite path" + what};
    return {Verdict::Yes, "no infinite path" + what};
  };
  auto [fwd, fwd_b] = hered(r.analysis.infinite_forward_path, forward_ray, " with a starting point");
  auto [bwd, bwd_b] = hered(r.analysis.infinite_backward_path, backward_ray, " with an end point");
  auto [both, both_b] = hered(r.analysis.infinite_forward_path, forward_ray || backward_ray, "");
  r.verdicts.push_back({"gmod+p kQ", "left", fwd, "R = 0: left <=> no infinite path with a starting point", fwd_b});
  r.verdicts.push_back({"gmod-i kQ", "right", bwd, "R = 0: right <=> no infinite path with an end point", bwd_b});
  r.verdicts.push_back({"gmod+p kQ, gmod-i kQ", "both", both, "R = 0: both <=> no infinite path", both_b});
  for (const char* cat : {"D^b(gmod+p kQ)", "D^b(gmod-i kQ)"}) {
    r.verdicts.push_back({cat, "left", fwd, "R = 0: triangles on the left <=> no infinite path with a starting point",
                          fwd_b});
    r.verdicts.push_back({cat, "right", bwd, "R = 0: triangles on the right <=> no infinite path with an end point",
                          bwd_b});
  }

  for (const auto* side : {&r.bounds.left, &r.bounds.right})
    for (const auto& v : *side)
      if (v.frontier_assumed) {
        r.caveats.push_back(std::string(side == &r.bounds.left ? "Λe_" : "e_") + labels[v.vertex] +
                            (side == &r.bounds.left ? "" : "Λ") +
                            " touches a bounded frontier: its continuation is trusted to be bounded");
      } else if (!v.finite && !v.frontier_ray) {
        r.caveats.push_back("degree cap " + std::to_string(cap) + " hit at vertex " + labels[v.vertex] + " (" +
                            (side == &r.bounds.left ? "left" : "right") + ")");
      }
  for (const auto& row : r.dimensions)
    for (int proj = 1; proj >= 0; --proj) {
      const GradedDimension& d = proj ? row.pd : row.id;
      const std::string& err = proj ? row.pd_error : row.id_error;
      if (d.value && err.empty()) continue;
      r.caveats.push_back(std::string(proj ? "pd S_" : "id S_") + labels[row.vertex] + " unknown at cap " +
                          std::to_string(cap) + ": " + (err.empty() ? d.reason : err));
    }
  for (const auto* n : {&r.left_noetherian, &r.right_noetherian})
    if (n->asserted)
      r.caveats.push_back(std::string("locally ") + (n == &r.left_noetherian ? "left" : "right") +
                          " noetherian taken from the user flag, not proved");
  if (r.path_algebra) r.caveats.push_back(r.analysis.caveat);
  return r;
}

nlohmann::json report_to_json(const GradedAlgebra& alg, const ExistenceReport& r) {
  using nlohmann::json;
  const auto& labels = alg.quiver().vertices();
  auto bounds = [&](const std::vector<VertexBound>& side) {
    json out = json::object();
    for (const auto& v : side) {
      json e = {{"profile", v.profile}, {"frontier_ray", v.frontier_ray}, {"frontier_assumed", v.frontier_assumed}};
      e["total_dim"] = v.finite ? json(v.total_dim) : json("unbounded-at-cap");
      out[labels[v.vertex]] = e;
    }
    return out;
  };
  json dims = json::object();
  for (const auto& row : r.dimensions) {
    auto one = [](const GradedDimension& d, const std::string& err) {
      json e = {{"value", err.empty() ? d.label() : "unknown-at-cap"}};
      if (!d.value || !err.empty()) e["reason"] = err.empty() ? d.reason : err;
      return e;
    };
    dims[labels[row.vertex]] = {{"pd", one(row.pd, row.pd_error)}, {"id", one(row.id, row.id_error)}};
  }
  json verdicts = json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back({{"category", v.category},
                        {"side", v.side},
                        {"verdict", verdict_label(v.verdict)},
                        {"rule", v.rule},
                        {"because", v.because}});
  json cycle = json::array();
  for (int v : r.analysis.cycle) cycle.push_back(labels[v]);
  return {{"cap", r.cap},
          {"boundedness", {{"left", bounds(r.bounds.left)}, {"right", bounds(r.bounds.right)}}},
          {"quiver",
           {{"acyclic", r.analysis.acyclic},
            {"infinite_forward_path", r.analysis.infinite_forward_path},
            {"infinite_backward_path", r.analysis.infinite_backward_path},
            {"strongly_locally_finite", r.analysis.strongly_locally_finite},
            {"cycle", cycle}}},
          {"path_algebra", r.path_algebra},
          {"special_multiserial", r.special_multiserial},
          {"noetherian",
           {{"left", {{"verdict", verdict_label(r.left_noetherian.verdict)},
                      {"asserted", r.left_noetherian.asserted},
                      {"because", r.left_noetherian.because}}},
            {"right", {{"verdict", verdict_label(r.right_noetherian.verdict)},
                       {"asserted", r.right_noetherian.asserted},
                       {"because", r.right_noetherian.because}}}}},
          {"dimensions", dims},
          {"verdicts", verdicts},
          {"caveats", r.caveats}};
}

std::string report_to_table(const GradedAlgebra& alg, const ExistenceReport& r) {
  const auto& labels = alg.quiver().vertices();
  std::ostringstream out;
  out << "cap " << r.cap << "\n\nvertex  dim Λe_x          dim e_xΛ          pd S_x          id S_x\n";
  auto bound = [](const VertexBound& v) {
    if (v.frontier_ray) return std::string("ray");
    return v.finite ? std::to_string(v.total_dim) + (v.frontier_assumed ? " (assumed)" : "") : "unbounded-at-cap";
  };
  auto pad = [](std::string s, std::size_t n) { return s.size() >= n ? s + " " : s + std::string(n - s.size(), ' '); };
  for (std::size_t k = 0; k < r.dimensions.size(); ++k) {
    const auto& row = r.dimensions[k];
    out << pad(labels[row.vertex], 8) << pad(bound(r.bounds.left[k]), 18) << pad(bound(r.bounds.right[k]), 18)
        << pad(row.pd_error.empty() ? row.pd.label() : "unknown-at-cap", 16)
        << (row.id_error.empty() ? row.id.label() : "unknown-at-cap") << "\n";
  }
  out << "\n";
  std::size_t w = 0;
  for (const auto& v : r.verdicts) w = std::max(w, v.category.size() + v.side.size() + 3);
  for (const auto& v : r.verdicts)
    out << pad(v.category + " (" + v.side + ")", w + 1) << pad(verdict_label(v.verdict), 16) << v.because << "\n";
  if (!r.caveats.empty()) {
    out << "\ncaveats:\n";
    for (const auto& c : r.caveats) out << "  - " << c << "\n";
  }
  return out.str();
}

}  // namespace gradrep
