#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include <fstream>

#include "gradrep/commands.hpp"
#include "gradrep/error.hpp"
#include "support.hpp"

using namespace testing;

namespace {

using Dims = std::map<std::pair<int, int>, int>;

struct Check {
  bool ok = true;
  std::ostringstream note;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << what;
    ok = ok && cond;
  }
};

json golden(const std::string& name) {
  std::ifstream in(std::string(GRADREP_FIXTURES) + "/golden/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

bool iso(const ModPtr& a, const ModPtr& b) { return find_isomorphism(a, b).has_value(); }

// The fixture's algebra with the field replaced.
AlgebraPtr over(const std::string& name, const std::string& field) {
  json doc = fixture(name).source;
  doc["field"] = field;
  doc.erase("modules");
  doc.erase("tasks");
  return algebra_from_json(doc);
}

Dims alternating_sum(const AlgebraPtr& alg, const Resolution& r) {
  Dims total;
  for (std::size_t n = 0; n < r.terms.size(); ++n)
    for (const auto& s : r.terms[n])
      for (auto [k, v] : dims_of(*standard(alg, StandardKind::P, s.vertex, s.shift))) total[k] += n % 2 ? -v : v;
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return total;
}

std::vector<AlgebraPtr> ar_algebras() {
  std::vector<AlgebraPtr> out{fixture("fix_b.json").algebra, fixture("fix_c.json").algebra,
                              fixture("fix_d.json").algebra};
  std::mt19937_64 rng(1);
  for (int k = 0; k < 20; ++k) out.push_back(random_monomial_algebra(Field::rationals(), rng));
  return out;
}

void fix_d_dimensions(Check& c) {
  AlgebraPtr fd = fixture("fix_d.json").algebra;
  for (int n = 0; n <= 5; ++n) {
    ModPtr s = simple(fd, std::to_string(n));
    GradedDimension pd = projective_dimension(s, 10);
    c.expect(pd.value && *pd.value == n, "pd S_" + std::to_string(n) + " = " + pd.label());
    for (int cap = 1; cap <= 10; ++cap) {
      GradedDimension id = injective_dimension(s, cap);
      c.expect(!id.value && id.label() == "unknown-at-cap" && id.reason.find("frontier") != std::string::npos,
               "id S_" + std::to_string(n) + " at cap " + std::to_string(cap) + ": " + id.label() + " (" +
                   id.reason + ")");
    }
  }
}

void fix_a_socle(Check& c) {
  Problem p = fixture("fix_a.json");
  ModPtr p1 = p.module("P1");
  const int v1 = vtx(p.algebra, "1"), v2 = vtx(p.algebra, "2");
  c.expect(p1->lo() == 0 && p1->hi() == 6, "P_1 window is not [0,6]");
  SubModule soc = socle(p1);
  c.expect(dims_of(*soc.module) == Dims{{{1, v2}, 1}}, "soc P_1 is not one-dimensional at (1,2)");
  Dims expect = dims_of(*p1);
  expect.erase({0, v1});
  c.expect(dims_of(*radical(p1).module) == expect, "rad P_1 dims differ from P_1 minus its top");
}

void fix_b_sequences(Check& c) {
  AlgebraPtr fb = fixture("fix_b.json").algebra;
  ModPtr s1 = simple(fb, "1"), s2 = simple(fb, "2", -1), p1 = proj(fb, "1");
  AlmostSplitSequence e = almost_split_sequence(s1, Direction::Ending);
  c.expect(iso(e.left, s2) && iso(e.middle, p1) && iso(e.right, s1), "ending sequence has the wrong terms");
  ArsVerdict ve = verify_almost_split(e);
  c.expect(ve.pass, "ending sequence: " + ve.label());
  AlmostSplitSequence st = almost_split_sequence(s2, Direction::Starting);
  c.expect(iso(st.left, s2) && iso(st.middle, p1) && iso(st.right, s1), "starting sequence has the wrong terms");
  ArsVerdict vs = verify_almost_split(st);
  c.expect(vs.pass, "starting sequence: " + vs.label());

  AlgebraPtr f2 = over("fix_b.json", "Fp:2");
  c.expect(brute_force_ext1(simple(f2, "1"), simple(f2, "2", -1)) == 1, "oracle: Ext^1(S_1, S_2<-1>) is not 1-dim");
  Problem p = fixture("fix_b.json");
  json out = run_command(p, "ars", {{"module", "S1"}, {"direction", "ending"}});
  c.expect(canonical_text(out) == canonical_text(golden("fix_b_ars.json")), "ars output differs from the golden file");
}

void ar_formulas(Check& c) {
  int pairs = 0;
  for (const AlgebraPtr& alg : ar_algebras())
    for (int a = 0; a < alg->num_vertices(); ++a)
      for (int b = 0; b < alg->num_vertices(); ++b)
        for (int s = -3; s <= 3; ++s) {
          ArFormulaReport r = ar_formula_check(standard(alg, StandardKind::S, a, 0),
                                               standard(alg, StandardKind::S, b, s));
          ++pairs;
          std::string where = "M = S_" + alg->quiver().vertices()[a] + ", X = S_" + alg->quiver().vertices()[b] +
                              "<" + std::to_string(s) + ">";
          c.expect(r.first_holds(), "first formula fails at " + where);
          c.expect(r.second_holds(), "second formula fails at " + where);
        }
  c.note << pairs << " pairs";
}

void round_trips(Check& c) {
  std::mt19937_64 rng(5);
  int sampled = 0, indec = 0, maps = 0;
  for (int k = 0; (sampled < 50 || indec < 20) && k < 2000; ++k) {
    AlgebraPtr alg = random_monomial_algebra(Field::rationals(), rng);
    ModPtr m = random_module(alg, rng);
    if (sampled < 50) {
      ++sampled;
      c.expect(alg->opposite()->opposite().get() == alg.get(), "opposite of the opposite is a new object");
      c.expect(iso(dual(dual(m)), m), "DD M is not isomorphic to M");
      Presentation p = minimal_presentation(m);
      SummandMap parsed = summand_map_from_json(alg, summand_map_to_json(nakayama(p.d1)));
      c.expect(nakayama_inverse(parsed) == p.d1, "nu^- nu differs from the identity on a serialized map");
      ++maps;
    }

    if (is_strongly_indecomposable(m).kind != IndecVerdict::Kind::Yes) continue;
    if (!is_projective(m)) {
      ++indec;
      c.expect(iso(transpose(transpose(m).module).module, m), "Tr Tr M is not isomorphic to M");
      ModPtr t = tau(m).module;
      c.expect(iso(tau_inverse(t, false).module, m), "tau^- tau M is not isomorphic to M");
    }
    if (!is_injective(m)) c.expect(iso(tau(tau_inverse(m).module, false).module, m), "tau tau^- N is not isomorphic to N");
  }
  c.expect(indec >= 20, "too few indecomposable non-projective samples");
  c.note << sampled << " modules, " << indec << " indecomposable non-projective, " << maps << " maps";
}

void nakayama_pairing(Check& c) {
  std::mt19937_64 rng(9);
  int checks = 0;
  for (const char* name : {"fix_a.json", "fix_b.json", "fix_c.json", "fix_d.json"}) {
    AlgebraPtr alg = fixture(name).algebra;
    for (int k = 0; k < 20; ++k) {
      ModPtr m = random_module(alg, rng);
      for (int a = 0; a < alg->num_vertices(); ++a)
        for (int s = -2; s <= 2; ++s) {
          const int expect = (-s >= m->lo() && -s <= m->hi()) ? m->dim(-s, a) : 0;
          const int lhs = ghom_to_injective(m, a, s).dim();
          ModPtr pa = standard(alg, StandardKind::P, a, s, std::make_pair(-s, std::max(-s, m->hi() + 1)));
          const int rhs = ghom(pa, m).dim();
          ++checks;
          c.expect(lhs == expect && rhs == expect, std::string(name) + ": Hom(M, I)=" + std::to_string(lhs) +
                                                       ", Hom(P, M)=" + std::to_string(rhs) +
                                                       ", dim M=" + std::to_string(expect));
        }
    }
  }
  c.note << checks << " checks";
}

void ext_oracle(Check& c) {
  std::vector<AlgebraPtr> algebras;
  for (const char* field : {"Fp:2", "Fp:3"})
    for (const char* name : {"fix_a.json", "fix_b.json", "fix_c.json", "kronecker.json"})
      algebras.push_back(over(name, field));
  std::mt19937_64 rng(13);
  for (int k = 0; k < 40; ++k)
    algebras.push_back(random_monomial_algebra(Field::prime(k % 2 ? 3 : 2), rng));
  int compared = 0, skipped = 0;
  for (const AlgebraPtr& alg : algebras)
    for (int k = 0; k < 8; ++k) {
      ModPtr m = random_module(alg, rng, 3, 2);
      ModPtr n = random_module(alg, rng, 6 - m->total_dim(), 3);
      int expect;
      try {
        expect = brute_force_ext1(m, n);
      } catch (const std::length_error&) {
        ++skipped;
        continue;
      }
      ++compared;
      const int got = ext1(m, n).dim();
      c.expect(got == expect, "Ext dim " + std::to_string(got) + " vs oracle " + std::to_string(expect));
    }
  c.expect(compared >= 300, "too few pairs compared");
  c.note << compared << " pairs, " << skipped << " too large for the oracle";
}

void minimality(Check& c) {
  std::mt19937_64 rng(17);
  std::vector<ModPtr> mods;
  for (const char* name : {"fix_b.json", "fix_c.json", "fix_d.json", "kronecker.json"}) {
    Problem p = fixture(name);
    for (const auto& [_, m] : p.modules)
      if (m->exact()) mods.push_back(m);
    for (int k = 0; k < 10; ++k) mods.push_back(random_module(p.algebra, rng));
  }
  for (int k = 0; k < 30; ++k) mods.push_back(random_module(random_monomial_algebra(Field::rationals(), rng), rng));
  for (const ModPtr& m : mods) {
    Presentation p = minimal_presentation(m);
    c.expect(p.d1.is_radical(), "d1 is not radical");
    c.expect(kernel_in_radical(p), "Ker(cover) is not inside rad P0");
    Copresentation cp = minimal_copresentation(m);
    c.expect(socle_in_image(cp), "soc I0 is not inside Im(envelope)");
  }
  c.note << mods.size() << " modules";
}

void second_syzygy(Check& c) {
  AlgebraPtr fc = fixture("fix_c.json").algebra;
  ModPtr s1 = simple(fc, "1");
  Resolution r = projective_resolution(s1, 10);
  c.expect(r.terms.size() == 3, "resolution has " + std::to_string(r.terms.size()) + " terms");
  if (r.terms.size() == 3)
    c.expect(r.terms[2] == std::vector<Summand>{{vtx(fc, "4"), -2}}, "Omega^2 S_1 is not P_4<-2>");
  c.expect(alternating_sum(fc, r) == dims_of(*s1), "Euler characteristic differs from S_1");
  Cover c0 = projective_cover(s1);
  SubModule o1 = syzygy(c0);
  SubModule o2 = syzygy(projective_cover(o1.module));
  c.expect(iso(o2.module, proj(fc, "4", -2)), "Omega^2 S_1 is not isomorphic to P_4<-2>");
  c.expect(dims_of(*o2.module) != dims_of(*direct_sum({proj(fc, "4", -2), proj(fc, "4", -2)})),
           "Omega^2 S_1 has the dimensions of P_4 + P_4");

  json g = golden("fix_c_pd.json");
  c.expect(g["simples"]["1"]["pd"]["terms"][2] == json::parse(R"([["4", -2]])"), "golden file disagrees");
  Problem p = fixture("fix_c.json");
  json out = run_command(p, "pd", {{"simple", "1"}, {"kind", "proj"}});
  c.expect(canonical_text(out) == canonical_text(g), "pd output differs from the golden file");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    double limit;  // seconds, 0 = none
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "fix_d: pd S_n = n, id unknown-at-cap (frontier) for caps 1..10", 5, fix_d_dimensions},
      {2, "fix_a: soc P_1 at (1,2), rad P_1 = P_1 minus top", 1, fix_a_socle},
      {3, "fix_b: almost split sequence 0 -> S_2<-1> -> P_1 -> S_1 -> 0 from both ends", 1, fix_b_sequences},
      {4, "AR formulas on fix_b, fix_c, fix_d and 20 random monomial algebras", 60, ar_formulas},
      {5, "round trips: DD, Tr Tr, tau^- tau, tau tau^-, nu^- nu", 0, round_trips},
      {6, "Nakayama pairing Hom(M, I_a<s>) = Hom(P_a<s>, M) = M_{-s}(a)", 0, nakayama_pairing},
      {7, "Ext^1 against the brute-force oracle over F_2 and F_3", 120, ext_oracle},
      {8, "minimality certificates of presentations and copresentations", 0, minimality},
      {9, "fix_c: Omega^2 S_1 = P_4<-2>", 0, second_syzygy},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.limit > 0 && secs >= cr.limit) {
      c.ok = false;
      c.note << " (over the " << cr.limit << " s limit)";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.what << " [" << timing << "]";
    if (!c.note.str().empty()) std::cout << " -- " << c.note.str();
    std::cout << "\n";
    failed += !c.ok;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
  return failed ? 1 : 0;
}
