#include <doctest.h>

#include "gradrep/criteria.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Verdict verdict(const ExistenceReport& r, const std::string& category, const std::string& side) {
  for (const auto& v : r.verdicts)
    if (v.category == category && v.side == side) return v.verdict;
  FAIL("missing verdict " << category << " " << side);
  return Verdict::NotApplicable;
}

}  // namespace

TEST_CASE("fix_b: every criterion holds") {
  AlgebraPtr fb = fixture("fix_b.json").algebra;
  ExistenceReport r = existence_report(fb, 10);
  for (const auto& v : r.verdicts) {
    CAPTURE(v.category);
    CHECK(v.verdict == Verdict::Yes);
  }
  CHECK(r.path_algebra);
}

TEST_CASE("fix_c: right yes, left not determined") {
  AlgebraPtr fc = fixture("fix_c.json").algebra;
  ExistenceReport r = existence_report(fc, 10);
  CHECK(verdict(r, "gmod+p", "right") == Verdict::Yes);
  CHECK(verdict(r, "gmod+p", "left") == Verdict::NotDetermined);
  CHECK(verdict(r, "gmod^b", "both") == Verdict::NotDetermined);
  CHECK(verdict(r, "gmod+p kQ", "left") == Verdict::NotApplicable);
  CHECK(verdict_label(verdict(r, "gmod-i", "left")) == "not-determined");
}

TEST_CASE("fix_d: triangles on the right, left unknown at the cap") {
  AlgebraPtr fd = fixture("fix_d.json").algebra;
  ExistenceReport r = existence_report(fd, 10);
  CHECK(verdict(r, "gmod^b", "both") == Verdict::Yes);
  CHECK(verdict(r, "D^b(gmod^b)", "right") == Verdict::Yes);
  CHECK(verdict(r, "D^b(gmod^b)", "left") == Verdict::UnknownAtCap);
  bool frontier_caveat = false;
  for (const auto& c : r.caveats) frontier_caveat |= c.find("bounded frontier") != std::string::npos;
  CHECK(frontier_caveat);
  for (const auto& row : r.dimensions) {
    REQUIRE(row.pd.value);
    CHECK(*row.pd.value == std::stoi(fd->quiver().vertices()[row.vertex]));
    CHECK_FALSE(row.id.value);
  }
}

TEST_CASE("fix_a: the loop keeps Λe_1 unbounded at the cap") {
  AlgebraPtr fa = fixture("fix_a.json").algebra;
  ExistenceReport r = existence_report(fa, 6);
  CHECK(verdict(r, "gmod+p", "left") == Verdict::UnknownAtCap);
  CHECK(verdict(r, "gmod+p kQ", "left") == Verdict::NotApplicable);
}

TEST_CASE("path algebra of a cycle") {
  AlgebraPtr cyc = algebra_from_json(json::parse(R"({"field":"Q","quiver":{"vertices":["1","2"],
      "arrows":[{"name":"a","from":"1","to":"2"},{"name":"b","from":"2","to":"1"}]},"relations":[]})"));
  ExistenceReport r = existence_report(cyc, 5);
  CHECK(verdict(r, "gmod+p kQ", "left") == Verdict::No);
  CHECK(verdict(r, "gmod-i kQ", "right") == Verdict::No);
  CHECK(verdict(r, "gmod^b", "left") == Verdict::UnknownAtCap);
  json j = report_to_json(*cyc, r);
  CHECK(j["quiver"]["acyclic"] == false);
  CHECK(j["quiver"]["cycle"].size() == 2);
  CHECK(report_to_table(*cyc, r).find("caveats:") != std::string::npos);
}

TEST_CASE("local noetherianity: detection and user assertion") {
  AlgebraPtr fa = fixture("fix_a.json").algebra;
  CHECK(is_special_multiserial(*fa));
  ExistenceReport a = existence_report(fa, 6);
  CHECK(a.left_noetherian.verdict == Verdict::Yes);
  CHECK_FALSE(a.left_noetherian.asserted);
  CHECK(verdict(a, "gmod^{+,b}", "abelian") == Verdict::Yes);

  AlgebraPtr fc = fixture("fix_c.json").algebra;
  CHECK_FALSE(is_special_multiserial(*fc));
  ExistenceReport plain = existence_report(fc, 10);
  CHECK(plain.left_noetherian.verdict == Verdict::NotDetermined);
  CHECK(plain.right_noetherian.verdict == Verdict::Yes);
  CHECK(verdict(plain, "D^b(gmod) at simples", "right") == Verdict::NotDetermined);

  ExistenceReport claimed = existence_report(fc, 10, {true, false});
  CHECK(claimed.left_noetherian.asserted);
  CHECK(verdict(claimed, "gmod^{+,b}", "abelian") == Verdict::Yes);
  CHECK(verdict(claimed, "D^b(gmod) at simples", "right") == Verdict::Yes);
  bool flagged = false;
  for (const auto& c : claimed.caveats) flagged |= c.find("user flag") != std::string::npos;
  CHECK(flagged);

  CHECK(is_special_multiserial(*fixture("kronecker.json").algebra));
  AlgebraPtr fork = algebra_from_json(json::parse(R"({"field":"Q","quiver":{"vertices":["1","2","3"],
      "arrows":[{"name":"a","from":"1","to":"2"},{"name":"b","from":"2","to":"3"},{"name":"c","from":"2","to":"3"}]},
      "relations":[]})"));
  CHECK_FALSE(is_special_multiserial(*fork));
}
