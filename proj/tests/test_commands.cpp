#include <doctest.h>

#include <atomic>

#include "gradrep/commands.hpp"
#include "gradrep/error.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("commands on the fixtures") {
  Problem fb = fixture("fix_b.json");
  json ars = run_command(fb, "ars", {{"module", "S1"}, {"direction", "ending"}});
  CHECK(ars["certificate"]["result"] == "pass");
  json hom = run_command(fb, "hom", {{"source", "P1"}, {"target", "S1"}});
  CHECK(hom["dim"] == 1);
  CHECK_THROWS_AS(run_command(fb, "nosuch", json::object()), InputError);
  CHECK_THROWS_AS(run_command(fb, "tau", {{"module", "nosuch"}}), InputError);
  CHECK_THROWS_AS(run_command(fb, "criteria", {{"noetherian", "sideways"}}), InputError);
  CHECK_THROWS_AS(run_command(fb, "dims", {{"module", "P1"}, {"window", "2"}}), InputError);

  Problem fa = fixture("fix_a.json");
  CHECK_THROWS_AS(run_command(fa, "tau", {{"module", "P1"}}), PreconditionError);
  json dims = run_command(fa, "dims", {{"module", "P1"}, {"window", "0:2"}});
  CHECK(dims.dump().find("(2,1)") != std::string::npos);

  for (const auto& name : command_names()) CHECK_FALSE(name.empty());
}

TEST_CASE("concurrent task dispatch matches the sequential run") {
  Problem p = fixture("fix_c.json");
  const auto base = p.tasks;
  for (int copy = 0; copy < 6; ++copy)
    for (const auto& t : base) p.tasks.push_back({t.name + " #" + std::to_string(copy), t.command, t.args});
  for (const char* mod : {"S1", "P1"}) {
    p.tasks.push_back({std::string("cover ") + mod, "cover", {{"module", mod}}});
    p.tasks.push_back({std::string("copresent ") + mod, "copresent", {{"module", mod}}});
  }
  json seq = run_tasks(p, 1);
  std::atomic<int> seen{0};
  json par = run_tasks(p, 8, [&](const Task&, const json&) { ++seen; });
  CHECK(seen == static_cast<int>(p.tasks.size()));
  CHECK(canonical_text(seq) == canonical_text(par));

  p.tasks.push_back({"broken", "tau", {{"module", "nosuch"}}});
  CHECK_THROWS_AS(run_tasks(p, 4), InputError);
}
