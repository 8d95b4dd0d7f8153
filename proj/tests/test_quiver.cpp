#include <doctest.h>

#include "gradrep/error.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Quiver a2() { return Quiver({"1", "2"}, {{"alpha", 0, 1}}); }

std::vector<std::vector<long>> adjacency_power(const Quiver& q, int n) {
  const int v = q.num_vertices();
  std::vector<std::vector<long>> adj(v, std::vector<long>(v, 0)), out(v, std::vector<long>(v, 0));
  for (const auto& a : q.arrows()) ++adj[a.from][a.to];
  for (int i = 0; i < v; ++i) out[i][i] = 1;
  for (int k = 0; k < n; ++k) {
    std::vector<std::vector<long>> next(v, std::vector<long>(v, 0));
    for (int i = 0; i < v; ++i)
      for (int j = 0; j < v; ++j)
        for (int l = 0; l < v; ++l) next[i][j] += out[i][l] * adj[l][j];
    out = next;
  }
  return out;
}

}  // namespace

TEST_CASE("opposite reverses arrows and is an involution on data") {
  Quiver q = a2();
  Quiver o = q.opposite();
  CHECK(o.arrow(0).from == 1);
  CHECK(o.arrow(0).to == 0);
  Quiver oo = o.opposite();
  CHECK(oo.arrow(0).from == q.arrow(0).from);
  CHECK(oo.arrow(0).name == q.arrow(0).name);

  Quiver empty({"x"}, {});
  CHECK(empty.opposite().num_arrows() == 0);

  Quiver fa = fixture("fix_a.json").algebra->quiver().opposite();
  CHECK(fa.arrow(fa.arrow_index("alpha°")).from == fa.arrow(fa.arrow_index("alpha°")).to);
  CHECK(fa.vertices()[fa.arrow(fa.arrow_index("beta°")).from] == "2");
  CHECK(fa.vertices()[fa.arrow(fa.arrow_index("beta°")).to] == "1");
}

TEST_CASE("path enumeration") {
  const Quiver fa = fixture("fix_a.json").algebra->quiver();
  auto p = fa.paths(2, 0, 1);
  REQUIRE(p.size() == 1);
  CHECK(fa.path_name(p[0]) == "beta*alpha");
  CHECK(fa.paths(3, 1, 0).empty());
  CHECK(a2().paths(1, 0, 1).size() == 1);
}

TEST_CASE("path counts match adjacency matrix powers") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    AlgebraPtr alg = random_monomial_algebra(Field::prime(2), rng);
    const Quiver& q = alg->quiver();
    for (int n = 0; n <= 3; ++n) {
      auto pw = adjacency_power(q, n);
      for (int x = 0; x < q.num_vertices(); ++x)
        for (int y = 0; y < q.num_vertices(); ++y) {
          auto ps = q.paths(n, x, y);
          CHECK(static_cast<long>(ps.size()) == pw[x][y]);
          for (std::size_t k = 1; k < ps.size(); ++k) CHECK(q.path_name(ps[k - 1]) < q.path_name(ps[k]));
        }
    }
  }
}

TEST_CASE("cycle analysis") {
  QuiverAnalysis a = a2().analyze();
  CHECK(a.acyclic);
  CHECK_FALSE(a.infinite_forward_path);
  CHECK(a.strongly_locally_finite);

  QuiverAnalysis fa = fixture("fix_a.json").algebra->quiver().analyze();
  CHECK_FALSE(fa.acyclic);
  CHECK(fa.infinite_forward_path);
  CHECK(fa.infinite_backward_path);
  CHECK(fa.cycle.size() == 1);
  CHECK_FALSE(fa.caveat.empty());

  QuiverAnalysis fd = fixture("fix_d.json").algebra->quiver().analyze();
  CHECK(fd.acyclic);
  CHECK_FALSE(fd.infinite_forward_path);
  CHECK_FALSE(fd.infinite_backward_path);
}

TEST_CASE("analysis of the opposite swaps the frontier flags") {
  const Quiver fc = fixture("fix_c.json").algebra->quiver();
  QuiverAnalysis a = fc.analyze(), b = fc.opposite().analyze();
  CHECK(a.frontier_forward == b.frontier_backward);
  CHECK(a.frontier_backward == b.frontier_forward);
  CHECK(a.infinite_forward_path == b.infinite_backward_path);
}

TEST_CASE("invalid quivers are rejected") {
  CHECK_THROWS_AS(Quiver({"1", "1"}, {}), InputError);
  CHECK_THROWS_AS(Quiver({"1"}, {{"a", 0, 3}}), InputError);
  CHECK_THROWS_AS(Quiver({"1", "2"}, {{"a", 0, 1}, {"a", 1, 0}}), InputError);
  CHECK_THROWS_AS(a2().path_from_names({"alpha", "alpha"}), InputError);
  CHECK_THROWS_AS(a2().vertex_index("9"), InputError);
}
