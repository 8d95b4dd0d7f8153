#include <doctest.h>

#include "gradrep/error.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// Counts degree-0 morphisms M -> N over F_p by enumerating every family of
// piece matrices and checking naturality directly. Returns log_p of the count.
int brute_force_hom(const ModPtr& m, const ModPtr& n) {
  const AlgebraPtr& alg = m->algebra();
  const int p = static_cast<int>(alg->field().modulus);
  const Quiver& q = alg->quiver();
  auto dm = [&](int i, int x) { return i < m->lo() || i > m->hi() ? 0 : m->dim(i, x); };
  auto dn = [&](int i, int x) { return i < n->lo() || i > n->hi() ? 0 : n->dim(i, x); };
  auto entry = [&](const ModPtr& mod, int a, int i, int r, int c) {
    return static_cast<int>(mod->map(a, i)(r, c).residue());
  };
  struct Slot {
    int i, x, rows, cols, offset;
  };
  std::vector<Slot> slots;
  int total = 0;
  for (int i = m->lo(); i <= m->hi(); ++i)
    for (int x = 0; x < alg->num_vertices(); ++x)
      if (dm(i, x) && dn(i, x)) {
        slots.push_back({i, x, dn(i, x), dm(i, x), total});
        total += dn(i, x) * dm(i, x);
      }
  long combos = 1;
  for (int k = 0; k < total; ++k) combos *= p;
  REQUIRE(combos <= 1 << 20);
  auto get = [&](const std::vector<int>& v, int i, int x, int r, int c) {
    for (const auto& s : slots)
      if (s.i == i && s.x == x) return v[s.offset + r * s.cols + c];
    return 0;
  };
  long natural = 0;
  std::vector<int> v(total, 0);
  for (long code = 0; code < combos; ++code) {
    long c = code;
    for (int k = 0; k < total; ++k, c /= p) v[k] = static_cast<int>(c % p);
    bool ok = true;
    for (int i = m->lo(); i <= m->hi() && ok; ++i)
      for (int a = 0; a < q.num_arrows() && ok; ++a) {
        const int x = q.arrow(a).from, y = q.arrow(a).to;
        for (int r = 0; r < dn(i + 1, y) && ok; ++r)
          for (int col = 0; col < dm(i, x) && ok; ++col) {
            long lhs = 0, rhs = 0;
            for (int k = 0; k < dm(i + 1, y); ++k) lhs += get(v, i + 1, y, r, k) * entry(m, a, i, k, col);
            for (int k = 0; k < dn(i, x); ++k) rhs += entry(n, a, i, r, k) * get(v, i, x, k, col);
            ok = (lhs - rhs) % p == 0;
          }
      }
    natural += ok;
  }
  int d = 0;
  while (natural > 1) {
    natural /= p;
    ++d;
  }
  return d;
}

ModPtr conjugated(const ModPtr& m, std::mt19937_64& rng) {
  const AlgebraPtr& alg = m->algebra();
  std::vector<std::vector<Matrix>> g;
  for (int i = m->lo(); i <= m->hi(); ++i) {
    g.emplace_back();
    for (int x = 0; x < alg->num_vertices(); ++x) {
      const int d = m->dim(i, x);
      for (;;) {
        Matrix a(alg->field(), d, d);
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c) a(r, c) = random_scalar(alg->field(), rng);
        if (inverse(a)) {
          g.back().push_back(a);
          break;
        }
      }
    }
  }
  auto out = std::make_shared<GradedModule>(alg, m->lo(), m->hi());
  for (int i = m->lo(); i <= m->hi(); ++i)
    for (int x = 0; x < alg->num_vertices(); ++x) out->set_dim(i, x, m->dim(i, x));
  for (int i = m->lo(); i < m->hi(); ++i)
    for (int a = 0; a < alg->quiver().num_arrows(); ++a) {
      const Arrow& ar = alg->quiver().arrow(a);
      const int k = i - m->lo();
      out->set_map(a, i, g[k + 1][ar.to] * m->map(a, i) * *inverse(g[k][ar.from]));
    }
  return out;
}

}  // namespace

TEST_CASE("hom dimensions of small examples") {
  AlgebraPtr fb = fixture("fix_b.json").algebra;
  CHECK(ghom(proj(fb, "1"), simple(fb, "1")).dim() == 1);
  CHECK(ghom(proj(fb, "2", -1), proj(fb, "1")).dim() == 1);
  CHECK(ghom(proj(fb, "2"), proj(fb, "1")).dim() == 0);
  CHECK(ghom(proj(fb, "1"), proj(fb, "2", -1)).dim() == 0);
  CHECK(ghom(simple(fb, "1"), inj(fb, "1")).dim() == 1);
  CHECK(ghom(simple(fb, "2", -1), inj(fb, "2", -1)).dim() == 1);
  CHECK(ghom(simple(fb, "1"), inj(fb, "2", -1)).dim() == 0);
  CHECK(ghom(proj(fb, "1"), inj(fb, "2", -1)).dim() == 1);
  HomSpace h = ghom(proj(fb, "1"), proj(fb, "1"));
  REQUIRE(h.dim() == 1);
  CHECK(is_isomorphism(h.basis[0]));
}

TEST_CASE("hom basis morphisms are natural and independent") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    AlgebraPtr alg = random_monomial_algebra(Field::prime(2), rng);
    ModPtr m = random_module(alg, rng, 4, 2);
    ModPtr n = random_module(alg, rng, 4, 2);
    HomSpace h = ghom(m, n);
    for (const auto& f : h.basis) CHECK(is_natural(f));
    CHECK(rank(h.flat_basis) == h.dim());
    CHECK(h.dim() == brute_force_hom(m, n));
    if (h.dim() > 0) {
      std::vector<Scalar> c(h.dim(), Scalar::zero(alg->field()));
      c.back() = Scalar::one(alg->field());
      auto back = h.coordinates(h.combine(c));
      REQUIRE(back);
      CHECK(*back == c);
    }
  }
}

TEST_CASE("hom refuses unbounded overlaps") {
  Problem p = fixture("fix_a.json");
  ModPtr p1 = p.module("P1");
  CHECK_THROWS_AS(ghom(p1, p1), WindowError);
  CHECK(ghom(p1, simple(p.algebra, "1")).dim() == 1);
}

TEST_CASE("Nakayama pairing through the injective") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    AlgebraPtr alg = random_monomial_algebra(Field::rationals(), rng);
    ModPtr m = random_module(alg, rng);
    for (int a = 0; a < alg->num_vertices(); ++a)
      for (int s = -2; s <= 0; ++s) {
        const int expect = (-s >= m->lo() && -s <= m->hi()) ? m->dim(-s, a) : 0;
        CHECK(ghom_to_injective(m, a, s).dim() == expect);
      }
  }
}

TEST_CASE("endomorphism algebra and indecomposability") {
  Problem k = fixture("kronecker.json");
  ModPtr r2 = k.module("R2");
  EndAlgebra e = end_algebra(r2);
  CHECK(e.dim() == 2);
  CHECK(e.radical_dim() == 1);
  IndecVerdict v = is_strongly_indecomposable(r2);
  CHECK(v.kind == IndecVerdict::Kind::Yes);
  CHECK(v.label() == "yes");

  AlgebraPtr fb = fixture("fix_b.json").algebra;
  ModPtr sum = direct_sum({simple(fb, "1"), simple(fb, "2", -1)});
  IndecVerdict d = is_strongly_indecomposable(sum);
  CHECK(d.kind == IndecVerdict::Kind::No);
  REQUIRE(d.idempotent);
  GradedMorphism idem = *d.idempotent;
  CHECK(compose(idem, idem).f == idem.f);
  CHECK_FALSE(idem.is_zero());
  CHECK_FALSE(is_isomorphism(idem));

  CHECK(is_strongly_indecomposable(proj(fb, "1")).kind == IndecVerdict::Kind::Yes);
}

TEST_CASE("radical needs a large enough characteristic") {
  AlgebraPtr f2 = algebra_from_json(
      json::parse(R"({"field":"Fp:2","quiver":{"vertices":["1"],"arrows":[]},"relations":[]})"));
  ModPtr m = direct_sum({simple(f2, "1"), simple(f2, "1")});
  CHECK_THROWS_AS(end_algebra(m), UnsupportedRadical);
}

TEST_CASE("find_isomorphism") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    AlgebraPtr alg = random_monomial_algebra(trial % 2 ? Field::prime(7) : Field::rationals(), rng);
    ModPtr m = random_module(alg, rng);
    ModPtr c = conjugated(m, rng);
    auto iso = find_isomorphism(m, c);
    REQUIRE(iso);
    CHECK(is_natural(*iso));
    CHECK(is_isomorphism(*iso));
  }
  AlgebraPtr fb = fixture("fix_b.json").algebra;
  CHECK_FALSE(find_isomorphism(proj(fb, "1"), direct_sum({simple(fb, "1"), simple(fb, "2", -1)})));
}
