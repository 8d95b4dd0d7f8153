#include <doctest.h>

#include "gradrep/error.hpp"
#include "support.hpp"

using namespace testing;

namespace {

bool contains_monomial(const std::vector<int>& path, const std::vector<std::vector<int>>& monomials) {
  for (const auto& m : monomials)
    for (std::size_t s = 0; s + m.size() <= path.size(); ++s)
      if (std::equal(m.begin(), m.end(), path.begin() + static_cast<long>(s))) return true;
  return false;
}

AlgElement path_element(const GradedAlgebra& alg, const std::vector<std::string>& names) {
  return alg.element(alg.quiver().path_from_names(names));
}

bool same(const AlgElement& a, const AlgElement& b) {
  return a.degree == b.degree && a.source == b.source && a.target == b.target && a.coords == b.coords;
}

}  // namespace

TEST_CASE("piece dimensions of the fixtures") {
  AlgebraPtr fa = fixture("fix_a.json").algebra;
  const int v1 = vtx(fa, "1"), v2 = vtx(fa, "2");
  CHECK(fa->dim(2, v1, v2) == 0);
  CHECK(fa->dim(3, v1, v1) == 1);
  CHECK(fa->quiver().path_name(fa->basis_path(3, v1, v1, 0)) == "alpha*alpha*alpha");
  CHECK(fa->dim(1, v1, v2) == 1);
  CHECK(fa->dim(-1, v1, v1) == 0);

  AlgebraPtr fc = fixture("fix_c.json").algebra;
  CHECK(fc->dim(2, vtx(fc, "1"), vtx(fc, "4")) == 1);
  CHECK(fc->quiver().paths(2, vtx(fc, "1"), vtx(fc, "4")).size() == 2);
}

TEST_CASE("multiplication") {
  AlgebraPtr fa = fixture("fix_a.json").algebra;
  const int v1 = vtx(fa, "1");
  AlgElement e1 = fa->idempotent(v1);
  CHECK(same(fa->multiply(e1, e1), e1));
  AlgElement alpha = fa->arrow(fa->quiver().arrow_index("alpha"));
  AlgElement beta = fa->arrow(fa->quiver().arrow_index("beta"));
  CHECK(fa->multiply(beta, alpha).is_zero());
  CHECK_FALSE(fa->multiply(alpha, alpha).is_zero());
  CHECK_THROWS_AS(fa->multiply(alpha, beta), InputError);

  AlgebraPtr fc = fixture("fix_c.json").algebra;
  const auto& q = fc->quiver();
  AlgElement ga = fc->multiply(fc->arrow(q.arrow_index("gamma")), fc->arrow(q.arrow_index("alpha")));
  AlgElement db = fc->multiply(fc->arrow(q.arrow_index("delta")), fc->arrow(q.arrow_index("beta")));
  CHECK(same(ga, db));
  CHECK_FALSE(ga.is_zero());
}

TEST_CASE("opposite algebra") {
  AlgebraPtr fa = fixture("fix_a.json").algebra;
  AlgebraPtr op = fa->opposite();
  const int v1 = vtx(fa, "1"), v2 = vtx(fa, "2");
  CHECK(op->dim(1, v1, v2) == fa->dim(1, v2, v1));
  CHECK(op->dim(1, v1, v2) == 0);
  CHECK(op->dim(2, v2, v1) == 0);
  CHECK(op->dim(1, v2, v1) == 1);
  CHECK(op->opposite().get() == fa.get());
  CHECK(fa->is_opposite_of(*op));

  AlgebraPtr fc = fixture("fix_c.json").algebra;
  AlgebraPtr oc = fc->opposite();
  for (int i = 0; i <= 4; ++i)
    for (int x = 0; x < fc->num_vertices(); ++x)
      for (int y = 0; y < fc->num_vertices(); ++y) CHECK(oc->dim(i, y, x) == fc->dim(i, x, y));
  const auto& q = fc->quiver();
  AlgElement ga = fc->multiply(fc->arrow(q.arrow_index("gamma")), fc->arrow(q.arrow_index("alpha")));
  AlgElement ga_op = fc->to_opposite(ga);
  const auto& oq = oc->quiver();
  AlgElement expect = oc->multiply(oc->arrow(oq.arrow_index("alpha°")), oc->arrow(oq.arrow_index("gamma°")));
  CHECK(same(ga_op, expect));
  CHECK(same(oc->to_opposite(ga_op), ga));
}

TEST_CASE("boundedness") {
  AlgebraPtr fb = fixture("fix_b.json").algebra;
  Boundedness b = fb->boundedness(10);
  CHECK(b.left_bounded());
  CHECK(b.right_bounded());
  CHECK(b.left[vtx(fb, "1")].total_dim == 2);

  AlgebraPtr fa = fixture("fix_a.json").algebra;
  Boundedness a = fa->boundedness(10);
  CHECK_FALSE(a.left[vtx(fa, "1")].finite);
  CHECK(a.left_unknown());
  CHECK(a.left[vtx(fa, "1")].profile.size() == 11);

  AlgebraPtr fd = fixture("fix_d.json").algebra;
  Boundedness d = fd->boundedness(10);
  CHECK(d.left_bounded());
  CHECK(d.right_bounded());
  for (int n = 1; n <= 5; ++n) CHECK(d.left[vtx(fd, std::to_string(n))].total_dim == 2);
  CHECK(d.left[vtx(fd, "0")].total_dim == 1);

  AlgebraPtr fc = fixture("fix_c.json").algebra;
  Boundedness c = fc->boundedness(10);
  CHECK_FALSE(c.left_bounded());
  CHECK(c.left[vtx(fc, "1")].frontier_ray);
  CHECK(c.right_bounded());
  CHECK_THROWS_AS(fc->boundedness(0), InputError);
}

TEST_CASE("monomial algebras: piece dimensions count paths avoiding the monomials") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    AlgebraPtr alg = random_monomial_algebra(trial % 2 ? Field::prime(3) : Field::rationals(), rng);
    std::vector<std::vector<int>> monomials;
    for (const auto& r : alg->relations()) monomials.push_back(r.paths[0].arrows);
    const Quiver& q = alg->quiver();
    for (int i = 0; i <= 4; ++i)
      for (int x = 0; x < q.num_vertices(); ++x)
        for (int y = 0; y < q.num_vertices(); ++y) {
          int expect = 0;
          for (const auto& p : q.paths(i, x, y)) expect += contains_monomial(p.arrows, monomials) ? 0 : 1;
          CHECK(alg->dim(i, x, y) == expect);
        }
  }
}

TEST_CASE("path algebras: piece dimension equals the path count") {
  AlgebraPtr fb = fixture("fix_b.json").algebra;
  CHECK(fb->is_path_algebra());
  for (int i = 0; i <= 3; ++i)
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) CHECK(fb->dim(i, x, y) == static_cast<int>(fb->quiver().paths(i, x, y).size()));
}

TEST_CASE("multiplication is associative and matches left/right multiplication matrices") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 8; ++trial) {
    AlgebraPtr alg = random_monomial_algebra(Field::prime(5), rng);
    const int n = alg->num_vertices();
    std::vector<AlgElement> els;
    for (int i = 0; i <= 2; ++i)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int k = 0; k < alg->dim(i, x, y); ++k) els.push_back(alg->basis_element(i, x, y, k));
    for (const auto& u : els)
      for (const auto& v : els) {
        if (u.source != v.target) continue;
        AlgElement uv = alg->multiply(u, v);
        Matrix lm = alg->left_mult(u, v.degree, v.source);
        Matrix col = lm * Matrix::column_vector(v.coords, alg->field());
        CHECK(col.column_values(0) == uv.coords);
        Matrix rm = alg->right_mult(v, u.degree, u.target);
        Matrix col2 = rm * Matrix::column_vector(u.coords, alg->field());
        CHECK(col2.column_values(0) == uv.coords);
        for (const auto& w : els) {
          if (v.source != w.target) continue;
          CHECK(same(alg->multiply(uv, w), alg->multiply(u, alg->multiply(v, w))));
        }
      }
  }
}

TEST_CASE("relation validation") {
  Field q = Field::rationals();
  Quiver quiver({"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}, {"c", 0, 2}, {"d", 2, 2}});
  auto rel = [&](std::vector<std::vector<std::string>> paths) {
    Relation r;
    for (const auto& p : paths) {
      r.paths.push_back(quiver.path_from_names(p));
      r.coeffs.push_back(Scalar::one(q));
    }
    return r;
  };
  CHECK_THROWS_WITH_AS(GradedAlgebra::create(q, quiver, {rel({{"b", "a"}, {"d", "d", "c"}})}),
                       doctest::Contains("relation not homogeneous"), InputError);
  CHECK_THROWS_WITH_AS(GradedAlgebra::create(q, quiver, {rel({{"c"}})}),
                       doctest::Contains("relation not in (kQ+)^2"), InputError);
  CHECK_NOTHROW(GradedAlgebra::create(q, quiver, {rel({{"b", "a"}, {"d", "c"}})}));
}
