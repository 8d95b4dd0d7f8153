#include "gradrep/ext.hpp"

#include <algorithm>

#include "gradrep/error.hpp"

namespace gradrep {

namespace {

int image_rank(const HomSpace& into, const std::vector<GradedMorphism>& maps) {
  if (into.dim() == 0 || maps.empty()) return 0;
  Matrix coords(into.src->field(), into.dim(), 0);
  for (const auto& f : maps) {
    auto c = into.coordinates(f);
    if (!c) throw InternalError("composite morphism is not in the Hom space");
    coords = Matrix::hstack(coords, Matrix::column_vector(*c, into.src->field()));
  }
  return rank(coords);
}

}  // namespace

StableHomDims stable_hom_dims(const ModPtr& m, const ModPtr& n) {
  StableHomDims d;
  HomSpace h = ghom(m, n);
  d.hom = h.dim();
  if (d.hom == 0) return d;

  Cover cover = projective_cover(n, m->hi() + 1);
  HomSpace to_p = ghom(m, cover.projective.module);
  std::vector<GradedMorphism> through_p;
  for (const auto& f : to_p.basis) through_p.push_back(compose(cover.epi, f));
  d.underline = d.hom - image_rank(h, through_p);

  Envelope env = injective_envelope(m, std::min(n->lo() - 1, m->lo()));
  HomSpace from_i = ghom(env.injective.module, n);
  std::vector<GradedMorphism> through_i;
  for (const auto& f : from_i.basis) through_i.push_back(compose(f, env.mono));
  d.overline = d.hom - image_rank(h, through_i);
  return d;
}

ExtSpace ext1(const ModPtr& m, const ModPtr& n) {
  if (m->algebra() != n->algebra()) throw InputError("Ext between modules over different algebras");
  ExtSpace e;
  e.m = m;
  e.n = n;
  e.pres = minimal_presentation(m, n->hi() + 1);
  e.hom_k = ghom(e.pres.kernel.module, n);
  const Field f = m->field();
  HomSpace from_p = ghom(e.pres.cover.projective.module, n);
  Matrix b(f, e.hom_k.dim(), 0);
  for (const auto& g : from_p.basis) {
    auto c = e.hom_k.coordinates(compose(g, e.pres.kernel.inclusion));
    if (!c) throw InternalError("restriction to the syzygy is not a morphism");
    b = Matrix::hstack(b, Matrix::column_vector(*c, f));
  }
  e.boundary = b.cols() ? column_basis(b) : b;
  e.complement = complement_units(e.boundary, e.hom_k.dim());
  return e;
}

std::vector<Scalar> ExtSpace::class_of(const GradedMorphism& h) const {
  if (dim() == 0) return {};
  auto c = hom_k.coordinates(h);
  if (!c) throw InternalError("class_of: not a morphism K -> N");
  auto x = solve(Matrix::hstack(boundary, complement), Matrix::column_vector(*c, m->field()));
  if (!x) throw InternalError("class_of: boundary and complement do not span");
  std::vector<Scalar> out;
  for (int k = boundary.cols(); k < x->rows(); ++k) out.push_back((*x)(k, 0));
  return out;
}

GradedMorphism ExtSpace::representative(const std::vector<Scalar>& c) const {
  if (dim() == 0) return hom_k.zero();
  Matrix v = complement * Matrix::column_vector(c, m->field());
  return hom_k.combine(v.column_values(0));
}

GradedMorphism ExtSpace::lift_to_cover(const GradedMorphism& phi) const {
  const Cover& c = pres.cover;
  std::vector<Matrix> lifts;
  for (const auto& t : c.top) {
    auto y = solve(c.epi.at(t.degree, t.vertex), phi.at(t.degree, t.vertex) * t.vector);
    if (!y) throw InternalError("cover is not surjective");
    lifts.push_back(*y);
  }
  return morphism_from_generators(c.projective, lifts, c.projective.module);
}

GradedMorphism ExtSpace::lift_to_syzygy(const GradedMorphism& phi) const {
  const GradedMorphism& inc = pres.kernel.inclusion;
  return factor_through_mono(compose(lift_to_cover(phi), inc), inc);
}

Matrix ExtSpace::action(const GradedMorphism& phi) const {
  const Field f = m->field();
  Matrix a(f, dim(), dim());
  if (dim() == 0) return a;
  GradedMorphism phi1 = lift_to_syzygy(phi);
  for (int j = 0; j < dim(); ++j) {
    std::vector<Scalar> unit(dim(), Scalar::zero(f));
    unit[j] = Scalar::one(f);
    auto c = class_of(compose(representative(unit), phi1));
    for (int i = 0; i < dim(); ++i) a(i, j) = c[i];
  }
  return a;
}

}  // namespace gradrep
