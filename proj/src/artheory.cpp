#include "gradrep/artheory.hpp"

#include <algorithm>

#include "gradrep/error.hpp"

namespace gradrep {

SummandMap transpose_map(const SummandMap& f) {
  if (f.kind != StandardKind::P) throw InputError("transpose is defined on maps between projectives");
  auto neg = [](const std::vector<Summand>& s) {
    std::vector<Summand> out;
    for (const auto& x : s) out.push_back({x.vertex, -x.shift});
    return out;
  };
  SummandMap t = zero_map(f.algebra->opposite(), StandardKind::P, neg(f.tgt), neg(f.src));
  for (std::size_t r = 0; r < f.src.size(); ++r)
    for (std::size_t c = 0; c < f.tgt.size(); ++c) t.entries[c][r] = f.algebra->to_opposite(f.entries[r][c]);
  return t;
}

Transpose transpose(const ModPtr& m) {
  Transpose t;
  t.presentation = minimal_presentation(m);
  t.matrix = transpose_map(t.presentation.d1);
  t.module = finite_cokernel(t.matrix);
  return t;
}

SummandMap nakayama(const SummandMap& f) {
  if (f.kind != StandardKind::P) throw InputError("the Nakayama functor takes a map between projectives");
  SummandMap g = f;
  g.kind = StandardKind::I;
  return g;
}

SummandMap nakayama_inverse(const SummandMap& f) {
  if (f.kind != StandardKind::I) throw InputError("the inverse Nakayama functor takes a map between injectives");
  SummandMap g = f;
  g.kind = StandardKind::P;
  return g;
}

bool is_projective(const ModPtr& m) {
  Cover c = projective_cover(m);
  return top_basis(syzygy(c).module).empty();
}

bool is_injective(const ModPtr& m) { return is_projective(dual(m)); }

namespace {

std::string certify_or_refuse(const ModPtr& m, const char* what, int budget, std::uint64_t seed) {
  IndecVerdict v = is_strongly_indecomposable(m, budget, seed);
  if (v.kind != IndecVerdict::Kind::Yes)
    throw PreconditionError(std::string(what) + " needs an indecomposable module; the indecomposability verdict is \"" +
                            v.label() + "\" (" + v.detail + ")");
  return v.label();
}

}  // namespace

Translate tau(const ModPtr& m, bool certify, int budget, std::uint64_t seed) {
  Translate t;
  if (certify) t.verdict = certify_or_refuse(m, "tau", budget, seed);
  if (is_projective(m)) {
    t.module = zero_module(m->algebra());
    t.warning = "module is projective: tau is zero";
    return t;
  }
  t.module = dual(transpose(m).module);
  return t;
}

Translate tau_inverse(const ModPtr& n, bool certify, int budget, std::uint64_t seed) {
  Translate t;
  if (certify) t.verdict = certify_or_refuse(n, "tau-inverse", budget, seed);
  if (is_injective(n)) {
    t.module = zero_module(n->algebra());
    t.warning = "module is injective: tau-inverse is zero";
    return t;
  }
  t.module = transpose(dual(n)).module;
  return t;
}

ArFormulaReport ar_formula_check(const ModPtr& m, const ModPtr& x) {
  ArFormulaReport r;
  r.underline_hom = stable_hom_dims(m, x).underline;
  ModPtr tm = tau(m, false).module;
  r.ext_x_tau_m = tm->total_dim() == 0 || x->total_dim() == 0 ? 0 : ext1(x, tm).dim();
  r.overline_hom = stable_hom_dims(x, m).overline;
  ModPtr tim = tau_inverse(m, false).module;
  r.ext_tauinv_m_x = tim->total_dim() == 0 || x->total_dim() == 0 ? 0 : ext1(tim, x).dim();
  return r;
}

GradedMorphism retarget(const GradedMorphism& f, const ModPtr& src, const ModPtr& tgt) {
  GradedMorphism g(src, tgt);
  for (int i = src->lo(); i <= src->hi(); ++i)
    for (int x = 0; x < src->algebra()->num_vertices(); ++x)
      if (src->dim(i, x) > 0) g.set(i, x, f.at(i, x));
  return g;
}

AlmostSplitSequence sequence_from_class(const ExtSpace& e, const std::vector<Scalar>& c) {
  const ModPtr& a = e.n;
  const ModPtr& cm = e.m;
  const ModPtr& p0 = e.pres.cover.projective.module;
  const GradedMorphism& inc = e.pres.kernel.inclusion;
  const int nv = a->algebra()->num_vertices();

  GradedMorphism h = e.representative(c);
  ModPtr sum = direct_sum({a, p0});
  GradedMorphism j = stack_into(sum, {retarget(h, h.src, a), scale(inc, -Scalar::one(a->field()))});
  QuotientModule q = cokernel(j);
  const ModPtr& qm = q.module;
  const ModPtr& parent = q.projection.src;

  const int lo = qm->lo();
  const int hi = std::max(a->max_degree().value_or(lo - 1), cm->max_degree().value_or(lo - 1));
  for (int d = hi + 1; d <= qm->hi(); ++d)
    if (qm->degree_dim(d) != 0) throw InternalError("pushout does not vanish above the ends of the sequence");
  if (qm->truncated_above() && qm->hi() < hi) throw WindowError("pushout window too small", qm->hi() + 1);
  ModPtr e_mod = exact_restriction(qm, lo, std::max(hi, lo - 1));

  AlmostSplitSequence s;
  s.left = a;
  s.middle = e_mod;
  s.right = cm;
  s.xi = c;
  s.direction = "ending";
  s.f = GradedMorphism(a, e_mod);
  for (int i = a->lo(); i <= a->hi(); ++i)
    for (int x = 0; x < nv; ++x) {
      const int n = a->dim(i, x);
      if (n == 0) continue;
      Matrix incl(a->field(), parent->dim(i, x), n);
      for (int k = 0; k < n; ++k) incl(k, k) = Scalar::one(a->field());
      s.f.set(i, x, q.projection.at(i, x) * incl);
    }
  GradedMorphism to_c(parent, cm);
  for (int i = parent->lo(); i <= parent->hi(); ++i)
    for (int x = 0; x < nv; ++x) {
      const int na = a->known(i) ? a->dim(i, x) : 0;
      Matrix m(a->field(), cm->dim(i, x), parent->dim(i, x));
      Matrix pi = e.pres.cover.epi.at(i, x);
      m.set_block(0, na, pi);
      to_c.set(i, x, std::move(m));
    }
  s.g = retarget(induced_from_quotient(q, to_c), e_mod, cm);
  return s;
}

namespace {

Matrix socle_under_radical(const ExtSpace& e, const EndAlgebra& end) {
  const Field f = e.m->field();
  Matrix stacked(f, 0, e.dim());
  for (const auto& r : end.radical_basis()) stacked = Matrix::vstack(stacked, e.action(r));
  return stacked.rows() ? kernel(stacked) : Matrix::identity(f, e.dim());
}

std::vector<Scalar> recover_class(const ExtSpace& e, const AlmostSplitSequence& s) {
  const Cover& c = e.pres.cover;
  std::vector<Matrix> lifts;
  for (const auto& t : c.top) {
    auto y = solve(s.g.at(t.degree, t.vertex), t.vector);
    if (!y) throw InternalError("g is not surjective");
    lifts.push_back(*y);
  }
  GradedMorphism psi = morphism_from_generators(c.projective, lifts, s.middle);
  GradedMorphism h = factor_through_mono(compose(psi, e.pres.kernel.inclusion), s.f);
  return e.class_of(h);
}

AlmostSplitSequence ending_at(const ModPtr& c, int budget, std::uint64_t seed) {
  certify_or_refuse(c, "an almost split sequence ending at a module", budget, seed);
  if (is_projective(c)) throw PreconditionError("module is projective: no almost split sequence ends at it");
  ModPtr a = tau(c, false).module;
  ExtSpace e = ext1(c, a);
  if (e.dim() == 0) throw InternalError("Ext¹(C, τC) vanishes for a non-projective indecomposable C");
  EndAlgebra end = end_algebra(c);
  Matrix soc = socle_under_radical(e, end);
  if (soc.cols() == 0) throw InternalError("Ext¹(C, τC) has zero socle under rad End(C)");
  Matrix first = rref(soc.transpose()).reduced.transpose().column(0);
  return sequence_from_class(e, first.column_values(0));
}

}  // namespace

AlmostSplitSequence almost_split_sequence(const ModPtr& c, Direction dir, int budget, std::uint64_t seed) {
  if (!c->exact()) throw PreconditionError("almost split sequences are built for exact-windowed modules");
  if (dir == Direction::Ending) return ending_at(c, budget, seed);

  certify_or_refuse(c, "an almost split sequence starting at a module", budget, seed);
  if (is_injective(c)) throw PreconditionError("module is injective: no almost split sequence starts at it");
  AlmostSplitSequence op = ending_at(dual(c), budget, seed);
  AlmostSplitSequence s;
  s.direction = "starting";
  s.left = c;
  s.middle = dual(op.middle);
  s.right = dual(op.left);
  s.f = dual(op.g, c, s.middle);
  s.g = dual(op.f, s.middle, s.right);
  s.xi = recover_class(ext1(s.right, s.left), s);
  return s;
}

ArsVerdict verify_almost_split(const AlmostSplitSequence& s, int budget, std::uint64_t seed) {
  ArsVerdict v;
  auto fail = [&](const char* reason) {
    v.pass = false;
    v.reason = reason;
    return v;
  };
  const ModPtr &a = s.left, &e = s.middle, &c = s.right;
  bool dims_ok = a->exact() && e->exact() && c->exact();
  if (dims_ok) {
    const int lo = std::min({a->lo(), e->lo(), c->lo()}), hi = std::max({a->hi(), e->hi(), c->hi()});
    for (int i = lo; i <= hi && dims_ok; ++i)
      for (int x = 0; x < a->algebra()->num_vertices(); ++x)
        if (e->dim(i, x) != a->dim(i, x) + c->dim(i, x)) dims_ok = false;
  }
  v.exact = dims_ok && is_natural(s.f) && is_natural(s.g) && compose(s.g, s.f).is_zero() && is_injective(s.f) &&
            is_surjective(s.g);
  if (!v.exact) return fail("exactness");

  if (a->total_dim() == 0) return fail("nonsplit");
  ExtSpace ext = ext1(c, a);
  v.ext_dim = ext.dim();
  v.xi = recover_class(ext, s);
  v.nonsplit = std::any_of(v.xi.begin(), v.xi.end(), [](const Scalar& x) { return !x.is_zero(); });
  if (!v.nonsplit) return fail("nonsplit");

  EndAlgebra end = end_algebra(c);
  v.radical_dim = end.radical_dim();
  v.socle = true;
  Matrix xi = Matrix::column_vector(v.xi, a->field());
  for (const auto& r : end.radical_basis())
    if (!(ext.action(r) * xi).is_zero()) v.socle = false;
  if (!v.socle) return fail("socle");

  v.left_is_tau = find_isomorphism(a, tau(c, false).module, budget, seed).has_value();
  if (!v.left_is_tau) return fail("tau");

  IndecVerdict vl = is_strongly_indecomposable(a, budget, seed), vr = is_strongly_indecomposable(c, budget, seed);
  v.left_verdict = vl.label();
  v.right_verdict = vr.label();
  v.ends_indecomposable = vl.kind == IndecVerdict::Kind::Yes && vr.kind == IndecVerdict::Kind::Yes;
  if (!v.ends_indecomposable) return fail("indecomposable");
  v.pass = true;
  return v;
}

}  // namespace gradrep
