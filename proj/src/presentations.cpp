#include "gradrep/presentations.hpp"

#include <algorithm>

#include "gradrep/error.hpp"
#include "gradrep/homs.hpp"

namespace gradrep {

bool SummandMap::is_radical() const {
  for (const auto& row : entries)
    for (const auto& u : row)
      if (u.degree < 1 && !u.is_zero()) return false;
  return true;
}

bool SummandMap::operator==(const SummandMap& o) const {
  if (kind != o.kind || algebra != o.algebra || src != o.src || tgt != o.tgt) return false;
  if (entries.size() != o.entries.size()) return false;
  for (std::size_t r = 0; r < entries.size(); ++r) {
    if (entries[r].size() != o.entries[r].size()) return false;
    for (std::size_t c = 0; c < entries[r].size(); ++c) {
      const AlgElement &a = entries[r][c], &b = o.entries[r][c];
      if (a.degree != b.degree || a.source != b.source || a.target != b.target || !(a.coords == b.coords))
        return false;
    }
  }
  return true;
}

SummandMap zero_map(const AlgebraPtr& alg, StandardKind kind, std::vector<Summand> src, std::vector<Summand> tgt) {
  SummandMap f{kind, alg, std::move(src), std::move(tgt), {}};
  for (const Summand& r : f.src) {
    std::vector<AlgElement> row;
    for (const Summand& c : f.tgt) row.push_back(alg->zero(c.shift - r.shift, c.vertex, r.vertex));
    f.entries.push_back(std::move(row));
  }
  return f;
}

StandardSum projective_sum(const AlgebraPtr& alg, std::vector<Summand> summands, std::optional<int> hi, bool clip) {
  StandardSum out{StandardKind::P, std::move(summands), {}, nullptr};
  for (const Summand& s : out.summands) {
    ModPtr p = standard(alg, StandardKind::P, s.vertex, s.shift);
    if (hi && (p->truncated_above() || (clip && p->hi() > *hi)))
      p = standard(alg, StandardKind::P, s.vertex, s.shift, std::make_pair(-s.shift, std::max(*hi, -s.shift - 1)));
    out.parts.push_back(std::move(p));
  }
  out.module = out.parts.empty() ? zero_module(alg) : direct_sum(out.parts);
  return out;
}

StandardSum injective_sum(const AlgebraPtr& alg, std::vector<Summand> summands, std::optional<int> lo) {
  StandardSum out{StandardKind::I, std::move(summands), {}, nullptr};
  for (const Summand& s : out.summands) {
    ModPtr p = standard(alg, StandardKind::I, s.vertex, s.shift);
    if (p->truncated_below() && lo)
      p = standard(alg, StandardKind::I, s.vertex, s.shift, std::make_pair(std::min(*lo, -s.shift + 1), -s.shift));
    out.parts.push_back(std::move(p));
  }
  out.module = out.parts.empty() ? zero_module(alg) : direct_sum(out.parts);
  return out;
}

namespace {

int part_offset(const StandardSum& s, std::size_t k, int i, int x) {
  int off = 0;
  for (std::size_t j = 0; j < k; ++j) off += s.parts[j]->dim(i, x);
  return off;
}

}  // namespace

GradedMorphism realize(const SummandMap& f, const StandardSum& src, const StandardSum& tgt) {
  if (f.src != src.summands || f.tgt != tgt.summands) throw InternalError("realize: summand lists do not match");
  const AlgebraPtr& alg = f.algebra;
  GradedMorphism g(src.module, tgt.module);
  const ModPtr& sm = src.module;
  for (int i = sm->lo(); i <= sm->hi(); ++i)
    for (int x = 0; x < alg->num_vertices(); ++x) {
      if (sm->dim(i, x) == 0) continue;
      Matrix m = g.at(i, x);
      for (std::size_t r = 0; r < f.src.size(); ++r) {
        const int cols = src.parts[r]->dim(i, x);
        if (cols == 0) continue;
        const int c0 = part_offset(src, r, i, x);
        for (std::size_t c = 0; c < f.tgt.size(); ++c) {
          const AlgElement& u = f.entries[r][c];
          if (u.is_zero()) continue;
          const int rows = tgt.parts[c]->dim(i, x);
          if (rows == 0) continue;
          Matrix block = f.kind == StandardKind::P
                             ? alg->right_mult(u, i + f.src[r].shift, x)
                             : alg->left_mult(u, -i - f.tgt[c].shift, x).transpose();
          m.set_block(part_offset(tgt, c, i, x), c0, block);
        }
      }
      g.set(i, x, std::move(m));
    }
  return g;
}

GradedMorphism morphism_from_generators(const StandardSum& p, const std::vector<Matrix>& images, const ModPtr& target) {
  if (p.parts.empty()) return GradedMorphism(p.module, target);
  const AlgebraPtr& alg = target->algebra();
  std::vector<GradedMorphism> comps;
  for (std::size_t k = 0; k < p.parts.size(); ++k) {
    const ModPtr& part = p.parts[k];
    const int a = p.summands[k].vertex, s = p.summands[k].shift;
    GradedMorphism h(part, target);
    for (int i = part->lo(); i <= part->hi(); ++i)
      for (int y = 0; y < alg->num_vertices(); ++y) {
        const int cols = part->dim(i, y);
        if (cols == 0) continue;
        Matrix m(target->field(), target->dim(i, y), cols);
        for (int j = 0; j < cols; ++j) {
          Matrix v = target->act(alg->basis_element(i + s, a, y, j), -s) * images[k];
          for (int r = 0; r < v.rows(); ++r) m(r, j) = v(r, 0);
        }
        h.set(i, y, std::move(m));
      }
    comps.push_back(std::move(h));
  }
  return stack_from(p.module, comps);
}

std::vector<PureElement> top_basis(const ModPtr& m) {
  if (m->truncated_below()) throw WindowError("top basis needs the module exact below its window", m->lo() - 1);
  int upper = m->hi();
  if (m->truncated_above()) {
    if (!m->top_zero_from || *m->top_zero_from - 1 > m->hi())
      throw WindowError("top basis: the top is not known to vanish beyond the window", m->hi() + 1);
    upper = *m->top_zero_from - 1;
  }
  const Quiver& q = m->algebra()->quiver();
  std::vector<PureElement> out;
  for (int d = m->lo(); d <= upper; ++d)
    for (int x = 0; x < m->algebra()->num_vertices(); ++x) {
      const int n = m->dim(d, x);
      if (n == 0) continue;
      Matrix rad(m->field(), n, 0);
      for (int a : q.arrows_in(x)) rad = Matrix::hstack(rad, m->map(a, d - 1));
      Matrix comp = complement_units(column_basis(rad), n);
      for (int c = 0; c < comp.cols(); ++c) out.push_back({d, x, comp.column(c)});
    }
  return out;
}

namespace {

Matrix socle_piece(const ModPtr& m, int d, int x) {
  Matrix acc(m->field(), 0, m->dim(d, x));
  for (int a : m->algebra()->quiver().arrows_out(x)) acc = Matrix::vstack(acc, m->map(a, d));
  return kernel(acc);
}

}  // namespace

std::vector<PureElement> soc_basis(const ModPtr& m) {
  if (m->truncated_above()) throw WindowError("socle basis needs the module exact above its window", m->hi() + 1);
  if (m->truncated_below()) throw WindowError("socle basis needs the module exact below its window", m->lo() - 1);
  std::vector<PureElement> out;
  for (int d = m->lo(); d <= m->hi(); ++d)
    for (int x = 0; x < m->algebra()->num_vertices(); ++x) {
      if (m->dim(d, x) == 0) continue;
      Matrix s = socle_piece(m, d, x);
      for (int c = 0; c < s.cols(); ++c) out.push_back({d, x, s.column(c)});
    }
  return out;
}

namespace {

int kernel_top_bound(const ModPtr& m, const std::vector<PureElement>& top) {
  int g = m->lo();
  for (const auto& t : top) g = std::max(g, t.degree);
  const int mhi = m->max_degree().value_or(m->lo() - 1);
  return std::max(mhi + 2, g + 1);
}

}  // namespace

Cover projective_cover(const ModPtr& m, std::optional<int> hi) {
  Cover c;
  c.module = m;
  c.top = top_basis(m);
  std::vector<Summand> summands;
  std::vector<Matrix> images;
  for (const auto& t : c.top) {
    summands.push_back({t.vertex, -t.degree});
    images.push_back(t.vector);
  }
  int h;
  if (m->truncated_above()) {
    h = m->hi();
  } else {
    h = kernel_top_bound(m, c.top);
    if (hi) h = std::max(h, *hi);
  }
  c.projective = projective_sum(m->algebra(), std::move(summands), h, m->truncated_above());
  c.epi = morphism_from_generators(c.projective, images, m);
  return c;
}

SubModule syzygy(const Cover& c) {
  SubModule k = kernel(c.epi);
  if (k.module->truncated_above() && c.module->exact()) {
    auto mod = std::make_shared<GradedModule>(*k.module);
    mod->top_zero_from = kernel_top_bound(c.module, c.top);
    GradedMorphism inc(mod, k.inclusion.tgt);
    inc.f = k.inclusion.f;
    return {mod, inc};
  }
  return k;
}

Envelope injective_envelope(const ModPtr& m, std::optional<int> lo) {
  Envelope e;
  e.module = m;
  e.socle = soc_basis(m);
  std::vector<Summand> summands;
  std::vector<Matrix> functionals;
  for (std::size_t k = 0; k < e.socle.size();) {
    const int d = e.socle[k].degree, x = e.socle[k].vertex;
    std::size_t end = k;
    while (end < e.socle.size() && e.socle[end].degree == d && e.socle[end].vertex == x) ++end;
    Matrix s = socle_piece(m, d, x);
    const int n = m->dim(d, x);
    auto inv = inverse(Matrix::hstack(s, complement_units(s, n)));
    if (!inv) throw InternalError("socle basis is not independent");
    for (std::size_t j = k; j < end; ++j) {
      summands.push_back({x, -d});
      functionals.push_back(inv->block(static_cast<int>(j - k), 0, 1, n));
    }
    k = end;
  }
  e.injective = injective_sum(m->algebra(), summands, std::min(lo.value_or(m->lo()), m->lo()));
  if (summands.empty()) {
    e.mono = GradedMorphism(m, e.injective.module);
    return e;
  }
  std::vector<GradedMorphism> comps;
  for (std::size_t k = 0; k < summands.size(); ++k)
    comps.push_back(functional_to_injective(m, e.injective.parts[k], summands[k].vertex, summands[k].shift,
                                            functionals[k]));
  e.mono = stack_into(e.injective.module, comps);
  return e;
}

SummandMap presentation_matrix(const Cover& kernel_cover, const GradedMorphism& inclusion, const StandardSum& p0) {
  const AlgebraPtr& alg = inclusion.tgt->algebra();
  SummandMap f = zero_map(alg, StandardKind::P, kernel_cover.projective.summands, p0.summands);
  for (std::size_t r = 0; r < kernel_cover.top.size(); ++r) {
    const PureElement& t = kernel_cover.top[r];
    Matrix w = inclusion.at(t.degree, t.vertex) * t.vector;
    for (std::size_t c = 0; c < p0.summands.size(); ++c) {
      const int len = p0.parts[c]->dim(t.degree, t.vertex);
      const int off = part_offset(p0, c, t.degree, t.vertex);
      for (int k = 0; k < len; ++k) f.entries[r][c].coords[k] = w(off + k, 0);
    }
  }
  return f;
}

Presentation minimal_presentation(const ModPtr& m, std::optional<int> hi) {
  Presentation p;
  p.module = m;
  p.cover = projective_cover(m, hi);
  p.kernel = syzygy(p.cover);
  p.kernel_cover = projective_cover(p.kernel.module);
  p.d1 = presentation_matrix(p.kernel_cover, p.kernel.inclusion, p.cover.projective);
  p.d1_realized = compose(p.kernel.inclusion, p.kernel_cover.epi);
  return p;
}

namespace {

std::vector<Summand> negate_shifts(const std::vector<Summand>& s) {
  std::vector<Summand> out;
  for (const auto& x : s) out.push_back({x.vertex, -x.shift});
  return out;
}

// A map P1° -> P0° over the opposite algebra read as I0 -> I1 over the algebra.
SummandMap dualize_map(const SummandMap& f) {
  AlgebraPtr alg = f.algebra->opposite();
  SummandMap g = zero_map(alg, StandardKind::I, negate_shifts(f.tgt), negate_shifts(f.src));
  for (std::size_t r = 0; r < f.src.size(); ++r)
    for (std::size_t c = 0; c < f.tgt.size(); ++c) g.entries[c][r] = f.algebra->to_opposite(f.entries[r][c]);
  return g;
}

}  // namespace

Copresentation minimal_copresentation(const ModPtr& m) {
  Copresentation c;
  c.module = m;
  ModPtr d = dual(m);
  c.dual = minimal_presentation(d);
  c.i0_module = dual(c.dual.cover.projective.module);
  c.i1_module = dual(c.dual.kernel_cover.projective.module);
  c.i0 = negate_shifts(c.dual.cover.projective.summands);
  c.i1 = negate_shifts(c.dual.kernel_cover.projective.summands);
  c.d0 = dualize_map(c.dual.d1);
  c.envelope = dual(c.dual.cover.epi, m, c.i0_module);
  c.d0_realized = dual(c.dual.d1_realized, c.i0_module, c.i1_module);
  return c;
}

namespace {

// A vertex downstream of the support of `k` whose projective touches a
// bounded frontier: later covers of k can only use such projectives.
std::optional<int> downstream_taint(const GradedModule& k, int reach) {
  const AlgebraPtr& alg = k.algebra();
  const Quiver& q = alg->quiver();
  std::vector<bool> seen(alg->num_vertices(), false);
  std::vector<int> stack;
  for (int i = k.lo(); i <= k.hi(); ++i)
    for (int x = 0; x < alg->num_vertices(); ++x)
      if (k.dim(i, x) > 0 && !seen[x]) {
        seen[x] = true;
        stack.push_back(x);
      }
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int a : q.arrows_out(x))
      if (!seen[q.arrow(a).to]) {
        seen[q.arrow(a).to] = true;
        stack.push_back(q.arrow(a).to);
      }
  }
  for (int x = 0; x < alg->num_vertices(); ++x)
    if (seen[x] && alg->frontier_tainted_out(x, Frontier::Kind::Bounded, reach)) return x;
  return std::nullopt;
}

}  // namespace

Resolution projective_resolution(const ModPtr& m, int cap) {
  Resolution res;
  res.kind = StandardKind::P;
  const AlgebraPtr& alg = m->algebra();
  const int reach = cap + alg->num_vertices() + 1;
  ModPtr cur = m;
  std::optional<SubModule> prev;
  StandardSum prev_p;
  for (int n = 0; n <= cap; ++n) {
    Cover c;
    try {
      c = projective_cover(cur);
    } catch (const WindowError& e) {
      res.reason = std::string("window: ") + e.what();
      return res;
    }
    if (c.top.empty()) {
      res.length = n - 1;
      return res;
    }
    res.terms.push_back(c.projective.summands);
    if (prev) res.maps.push_back(presentation_matrix(c, prev->inclusion, prev_p));
    for (const Summand& s : c.projective.summands)
      if (alg->frontier_tainted_out(s.vertex, Frontier::Kind::Bounded, reach)) {
        res.reason = "frontier: P_" + alg->quiver().vertices()[s.vertex] +
                     " reaches a vertex whose continuation is only known to be bounded";
        return res;
      }
    SubModule k = syzygy(c);
    try {
      if (top_basis(k.module).empty()) {
        res.length = n;
        return res;
      }
    } catch (const WindowError& e) {
      res.reason = std::string("window: ") + e.what();
      return res;
    }
    if (n == cap) {
      res.reason = "cap: syzygy " + std::to_string(n + 1) + " is nonzero";
      if (auto v = downstream_taint(*k.module, reach))
        res.reason = "frontier: later terms can reach P_" + alg->quiver().vertices()[*v] +
                     ", whose continuation is only known to be bounded (cap " + std::to_string(cap) + " hit)";
      return res;
    }
    prev = k;
    prev_p = c.projective;
    cur = k.module;
  }
  return res;
}

Resolution injective_resolution(const ModPtr& m, int cap) {
  Resolution r = projective_resolution(dual(m), cap);
  Resolution out;
  out.kind = StandardKind::I;
  out.length = r.length;
  out.reason = r.reason;
  if (auto p = out.reason.find("P_"); out.reason.rfind("frontier:", 0) == 0 && p != std::string::npos)
    out.reason[p] = 'I';
  for (const auto& t : r.terms) out.terms.push_back(negate_shifts(t));
  for (const auto& f : r.maps) out.maps.push_back(dualize_map(f));
  return out;
}

std::string GradedDimension::label() const { return value ? std::to_string(*value) : "unknown-at-cap"; }

GradedDimension projective_dimension(const ModPtr& m, int cap) {
  GradedDimension g;
  g.cap = cap;
  g.resolution = projective_resolution(m, cap);
  g.value = g.resolution.length;
  g.reason = g.resolution.reason;
  return g;
}

GradedDimension injective_dimension(const ModPtr& m, int cap) {
  GradedDimension g;
  g.cap = cap;
  g.resolution = injective_resolution(m, cap);
  g.value = g.resolution.length;
  g.reason = g.resolution.reason;
  return g;
}

ModPtr exact_restriction(const ModPtr& m, int lo, int hi) {
  auto out = std::make_shared<GradedModule>(m->algebra(), lo, hi);
  const int n = m->algebra()->num_vertices();
  for (int i = lo; i <= hi; ++i)
    for (int x = 0; x < n; ++x) out->set_dim(i, x, m->dim(i, x));
  for (int i = lo; i < hi; ++i)
    for (int a = 0; a < m->algebra()->quiver().num_arrows(); ++a) out->set_map(a, i, m->map(a, i));
  return out;
}

ModPtr finite_cokernel(const SummandMap& f, int max_pad) {
  if (f.tgt.empty()) return zero_module(f.algebra);
  int g = -kUnbounded, lo = kUnbounded;
  for (const auto& s : f.tgt) {
    g = std::max(g, -s.shift);
    lo = std::min(lo, -s.shift);
  }
  for (int pad = 4;; pad *= 2) {
    pad = std::min(pad, max_pad);
    StandardSum src = projective_sum(f.algebra, f.src, g + pad);
    StandardSum tgt = projective_sum(f.algebra, f.tgt, g + pad);
    QuotientModule q = cokernel(realize(f, src, tgt));
    const ModPtr& c = q.module;
    if (c->exact()) return c;
    for (int d = std::max(g + 1, c->lo()); d <= c->hi(); ++d)
      if (c->degree_dim(d) == 0) return exact_restriction(c, c->lo(), d - 1);
    if (pad >= max_pad) throw WindowError("cokernel does not vanish within the search window", g + pad);
  }
}

}  // namespace gradrep
