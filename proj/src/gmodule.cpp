#include "gradrep/gmodule.hpp"

#include <algorithm>

#include "gradrep/error.hpp"

namespace gradrep {

GradedModule::GradedModule(AlgebraPtr alg, int lo, int hi, bool truncated_below, bool truncated_above)
    : alg_(std::move(alg)), lo_(lo), hi_(hi), trunc_below_(truncated_below), trunc_above_(truncated_above) {
  if (!alg_) throw InputError("module without an algebra");
  if (hi < lo - 1) throw InputError("module window [" + std::to_string(lo) + "," + std::to_string(hi) + "] is inverted");
  const int n = alg_->num_vertices();
  dims_.assign(hi - lo + 1, std::vector<int>(n, 0));
  maps_.assign(std::max(0, hi - lo), {});
  for (auto& row : maps_) {
    row.reserve(alg_->quiver().num_arrows());
    for (int a = 0; a < alg_->quiver().num_arrows(); ++a) row.emplace_back(alg_->field(), 0, 0);
  }
}

bool GradedModule::known(int i) const {
  if (i < lo_) return !trunc_below_;
  if (i > hi_) return !trunc_above_;
  return true;
}

void GradedModule::require_known(int i, const std::string& what) const {
  if (!known(i))
    throw WindowError(what + ": module data needed outside window [" + std::to_string(lo_) + "," +
                          std::to_string(hi_) + "] on a truncated side",
                      i);
}

int GradedModule::dim(int i, int x) const {
  if (i < lo_ || i > hi_) {
    require_known(i, "dim");
    return 0;
  }
  return dims_[i - lo_].at(x);
}

Matrix GradedModule::map(int arrow, int i) const {
  const Arrow& a = alg_->quiver().arrow(arrow);
  if (i >= lo_ && i < hi_) return maps_[i - lo_][arrow];
  return Matrix(field(), dim(i + 1, a.to), dim(i, a.from));
}

Matrix GradedModule::act(const Path& p, int i) const {
  Matrix m = Matrix::identity(field(), dim(i, p.source));
  int d = i;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    m = map(*it, d) * m;
    ++d;
  }
  return m;
}

Matrix GradedModule::act(const AlgElement& u, int i) const {
  Matrix m(field(), u.degree < 0 ? 0 : dim(i + u.degree, u.target), dim(i, u.source));
  if (u.degree < 0) return m;
  const auto& pc = alg_->piece(u.degree, u.source, u.target);
  for (int k = 0; k < pc.dim(); ++k) {
    if (u.coords[k].is_zero()) continue;
    m = m + act(pc.paths[pc.basis[k]], i).scaled(u.coords[k]);
  }
  return m;
}

void GradedModule::set_dim(int i, int x, int n) {
  if (i < lo_ || i > hi_) throw InternalError("set_dim outside window");
  if (n < 0) throw InputError("negative piece dimension");
  dims_[i - lo_].at(x) = n;
  const Quiver& q = alg_->quiver();
  for (int a : q.arrows_out(x))
    if (i < hi_) maps_[i - lo_][a] = Matrix(field(), dim(i + 1, q.arrow(a).to), n);
  for (int a : q.arrows_in(x))
    if (i > lo_) maps_[i - 1 - lo_][a] = Matrix(field(), n, dim(i - 1, q.arrow(a).from));
}

void GradedModule::set_map(int arrow, int i, Matrix m) {
  const Arrow& a = alg_->quiver().arrow(arrow);
  if (i < lo_ || i >= hi_) {
    if (m.is_zero()) return;
    throw InputError("action of '" + a.name + "' at degree " + std::to_string(i) + " lies outside the window");
  }
  if (m.rows() != dim(i + 1, a.to) || m.cols() != dim(i, a.from))
    throw InputError("action of '" + a.name + "' at degree " + std::to_string(i) + " has shape " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                     std::to_string(dim(i + 1, a.to)) + "x" + std::to_string(dim(i, a.from)));
  if (!(m.field() == field())) throw InputError("action matrix over the wrong field");
  maps_[i - lo_][arrow] = std::move(m);
}

int GradedModule::total_dim() const {
  int t = 0;
  for (const auto& row : dims_)
    for (int d : row) t += d;
  return t;
}

int GradedModule::degree_dim(int i) const {
  int t = 0;
  for (int x = 0; x < alg_->num_vertices(); ++x) t += dim(i, x);
  return t;
}

std::optional<int> GradedModule::min_degree() const {
  for (int i = lo_; i <= hi_; ++i)
    if (degree_dim(i) > 0) return i;
  return std::nullopt;
}

std::optional<int> GradedModule::max_degree() const {
  for (int i = hi_; i >= lo_; --i)
    if (degree_dim(i) > 0) return i;
  return std::nullopt;
}

bool GradedModule::same_dims(const GradedModule& o) const {
  if (alg_ != o.alg_) return false;
  if (trunc_below_ != o.trunc_below_ || trunc_above_ != o.trunc_above_) return false;
  const int a = std::min(lo_, o.lo_), b = std::max(hi_, o.hi_);
  for (int i = a; i <= b; ++i) {
    if (known(i) != o.known(i)) return false;
    if (!known(i)) continue;
    for (int x = 0; x < alg_->num_vertices(); ++x)
      if (dim(i, x) != o.dim(i, x)) return false;
  }
  return true;
}

bool GradedModule::same_data(const GradedModule& o) const {
  if (!same_dims(o)) return false;
  const int a = std::min(lo_, o.lo_), b = std::max(hi_, o.hi_);
  for (int i = a; i < b; ++i) {
    if (!known(i) || !known(i + 1)) continue;
    for (int ar = 0; ar < alg_->quiver().num_arrows(); ++ar)
      if (!(map(ar, i) == o.map(ar, i))) return false;
  }
  return true;
}

GradedMorphism::GradedMorphism(ModPtr s, ModPtr t) : src(std::move(s)), tgt(std::move(t)) {
  if (src->algebra() != tgt->algebra()) throw InputError("morphism between modules over different algebras");
  const int n = src->algebra()->num_vertices();
  f.resize(src->hi() - src->lo() + 1);
  for (int i = src->lo(); i <= src->hi(); ++i) {
    auto& row = f[i - src->lo()];
    for (int x = 0; x < n; ++x) {
      const int c = src->dim(i, x);
      if (!tgt->known(i)) {
        if (c != 0) tgt->require_known(i, "morphism target");
        row.emplace_back(src->field(), 0, 0);
      } else {
        row.emplace_back(src->field(), tgt->dim(i, x), c);
      }
    }
  }
}

Matrix GradedMorphism::at(int i, int x) const {
  if (i < src->lo() || i > src->hi())
    return Matrix(src->field(), tgt->known(i) ? tgt->dim(i, x) : 0, 0);
  return f[i - src->lo()][x];
}

void GradedMorphism::set(int i, int x, Matrix m) {
  if (i < src->lo() || i > src->hi()) {
    if (m.is_zero()) return;
    throw InternalError("morphism piece outside source window");
  }
  Matrix& slot = f[i - src->lo()][x];
  if (m.rows() != slot.rows() || m.cols() != slot.cols())
    throw InternalError("morphism piece shape mismatch at degree " + std::to_string(i));
  slot = std::move(m);
}

bool GradedMorphism::is_zero() const {
  for (const auto& row : f)
    for (const auto& m : row)
      if (!m.is_zero()) return false;
  return true;
}

ValidationReport validate(const GradedModule& m) {
  ValidationReport r;
  const AlgebraPtr& alg = m.algebra();
  const auto& rels = alg->relations();
  for (std::size_t k = 0; k < rels.size(); ++k) {
    const Relation& rel = rels[k];
    for (int i = m.lo(); i + rel.degree <= m.hi(); ++i) {
      Matrix acc(m.field(), m.dim(i + rel.degree, rel.target), m.dim(i, rel.source));
      for (std::size_t p = 0; p < rel.paths.size(); ++p)
        acc = acc + m.act(rel.paths[p], i).scaled(rel.coeffs[p]);
      if (!acc.is_zero()) {
        r.ok = false;
        r.relation = static_cast<int>(k);
        r.degree = i;
        std::string desc;
        for (std::size_t p = 0; p < rel.paths.size(); ++p)
          desc += (p ? " + " : "") + rel.coeffs[p].to_string() + "*" + alg->quiver().path_name(rel.paths[p]);
        r.message = "relation " + std::to_string(k) + " (" + desc + ") does not annihilate degree " +
                    std::to_string(i);
        return r;
      }
    }
  }
  return r;
}

void require_valid(const GradedModule& m) {
  ValidationReport r = validate(m);
  if (!r.ok) throw InputError(r.message);
}

ModPtr shift(const ModPtr& m, int s) {
  auto out = std::make_shared<GradedModule>(m->algebra(), m->lo() - s, m->hi() - s,
                                            m->truncated_below(), m->truncated_above());
  const int n = m->algebra()->num_vertices();
  for (int i = m->lo(); i <= m->hi(); ++i)
    for (int x = 0; x < n; ++x) out->set_dim(i - s, x, m->dim(i, x));
  for (int i = m->lo(); i < m->hi(); ++i)
    for (int a = 0; a < m->algebra()->quiver().num_arrows(); ++a) out->set_map(a, i - s, m->map(a, i));
  if (m->top_zero_from) out->top_zero_from = *m->top_zero_from - s;
  return out;
}

ModPtr zero_module(const AlgebraPtr& alg) { return std::make_shared<GradedModule>(alg, 0, -1); }

namespace {

struct SumLayout {
  int lo, hi;
  bool tb, ta;
};

SumLayout sum_layout(const std::vector<ModPtr>& parts) {
  SumLayout l{kUnbounded, -kUnbounded, false, false};
  int tb_lo = -kUnbounded, ta_hi = kUnbounded;
  for (const auto& p : parts) {
    if (p->hi() < p->lo() && p->exact()) continue;
    l.lo = std::min(l.lo, p->lo());
    l.hi = std::max(l.hi, p->hi());
    if (p->truncated_below()) {
      l.tb = true;
      tb_lo = std::max(tb_lo, p->lo());
    }
    if (p->truncated_above()) {
      l.ta = true;
      ta_hi = std::min(ta_hi, p->hi());
    }
  }
  if (l.lo > l.hi) return {0, -1, false, false};
  if (l.tb) l.lo = tb_lo;
  if (l.ta) l.hi = ta_hi;
  if (l.hi < l.lo - 1) l.hi = l.lo - 1;
  return l;
}

int offset_in_sum(const std::vector<ModPtr>& parts, std::size_t k, int i, int x) {
  int off = 0;
  for (std::size_t j = 0; j < k; ++j) off += parts[j]->dim(i, x);
  return off;
}

}  // namespace

ModPtr direct_sum(const std::vector<ModPtr>& parts) {
  if (parts.empty()) throw InputError("direct sum of no modules needs an algebra");
  const AlgebraPtr& alg = parts[0]->algebra();
  for (const auto& p : parts)
    if (p->algebra() != alg) throw InputError("direct sum of modules over different algebras");
  SumLayout l = sum_layout(parts);
  auto out = std::make_shared<GradedModule>(alg, l.lo, l.hi, l.tb, l.ta);
  const int n = alg->num_vertices();
  for (int i = l.lo; i <= l.hi; ++i)
    for (int x = 0; x < n; ++x) {
      int d = 0;
      for (const auto& p : parts) d += p->dim(i, x);
      out->set_dim(i, x, d);
    }
  const Quiver& q = alg->quiver();
  for (int i = l.lo; i < l.hi; ++i)
    for (int a = 0; a < q.num_arrows(); ++a) {
      Matrix m(alg->field(), out->dim(i + 1, q.arrow(a).to), out->dim(i, q.arrow(a).from));
      int r = 0, c = 0;
      for (const auto& p : parts) {
        Matrix b = p->map(a, i);
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
      }
      out->set_map(a, i, std::move(m));
    }
  if (l.ta) {
    int cert = -kUnbounded;
    bool ok = true;
    for (const auto& p : parts) {
      if (p->truncated_above()) {
        if (!p->top_zero_from) ok = false;
        else cert = std::max(cert, *p->top_zero_from);
      } else if (auto md = p->max_degree()) {
        cert = std::max(cert, *md + 1);
      }
    }
    if (ok) out->top_zero_from = cert;
  }
  return out;
}

std::vector<GradedMorphism> sum_inclusions(const ModPtr& sum, const std::vector<ModPtr>& parts) {
  std::vector<GradedMorphism> out;
  const int n = sum->algebra()->num_vertices();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    GradedMorphism inc(parts[k], sum);
    for (int i = parts[k]->lo(); i <= parts[k]->hi(); ++i) {
      if (!sum->known(i)) continue;
      for (int x = 0; x < n; ++x) {
        Matrix m = inc.at(i, x);
        const int off = offset_in_sum(parts, k, i, x);
        for (int c = 0; c < m.cols(); ++c) m(off + c, c) = Scalar::one(sum->field());
        inc.set(i, x, std::move(m));
      }
    }
    out.push_back(std::move(inc));
  }
  return out;
}

std::vector<GradedMorphism> sum_projections(const ModPtr& sum, const std::vector<ModPtr>& parts) {
  std::vector<GradedMorphism> out;
  const int n = sum->algebra()->num_vertices();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    GradedMorphism pr(sum, parts[k]);
    for (int i = sum->lo(); i <= sum->hi(); ++i)
      for (int x = 0; x < n; ++x) {
        Matrix m = pr.at(i, x);
        const int off = offset_in_sum(parts, k, i, x);
        for (int r = 0; r < m.rows(); ++r) m(r, off + r) = Scalar::one(sum->field());
        pr.set(i, x, std::move(m));
      }
    out.push_back(std::move(pr));
  }
  return out;
}

ModPtr restrict_window(const ModPtr& m, int lo, int hi) {
  const int nlo = std::max(lo, m->lo()), nhi = std::min(hi, m->hi());
  const bool tb = m->truncated_below() || nlo > m->lo();
  const bool ta = m->truncated_above() || nhi < m->hi();
  auto out = std::make_shared<GradedModule>(m->algebra(), nlo, std::max(nhi, nlo - 1), tb, ta);
  const int n = m->algebra()->num_vertices();
  for (int i = nlo; i <= nhi; ++i)
    for (int x = 0; x < n; ++x) out->set_dim(i, x, m->dim(i, x));
  for (int i = nlo; i < nhi; ++i)
    for (int a = 0; a < m->algebra()->quiver().num_arrows(); ++a) out->set_map(a, i, m->map(a, i));
  if (ta) out->top_zero_from = m->top_zero_from ? m->top_zero_from
                                                : (m->truncated_above() ? std::nullopt
                                                                        : std::optional<int>(m->hi() + 1));
  return out;
}

ModPtr dual(const ModPtr& m) {
  if (!m->exact())
    throw PreconditionError("duality needs an exact window: the dual of a truncation is not the truncation of the dual");
  AlgebraPtr op = m->algebra()->opposite();
  auto out = std::make_shared<GradedModule>(op, -m->hi(), -m->lo());
  const int n = op->num_vertices();
  for (int i = m->lo(); i <= m->hi(); ++i)
    for (int x = 0; x < n; ++x) out->set_dim(-i, x, m->dim(i, x));
  for (int i = -m->hi(); i < -m->lo(); ++i)
    for (int a = 0; a < op->quiver().num_arrows(); ++a) out->set_map(a, i, m->map(a, -i - 1).transpose());
  return out;
}

GradedMorphism dual(const GradedMorphism& f, const ModPtr& dsrc, const ModPtr& dtgt) {
  GradedMorphism g(dsrc, dtgt);
  const int n = dsrc->algebra()->num_vertices();
  for (int i = dsrc->lo(); i <= dsrc->hi(); ++i)
    for (int x = 0; x < n; ++x) g.set(i, x, f.at(-i, x).transpose());
  return g;
}

GradedMorphism dual(const GradedMorphism& f) { return dual(f, dual(f.tgt), dual(f.src)); }

SubModule submodule(const ModPtr& m, const PieceSpaces& spaces, int slo) {
  const int shi = slo + static_cast<int>(spaces.size()) - 1;
  const bool tb = m->truncated_below() || slo > m->lo();
  const bool ta = m->truncated_above() || shi < m->hi();
  auto sub = std::make_shared<GradedModule>(m->algebra(), slo, shi, tb, ta);
  const int n = m->algebra()->num_vertices();
  const Quiver& q = m->algebra()->quiver();
  for (int i = slo; i <= shi; ++i)
    for (int x = 0; x < n; ++x) sub->set_dim(i, x, spaces[i - slo][x].cols());
  for (int i = slo; i < shi; ++i)
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Arrow& ar = q.arrow(a);
      const Matrix& from = spaces[i - slo][ar.from];
      const Matrix& to = spaces[i + 1 - slo][ar.to];
      if (from.cols() == 0 || to.cols() == 0) {
        if (from.cols() > 0 && !(m->map(a, i) * from).is_zero())
          throw InternalError("subspace family is not closed under the action");
        continue;
      }
      auto x = solve(to, m->map(a, i) * from);
      if (!x) throw InternalError("subspace family is not closed under the action");
      sub->set_map(a, i, *x);
    }
  GradedMorphism inc(sub, m);
  for (int i = slo; i <= shi; ++i)
    for (int x = 0; x < n; ++x)
      if (spaces[i - slo][x].cols() > 0) inc.set(i, x, spaces[i - slo][x]);
  return {sub, inc};
}

SubModule submodule(const ModPtr& m, const PieceSpaces& spaces) { return submodule(m, spaces, m->lo()); }

QuotientModule quotient(const ModPtr& m, const PieceSpaces& spaces) {
  auto quo = std::make_shared<GradedModule>(m->algebra(), m->lo(), m->hi(), m->truncated_below(),
                                            m->truncated_above());
  const int n = m->algebra()->num_vertices();
  const Quiver& q = m->algebra()->quiver();
  const int w = m->hi() - m->lo() + 1;
  std::vector<std::vector<Matrix>> proj(w), sec(w);
  for (int i = m->lo(); i <= m->hi(); ++i)
    for (int x = 0; x < n; ++x) {
      const int d = m->dim(i, x);
      const Matrix& u = spaces[i - m->lo()][x];
      Matrix c = complement_units(u, d);
      Matrix full = Matrix::hstack(u, c);
      auto inv = inverse(full);
      if (!inv) throw InternalError("quotient: subspace basis is not independent");
      proj[i - m->lo()].push_back(inv->block(d - c.cols(), 0, c.cols(), d));
      sec[i - m->lo()].push_back(c);
      quo->set_dim(i, x, c.cols());
    }
  for (int i = m->lo(); i < m->hi(); ++i)
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Arrow& ar = q.arrow(a);
      quo->set_map(a, i, proj[i + 1 - m->lo()][ar.to] * m->map(a, i) * sec[i - m->lo()][ar.from]);
    }
  if (m->top_zero_from) quo->top_zero_from = m->top_zero_from;
  GradedMorphism p(m, quo);
  for (int i = m->lo(); i <= m->hi(); ++i)
    for (int x = 0; x < n; ++x) p.set(i, x, proj[i - m->lo()][x]);
  return {quo, p, sec};
}

SubModule radical(const ModPtr& m) {
  const int slo = m->truncated_below() ? m->lo() + 1 : m->lo();
  const int n = m->algebra()->num_vertices();
  const Quiver& q = m->algebra()->quiver();
  PieceSpaces spaces;
  for (int i = slo; i <= m->hi(); ++i) {
    std::vector<Matrix> row;
    for (int y = 0; y < n; ++y) {
      Matrix acc(m->field(), m->dim(i, y), 0);
      for (int a : q.arrows_in(y)) acc = Matrix::hstack(acc, m->map(a, i - 1));
      row.push_back(column_basis(acc));
    }
    spaces.push_back(std::move(row));
  }
  return submodule(m, spaces, slo);
}

SubModule socle(const ModPtr& m) {
  const int shi = m->truncated_above() ? m->hi() - 1 : m->hi();
  const int n = m->algebra()->num_vertices();
  const Quiver& q = m->algebra()->quiver();
  PieceSpaces spaces;
  for (int i = m->lo(); i <= shi; ++i) {
    std::vector<Matrix> row;
    for (int x = 0; x < n; ++x) {
      Matrix acc(m->field(), 0, m->dim(i, x));
      for (int a : q.arrows_out(x)) acc = Matrix::vstack(acc, m->map(a, i));
      row.push_back(kernel(acc));
    }
    spaces.push_back(std::move(row));
  }
  return submodule(m, spaces, m->lo());
}

QuotientModule top(const ModPtr& m) {
  if (m->truncated_below())
    throw WindowError("top needs the module exact below its window", m->lo() - 1);
  SubModule r = radical(m);
  const int n = m->algebra()->num_vertices();
  PieceSpaces spaces;
  for (int i = m->lo(); i <= m->hi(); ++i) {
    std::vector<Matrix> row;
    for (int x = 0; x < n; ++x) row.push_back(r.inclusion.at(i, x));
    spaces.push_back(std::move(row));
  }
  return quotient(m, spaces);
}

Classification classify(const GradedModule& m) {
  if (!m.exact()) throw PreconditionError("classify needs an exact window");
  Classification c;
  c.semisimple = true;
  for (int i = m.lo(); i < m.hi(); ++i)
    for (int a = 0; a < m.algebra()->quiver().num_arrows(); ++a)
      if (!m.map(a, i).is_zero()) c.semisimple = false;
  if (c.semisimple)
    for (int i = m.lo(); i <= m.hi(); ++i)
      for (int x = 0; x < m.algebra()->num_vertices(); ++x)
        if (m.dim(i, x) > 0) c.parts.push_back({x, -i, m.dim(i, x)});
  c.simple = m.total_dim() == 1;
  return c;
}

ModPtr standard(const AlgebraPtr& alg, StandardKind kind, int a, int s,
                std::optional<std::pair<int, int>> window, int cap) {
  if (a < 0 || a >= alg->num_vertices()) throw InputError("standard module: unknown vertex");
  const int n = alg->num_vertices();
  const Quiver& q = alg->quiver();
  auto left_total = [&](int d) {
    int t = 0;
    for (int x = 0; x < n; ++x) t += alg->dim(d, a, x);
    return t;
  };
  auto right_total = [&](int d) {
    int t = 0;
    for (int x = 0; x < n; ++x) t += alg->dim(d, x, a);
    return t;
  };

  if (kind == StandardKind::S) {
    auto [lo, hi] = window.value_or(std::make_pair(-s, -s));
    const bool inside = lo <= -s && -s <= hi;
    auto m = std::make_shared<GradedModule>(alg, lo, hi, !inside && -s < lo, !inside && -s > hi);
    if (inside) m->set_dim(-s, a, 1);
    return m;
  }

  if (kind == StandardKind::P) {
    int lo, hi;
    if (window) {
      lo = window->first;
      hi = window->second;
    } else {
      auto d = alg->left_vanishing_degree(a, cap);
      lo = -s;
      hi = d ? -s + *d - 1 : -s + cap;
    }
    const bool tb = lo > -s;
    const bool ta = left_total(hi + 1 + s) > 0;
    auto m = std::make_shared<GradedModule>(alg, lo, hi, tb, ta);
    for (int i = lo; i <= hi; ++i)
      for (int x = 0; x < n; ++x) m->set_dim(i, x, alg->dim(i + s, a, x));
    for (int i = lo; i < hi; ++i)
      for (int ar = 0; ar < q.num_arrows(); ++ar)
        m->set_map(ar, i, alg->left_mult(alg->arrow(ar), i + s, a));
    if (ta) m->top_zero_from = -s + 1;
    return m;
  }

  int lo, hi;
  if (window) {
    lo = window->first;
    hi = window->second;
  } else {
    auto d = alg->right_vanishing_degree(a, cap);
    hi = -s;
    lo = d ? -s - *d + 1 : -s - cap;
  }
  const bool ta = hi < -s;
  const bool tb = right_total(-lo + 1 - s) > 0;
  auto m = std::make_shared<GradedModule>(alg, lo, hi, tb, ta);
  for (int i = lo; i <= hi; ++i)
    for (int x = 0; x < n; ++x) m->set_dim(i, x, alg->dim(-i - s, x, a));
  for (int i = lo; i < hi; ++i)
    for (int ar = 0; ar < q.num_arrows(); ++ar) {
      const int j = -i - s;
      if (j - 1 < 0) continue;
      m->set_map(ar, i, alg->right_mult(alg->arrow(ar), j - 1, a).transpose());
    }
  return m;
}

GradedMorphism identity(const ModPtr& m) {
  GradedMorphism id(m, m);
  for (int i = m->lo(); i <= m->hi(); ++i)
    for (int x = 0; x < m->algebra()->num_vertices(); ++x)
      id.set(i, x, Matrix::identity(m->field(), m->dim(i, x)));
  return id;
}

GradedMorphism compose(const GradedMorphism& g, const GradedMorphism& f) {
  if (f.tgt.get() != g.src.get() && !f.tgt->same_data(*g.src))
    throw InternalError("compose: middle modules differ");
  GradedMorphism h(f.src, g.tgt);
  for (int i = f.src->lo(); i <= f.src->hi(); ++i)
    for (int x = 0; x < f.src->algebra()->num_vertices(); ++x) {
      if (f.src->dim(i, x) == 0) continue;
      h.set(i, x, g.at(i, x) * f.at(i, x));
    }
  return h;
}

GradedMorphism add(const GradedMorphism& a, const GradedMorphism& b) {
  GradedMorphism h(a.src, a.tgt);
  for (int i = a.src->lo(); i <= a.src->hi(); ++i)
    for (int x = 0; x < a.src->algebra()->num_vertices(); ++x) h.set(i, x, a.at(i, x) + b.at(i, x));
  return h;
}

GradedMorphism scale(const GradedMorphism& a, const Scalar& s) {
  GradedMorphism h(a.src, a.tgt);
  for (int i = a.src->lo(); i <= a.src->hi(); ++i)
    for (int x = 0; x < a.src->algebra()->num_vertices(); ++x) h.set(i, x, a.at(i, x).scaled(s));
  return h;
}

bool is_natural(const GradedMorphism& f) {
  const GradedModule& m = *f.src;
  const GradedModule& n = *f.tgt;
  const Quiver& q = m.algebra()->quiver();
  for (int i = m.lo() - 1; i <= m.hi(); ++i) {
    if (!m.known(i) || !m.known(i + 1) || !n.known(i) || !n.known(i + 1)) continue;
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Arrow& ar = q.arrow(a);
      if (!(n.map(a, i) * f.at(i, ar.from) == f.at(i + 1, ar.to) * m.map(a, i))) return false;
    }
  }
  return true;
}

bool is_injective(const GradedMorphism& f) {
  for (int i = f.src->lo(); i <= f.src->hi(); ++i)
    for (int x = 0; x < f.src->algebra()->num_vertices(); ++x) {
      Matrix m = f.at(i, x);
      if (rank(m) != m.cols()) return false;
    }
  return true;
}

bool is_surjective(const GradedMorphism& f) {
  const GradedModule& t = *f.tgt;
  for (int i = t.lo(); i <= t.hi(); ++i) {
    if (!f.src->known(i)) return false;
    for (int x = 0; x < t.algebra()->num_vertices(); ++x) {
      Matrix m = f.at(i, x);
      if (rank(m) != t.dim(i, x)) return false;
    }
  }
  return true;
}

bool is_isomorphism(const GradedMorphism& f) {
  if (!f.src->same_dims(*f.tgt)) return false;
  return is_injective(f) && is_surjective(f);
}

GradedMorphism stack_into(const ModPtr& sum, const std::vector<GradedMorphism>& parts) {
  const ModPtr& x = parts.at(0).src;
  GradedMorphism h(x, sum);
  for (int i = x->lo(); i <= x->hi(); ++i)
    for (int v = 0; v < x->algebra()->num_vertices(); ++v) {
      Matrix m = h.at(i, v);
      int r = 0;
      for (const auto& p : parts) {
        Matrix b = p.at(i, v);
        m.set_block(r, 0, b);
        r += b.rows();
      }
      h.set(i, v, std::move(m));
    }
  return h;
}

GradedMorphism stack_from(const ModPtr& sum, const std::vector<GradedMorphism>& parts) {
  const ModPtr& y = parts.at(0).tgt;
  GradedMorphism h(sum, y);
  for (int i = sum->lo(); i <= sum->hi(); ++i)
    for (int v = 0; v < sum->algebra()->num_vertices(); ++v) {
      Matrix m = h.at(i, v);
      int c = 0;
      for (const auto& p : parts) {
        Matrix b = p.at(i, v);
        m.set_block(0, c, b);
        c += b.cols();
      }
      h.set(i, v, std::move(m));
    }
  return h;
}

SubModule kernel(const GradedMorphism& f) {
  const ModPtr& m = f.src;
  PieceSpaces spaces;
  for (int i = m->lo(); i <= m->hi(); ++i) {
    std::vector<Matrix> row;
    for (int x = 0; x < m->algebra()->num_vertices(); ++x) row.push_back(kernel(f.at(i, x)));
    spaces.push_back(std::move(row));
  }
  return submodule(m, spaces, m->lo());
}

SubModule image(const GradedMorphism& f) {
  const ModPtr& m = f.src;
  PieceSpaces spaces;
  for (int i = m->lo(); i <= m->hi(); ++i) {
    std::vector<Matrix> row;
    for (int x = 0; x < m->algebra()->num_vertices(); ++x) row.push_back(column_basis(f.at(i, x)));
    spaces.push_back(std::move(row));
  }
  return submodule(f.tgt, spaces, m->lo());
}

QuotientModule cokernel(const GradedMorphism& f) {
  ModPtr t = f.tgt;
  const ModPtr& s = f.src;
  int lo = t->lo(), hi = t->hi();
  if (s->truncated_above() && s->hi() < hi) hi = s->hi();
  if (s->truncated_below() && s->lo() > lo) lo = s->lo();
  if (lo != t->lo() || hi != t->hi()) t = restrict_window(t, lo, hi);
  PieceSpaces spaces;
  for (int i = t->lo(); i <= t->hi(); ++i) {
    std::vector<Matrix> row;
    for (int x = 0; x < t->algebra()->num_vertices(); ++x) {
      if (s->known(i) && i >= s->lo() && i <= s->hi())
        row.push_back(column_basis(f.at(i, x)));
      else
        row.push_back(Matrix(t->field(), t->dim(i, x), 0));
    }
    spaces.push_back(std::move(row));
  }
  return quotient(t, spaces);
}

GradedMorphism induced_from_quotient(const QuotientModule& q, const GradedMorphism& h) {
  GradedMorphism g(q.module, h.tgt);
  const ModPtr& m = q.module;
  for (int i = m->lo(); i <= m->hi(); ++i)
    for (int x = 0; x < m->algebra()->num_vertices(); ++x)
      g.set(i, x, h.at(i, x) * q.section[i - m->lo()][x]);
  return g;
}

GradedMorphism factor_through_mono(const GradedMorphism& f, const GradedMorphism& i) {
  GradedMorphism g(f.src, i.src);
  const ModPtr& m = f.src;
  for (int d = m->lo(); d <= m->hi(); ++d)
    for (int x = 0; x < m->algebra()->num_vertices(); ++x) {
      if (m->dim(d, x) == 0) continue;
      auto y = solve(i.at(d, x), f.at(d, x));
      if (!y) throw InternalError("morphism does not factor through the given monomorphism");
      g.set(d, x, *y);
    }
  return g;
}

std::pair<int, int> common_degrees(const GradedModule& a, const GradedModule& b) {
  auto lower = [](const GradedModule& m) {
    if (m.truncated_below()) return -kUnbounded;
    if (auto d = m.min_degree()) return *d;
    return m.truncated_above() ? m.hi() + 1 : kUnbounded;
  };
  auto upper = [](const GradedModule& m) {
    if (m.truncated_above()) return kUnbounded;
    if (auto d = m.max_degree()) return *d;
    return m.truncated_below() ? m.lo() - 1 : -kUnbounded;
  };
  return {std::max(lower(a), lower(b)), std::min(upper(a), upper(b))};
}

}  // namespace gradrep
