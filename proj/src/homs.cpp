#include "gradrep/homs.hpp"

#include <map>
#include <random>

#include "gradrep/error.hpp"

namespace gradrep {

std::vector<Scalar> HomSpace::flatten(const GradedMorphism& f) const {
  std::vector<Scalar> v(flat_size, Scalar::zero(src->field()));
  for (const Slot& s : slots) {
    Matrix m = f.at(s.degree, s.vertex);
    for (int r = 0; r < s.rows; ++r)
      for (int c = 0; c < s.cols; ++c) v[s.offset + r * s.cols + c] = m(r, c);
  }
  return v;
}

std::optional<std::vector<Scalar>> HomSpace::coordinates(const GradedMorphism& f) const {
  if (dim() == 0) {
    if (!f.is_zero()) return std::nullopt;
    return std::vector<Scalar>{};
  }
  auto x = solve(flat_basis, Matrix::column_vector(flatten(f), src->field()));
  if (!x) return std::nullopt;
  return x->column_values(0);
}

GradedMorphism HomSpace::combine(const std::vector<Scalar>& c) const {
  GradedMorphism g(src, tgt);
  for (const Slot& s : slots) {
    Matrix m(src->field(), s.rows, s.cols);
    for (int k = 0; k < flat_basis.cols(); ++k) {
      if (c[k].is_zero()) continue;
      for (int r = 0; r < s.rows; ++r)
        for (int col = 0; col < s.cols; ++col) {
          const Scalar& b = flat_basis(s.offset + r * s.cols + col, k);
          if (!b.is_zero()) m(r, col) += c[k] * b;
        }
    }
    g.set(s.degree, s.vertex, std::move(m));
  }
  return g;
}

HomSpace ghom(const ModPtr& m, const ModPtr& n) {
  if (m->algebra() != n->algebra()) throw InputError("Hom between modules over different algebras");
  HomSpace h;
  h.src = m;
  h.tgt = n;
  const Field f = m->field();
  auto [dlo, dhi] = common_degrees(*m, *n);
  if (dlo > dhi) {
    h.flat_basis = Matrix(f, 0, 0);
    return h;
  }
  if (dlo <= -kUnbounded || dhi >= kUnbounded)
    throw WindowError("Hom needs a bounded overlap of supports; both modules are truncated on the same side",
                      dlo <= -kUnbounded ? std::min(m->lo(), n->lo()) : std::max(m->hi(), n->hi()));
  for (int i = dlo - 1; i <= dhi + 1; ++i) {
    m->require_known(i, "Hom source");
    n->require_known(i, "Hom target");
  }

  const int nv = m->algebra()->num_vertices();
  std::map<std::pair<int, int>, int> slot_of;
  for (int d = dlo; d <= dhi; ++d)
    for (int x = 0; x < nv; ++x) {
      const int r = n->dim(d, x), c = m->dim(d, x);
      if (r == 0 || c == 0) continue;
      slot_of[{d, x}] = static_cast<int>(h.slots.size());
      h.slots.push_back({d, x, r, c, h.flat_size});
      h.flat_size += r * c;
    }

  const Quiver& q = m->algebra()->quiver();
  std::vector<std::vector<std::pair<int, Scalar>>> eqs;
  for (int i = dlo - 1; i <= dhi; ++i)
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Arrow& ar = q.arrow(a);
      auto s0 = slot_of.find({i, ar.from});
      auto s1 = slot_of.find({i + 1, ar.to});
      if (s0 == slot_of.end() && s1 == slot_of.end()) continue;
      const int rows = n->dim(i + 1, ar.to), cols = m->dim(i, ar.from);
      if (rows == 0 || cols == 0) continue;
      Matrix na = n->map(a, i), ma = m->map(a, i);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
          std::vector<std::pair<int, Scalar>> row;
          if (s0 != slot_of.end()) {
            const auto& sl = h.slots[s0->second];
            for (int k = 0; k < sl.rows; ++k)
              if (!na(r, k).is_zero()) row.emplace_back(sl.offset + k * sl.cols + c, na(r, k));
          }
          if (s1 != slot_of.end()) {
            const auto& sl = h.slots[s1->second];
            for (int k = 0; k < sl.cols; ++k)
              if (!ma(k, c).is_zero()) row.emplace_back(sl.offset + r * sl.cols + k, -ma(k, c));
          }
          if (!row.empty()) eqs.push_back(std::move(row));
        }
    }

  Matrix sys(f, static_cast<int>(eqs.size()), h.flat_size);
  for (std::size_t r = 0; r < eqs.size(); ++r)
    for (const auto& [col, v] : eqs[r]) sys(static_cast<int>(r), col) += v;
  h.flat_basis = h.flat_size ? kernel(sys) : Matrix(f, 0, 0);
  for (int k = 0; k < h.flat_basis.cols(); ++k) {
    std::vector<Scalar> c(h.flat_basis.cols(), Scalar::zero(f));
    c[k] = Scalar::one(f);
    h.basis.push_back(h.combine(c));
  }
  return h;
}

HomSpace ghom_to_injective(const ModPtr& m, int a, int s) {
  ModPtr inj = standard(m->algebra(), StandardKind::I, a, s);
  if (inj->truncated_below() && m->lo() - 1 < inj->lo())
    inj = standard(m->algebra(), StandardKind::I, a, s, std::make_pair(m->lo() - 1, -s));
  return ghom(m, inj);
}

GradedMorphism functional_to_injective(const ModPtr& m, const ModPtr& injective, int a, int s,
                                       const Matrix& psi) {
  const AlgebraPtr& alg = m->algebra();
  GradedMorphism g(m, injective);
  for (int d = m->lo(); d <= m->hi(); ++d)
    for (int x = 0; x < alg->num_vertices(); ++x) {
      const int cols = m->dim(d, x);
      const int j = -d - s;
      if (cols == 0 || j < 0) continue;
      const int rows = alg->dim(j, x, a);
      Matrix piece(m->field(), rows, cols);
      for (int k = 0; k < rows; ++k) {
        Matrix row = psi * m->act(alg->basis_element(j, x, a, k), d);
        for (int c = 0; c < cols; ++c) piece(k, c) = row(0, c);
      }
      g.set(d, x, std::move(piece));
    }
  return g;
}

std::vector<Scalar> EndAlgebra::product(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
  const Field f = hom.src->field();
  std::vector<Scalar> out(dim(), Scalar::zero(f));
  for (int i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      const Scalar c = a[i] * b[j];
      for (int k = 0; k < dim(); ++k)
        if (!structure[i][j][k].is_zero()) out[k] += c * structure[i][j][k];
    }
  }
  return out;
}

Matrix EndAlgebra::left_mult(const std::vector<Scalar>& a) const {
  const Field f = hom.src->field();
  Matrix l(f, dim(), dim());
  for (int j = 0; j < dim(); ++j) {
    std::vector<Scalar> e(dim(), Scalar::zero(f));
    e[j] = Scalar::one(f);
    auto p = product(a, e);
    for (int k = 0; k < dim(); ++k) l(k, j) = p[k];
  }
  return l;
}

std::vector<GradedMorphism> EndAlgebra::radical_basis() const {
  std::vector<GradedMorphism> out;
  for (int c = 0; c < radical.cols(); ++c) out.push_back(hom.combine(radical.column_values(c)));
  return out;
}

EndAlgebra end_algebra(const ModPtr& m) {
  if (!m->exact()) throw PreconditionError("endomorphism algebra needs an exact window");
  EndAlgebra e;
  e.hom = ghom(m, m);
  const Field f = m->field();
  const int n = e.hom.dim();
  e.identity = e.hom.coordinates(identity(m)).value();
  e.structure.assign(n, std::vector<std::vector<Scalar>>(n));
  if (n > 0) {
    Matrix prods(f, e.hom.flat_size, n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto v = e.hom.flatten(compose(e.hom.basis[i], e.hom.basis[j]));
        for (int r = 0; r < e.hom.flat_size; ++r) prods(r, i * n + j) = v[r];
      }
    auto coords = solve(e.hom.flat_basis, prods);
    if (!coords) throw InternalError("End(M) is not closed under composition");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) e.structure[i][j] = coords->column_values(i * n + j);
  }

  if (n <= 1) {
    e.radical = Matrix(f, n, 0);
    return e;
  }
  if (f.characteristic() != 0 && f.characteristic() <= static_cast<std::uint32_t>(n))
    throw UnsupportedRadical("radical of End(M) by the trace form needs characteristic 0 or p > dim End = " +
                             std::to_string(n));
  std::vector<Scalar> tr(n, Scalar::zero(f));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) tr[k] += e.structure[k][j][j];
  Matrix t(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!e.structure[i][j][k].is_zero()) t(i, j) += e.structure[i][j][k] * tr[k];
  e.radical = kernel(t);

  Matrix power = e.radical;
  for (int step = 0; power.cols() > 0; ++step) {
    if (step > n) throw InternalError("trace-form radical is not nilpotent");
    Matrix next(f, n, 0);
    for (int a = 0; a < power.cols(); ++a)
      for (int b = 0; b < e.radical.cols(); ++b)
        next = Matrix::hstack(next, Matrix::column_vector(
                                        e.product(power.column_values(a), e.radical.column_values(b)), f));
    power = next.cols() ? column_basis(next) : next;
  }
  return e;
}

std::string IndecVerdict::label() const {
  switch (kind) {
    case Kind::Yes: return "yes";
    case Kind::No: return "no";
    default: return "presumed";
  }
}

namespace {

std::vector<std::vector<Scalar>> candidate_combinations(int n, Field f, int budget, std::uint64_t seed) {
  std::vector<std::vector<Scalar>> out;
  auto unit = [&](int i) {
    std::vector<Scalar> v(n, Scalar::zero(f));
    v[i] = Scalar::one(f);
    return v;
  };
  for (int i = 0; i < n; ++i) out.push_back(unit(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto v = unit(i);
      v[j] = Scalar::one(f);
      out.push_back(v);
    }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int t = 0; t < budget; ++t) {
    std::vector<Scalar> v;
    for (int i = 0; i < n; ++i) v.push_back(Scalar::from_int(f, coef(rng)));
    out.push_back(v);
  }
  return out;
}

// Minimal polynomial of `a` inside End(M), as coefficients c_0..c_d (monic).
std::vector<Scalar> minimal_polynomial(const EndAlgebra& e, const std::vector<Scalar>& a) {
  const Field f = e.hom.src->field();
  std::vector<std::vector<Scalar>> powers{e.identity};
  while (true) {
    std::vector<Scalar> next = e.product(a, powers.back());
    Matrix basis(f, e.dim(), static_cast<int>(powers.size()));
    for (std::size_t k = 0; k < powers.size(); ++k)
      for (int r = 0; r < e.dim(); ++r) basis(r, static_cast<int>(k)) = powers[k][r];
    auto x = solve(basis, Matrix::column_vector(next, f));
    if (x) {
      std::vector<Scalar> c;
      for (int k = 0; k < x->rows(); ++k) c.push_back(-(*x)(k, 0));
      c.push_back(Scalar::one(f));
      return c;
    }
    powers.push_back(std::move(next));
  }
}

Scalar eval_poly(const std::vector<Scalar>& c, const Scalar& x) {
  Scalar acc = Scalar::zero(x.field());
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<std::pair<mpz_class, int>> fac;
  for (mpz_class p = 2; p * p <= n && p < 1000000; ++p) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) fac.emplace_back(p, e);
  }
  if (n > 1) {
    if (n > mpz_class("1000000000000")) return {};
    fac.emplace_back(n, 1);
  }
  std::vector<mpz_class> ds{1};
  for (auto& [p, e] : fac) {
    std::size_t sz = ds.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

std::vector<Scalar> rational_roots(const std::vector<Scalar>& c, Field f) {
  std::vector<Scalar> roots;
  if (c.size() <= 1) return roots;
  if (!f.is_rational()) {
    if (f.modulus <= 65536) {
      for (std::uint32_t v = 0; v < f.modulus; ++v) {
        Scalar x = Scalar::from_int(f, v);
        if (eval_poly(c, x).is_zero()) roots.push_back(x);
      }
    } else {
      for (long v : {0L, 1L, -1L}) {
        Scalar x = Scalar::from_int(f, v);
        if (eval_poly(c, x).is_zero()) roots.push_back(x);
      }
    }
    return roots;
  }
  std::size_t low = 0;
  while (low < c.size() && c[low].is_zero()) ++low;
  if (low > 0) roots.push_back(Scalar::zero(f));
  if (c.size() - low <= 1) return roots;
  mpz_class l = 1;
  for (std::size_t k = low; k < c.size(); ++k)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c[k].rational().get_den_mpz_t());
  mpz_class a0 = c[low].rational().get_num() * (l / c[low].rational().get_den());
  mpz_class an = c.back().rational().get_num() * (l / c.back().rational().get_den());
  auto ps = divisors(a0), qs = divisors(an);
  for (const auto& p : ps)
    for (const auto& q : qs)
      for (int sign : {1, -1}) {
        Scalar x = Scalar::from_rational(f, mpq_class(sign * p, q));
        bool dup = false;
        for (const auto& r : roots) dup = dup || r == x;
        if (!dup && eval_poly(c, x).is_zero()) roots.push_back(x);
      }
  return roots;
}

// Projection onto Im(ψ^N) along Ker(ψ^N), or nullopt if one of them is zero.
std::optional<GradedMorphism> fitting_idempotent(const GradedMorphism& psi) {
  const ModPtr& m = psi.src;
  const int nv = m->algebra()->num_vertices();
  const int big = m->total_dim();
  GradedMorphism e(m, m);
  bool any_image = false, any_kernel = false;
  for (int d = m->lo(); d <= m->hi(); ++d)
    for (int x = 0; x < nv; ++x) {
      const int k = m->dim(d, x);
      if (k == 0) continue;
      Matrix p = Matrix::identity(m->field(), k);
      Matrix base = psi.at(d, x);
      for (int t = 0; t < big && t < k + 1; ++t) p = base * p;
      KernelImage ki = kernel_image(p);
      if (ki.rank > 0) any_image = true;
      if (ki.kernel.cols() > 0) any_kernel = true;
      Matrix basis = Matrix::hstack(ki.image, ki.kernel);
      auto inv = inverse(basis);
      if (!inv) throw InternalError("Fitting decomposition is not direct");
      Matrix diag(m->field(), k, k);
      for (int i = 0; i < ki.rank; ++i) diag(i, i) = Scalar::one(m->field());
      e.set(d, x, basis * diag * *inv);
    }
  if (!any_image || !any_kernel) return std::nullopt;
  return e;
}

}  // namespace

IndecVerdict is_strongly_indecomposable(const ModPtr& m, int budget, std::uint64_t seed) {
  IndecVerdict v;
  if (!m->exact()) throw PreconditionError("indecomposability test needs an exact window");
  if (m->total_dim() == 0) {
    v.kind = IndecVerdict::Kind::No;
    v.detail = "zero module";
    return v;
  }
  EndAlgebra e = end_algebra(m);
  v.end_dim = e.dim();
  v.radical_dim = e.radical_dim();
  if (e.dim() - e.radical_dim() == 1) {
    v.kind = IndecVerdict::Kind::Yes;
    v.detail = "End/rad End is one-dimensional";
    return v;
  }
  const Field f = m->field();
  for (const auto& c : candidate_combinations(e.dim(), f, budget, seed)) {
    ++v.tried;
    auto mu = minimal_polynomial(e, c);
    for (const Scalar& lambda : rational_roots(mu, f)) {
      std::vector<Scalar> shifted = c;
      for (int k = 0; k < e.dim(); ++k) shifted[k] -= lambda * e.identity[k];
      auto idem = fitting_idempotent(e.hom.combine(shifted));
      if (idem) {
        v.kind = IndecVerdict::Kind::No;
        v.idempotent = *idem;
        v.detail = "Fitting decomposition of an endomorphism at eigenvalue " + lambda.to_string();
        return v;
      }
    }
  }
  v.kind = IndecVerdict::Kind::Presumed;
  v.detail = "no splitting idempotent found after " + std::to_string(v.tried) + " candidates (seed " +
             std::to_string(seed) + ")";
  return v;
}

std::optional<GradedMorphism> find_isomorphism(const ModPtr& a, const ModPtr& b, int budget, std::uint64_t seed) {
  if (a->algebra() != b->algebra()) return std::nullopt;
  if (a->total_dim() != b->total_dim()) return std::nullopt;
  for (int i = std::min(a->lo(), b->lo()); i <= std::max(a->hi(), b->hi()); ++i)
    for (int x = 0; x < a->algebra()->num_vertices(); ++x)
      if (a->known(i) && b->known(i) && a->dim(i, x) != b->dim(i, x)) return std::nullopt;
  HomSpace h = ghom(a, b);
  if (h.dim() == 0) return a->total_dim() == 0 ? std::optional<GradedMorphism>(h.zero()) : std::nullopt;
  for (const auto& c : candidate_combinations(h.dim(), a->field(), budget, seed)) {
    GradedMorphism g = h.combine(c);
    if (is_isomorphism(g)) return g;
  }
  return std::nullopt;
}

}  // namespace gradrep
