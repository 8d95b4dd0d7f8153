#include "gradrep/algebra.hpp"

#include "gradrep/error.hpp"

namespace gradrep {

bool AlgElement::is_zero() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

bool Boundedness::left_bounded() const {
  for (const auto& v : left)
    if (!v.finite || v.frontier_ray) return false;
  return true;
}

bool Boundedness::right_bounded() const {
  for (const auto& v : right)
    if (!v.finite || v.frontier_ray) return false;
  return true;
}

bool Boundedness::left_unknown() const {
  bool any_cap = false;
  for (const auto& v : left) {
    if (v.frontier_ray) return false;
    if (!v.finite) any_cap = true;
  }
  return any_cap;
}

bool Boundedness::right_unknown() const {
  bool any_cap = false;
  for (const auto& v : right) {
    if (v.frontier_ray) return false;
    if (!v.finite) any_cap = true;
  }
  return any_cap;
}

GradedAlgebra::GradedAlgebra(Field field, Quiver quiver, std::vector<Relation> relations)
    : field_(field), quiver_(std::move(quiver)), relations_(std::move(relations)) {}

AlgebraPtr GradedAlgebra::create(Field field, Quiver quiver, std::vector<Relation> relations) {
  for (std::size_t r = 0; r < relations.size(); ++r) {
    Relation& rel = relations[r];
    const std::string tag = "relation " + std::to_string(r);
    if (rel.paths.empty()) throw InputError(tag + ": no paths");
    if (rel.paths.size() != rel.coeffs.size()) throw InputError(tag + ": paths/coeffs length mismatch");
    const int len = rel.paths[0].length();
    for (const Path& p : rel.paths)
      if (p.length() != len) throw InputError(tag + ": relation not homogeneous");
    if (len < 2) throw InputError(tag + ": relation not in (kQ+)^2");
    for (const Path& p : rel.paths)
      if (p.source != rel.paths[0].source || p.target != rel.paths[0].target)
        throw InputError(tag + ": paths are not parallel");
    for (const Scalar& c : rel.coeffs)
      if (!(c.field() == field)) throw InputError(tag + ": coefficient field mismatch");
    rel.degree = len;
    rel.source = rel.paths[0].source;
    rel.target = rel.paths[0].target;
  }
  return AlgebraPtr(new GradedAlgebra(field, std::move(quiver), std::move(relations)));
}

bool GradedAlgebra::is_path_algebra() const {
  for (const Relation& r : relations_) {
    std::map<std::vector<int>, Scalar> sum;
    for (std::size_t k = 0; k < r.paths.size(); ++k) {
      auto it = sum.find(r.paths[k].arrows);
      if (it == sum.end())
        sum.emplace(r.paths[k].arrows, r.coeffs[k]);
      else
        it->second += r.coeffs[k];
    }
    for (const auto& [p, c] : sum)
      if (!c.is_zero()) return false;
  }
  return true;
}

std::unique_ptr<GradedAlgebra::Piece> GradedAlgebra::build_piece(int i, int x, int y) const {
  auto pc = std::make_unique<Piece>();
  if (i < 0) {
    pc->reduce = Matrix(field_, 0, 0);
    pc->ideal = Matrix(field_, 0, 0);
    return pc;
  }
  pc->paths = quiver_.paths(i, x, y);
  const int np = static_cast<int>(pc->paths.size());
  for (int k = 0; k < np; ++k) pc->index.emplace(pc->paths[k].arrows, k);

  std::vector<std::vector<Scalar>> gens;
  auto fresh = [&]() { return std::vector<Scalar>(np, Scalar::zero(field_)); };
  if (i >= 2) {
    for (const Relation& r : relations_) {
      if (r.degree != i || r.source != x || r.target != y) continue;
      auto row = fresh();
      for (std::size_t k = 0; k < r.paths.size(); ++k) row[pc->index.at(r.paths[k].arrows)] += r.coeffs[k];
      gens.push_back(std::move(row));
    }
  }
  if (i >= 3) {
    for (int a : quiver_.arrows_in(y)) {
      const Piece& sub = piece(i - 1, x, quiver_.arrow(a).from);
      for (int r = 0; r < sub.ideal.rows(); ++r) {
        auto row = fresh();
        for (int c = 0; c < sub.ideal.cols(); ++c) {
          if (sub.ideal(r, c).is_zero()) continue;
          std::vector<int> seq{a};
          seq.insert(seq.end(), sub.paths[c].arrows.begin(), sub.paths[c].arrows.end());
          row[pc->index.at(seq)] += sub.ideal(r, c);
        }
        gens.push_back(std::move(row));
      }
    }
    for (int a : quiver_.arrows_out(x)) {
      const Piece& sub = piece(i - 1, quiver_.arrow(a).to, y);
      for (int r = 0; r < sub.ideal.rows(); ++r) {
        auto row = fresh();
        for (int c = 0; c < sub.ideal.cols(); ++c) {
          if (sub.ideal(r, c).is_zero()) continue;
          std::vector<int> seq = sub.paths[c].arrows;
          seq.push_back(a);
          row[pc->index.at(seq)] += sub.ideal(r, c);
        }
        gens.push_back(std::move(row));
      }
    }
  }

  Matrix g(field_, static_cast<int>(gens.size()), np);
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (int c = 0; c < np; ++c) g(static_cast<int>(r), c) = gens[r][c];
  RrefResult rr = rref(g);
  pc->ideal = rr.reduced;
  std::vector<int> row_of(np, -1);
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) row_of[rr.pivots[r]] = static_cast<int>(r);
  std::vector<int> coord_of(np, -1);
  for (int c = 0; c < np; ++c)
    if (row_of[c] < 0) {
      coord_of[c] = static_cast<int>(pc->basis.size());
      pc->basis.push_back(c);
    }
  pc->reduce = Matrix(field_, static_cast<int>(pc->basis.size()), np);
  for (int c = 0; c < np; ++c) {
    if (row_of[c] < 0) {
      pc->reduce(coord_of[c], c) = Scalar::one(field_);
    } else {
      for (int b : pc->basis) {
        const Scalar& v = rr.reduced(row_of[c], b);
        if (!v.is_zero()) pc->reduce(coord_of[b], c) = -v;
      }
    }
  }
  return pc;
}

const GradedAlgebra::Piece& GradedAlgebra::piece(int i, int x, int y) const {
  if (x < 0 || x >= num_vertices() || y < 0 || y >= num_vertices())
    throw InputError("piece: unknown vertex index");
  const auto key = std::make_tuple(i < 0 ? -1 : i, x, y);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = pieces_.find(key);
    if (it != pieces_.end()) return *it->second;
  }
  auto built = build_piece(i < 0 ? -1 : i, x, y);
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = pieces_.emplace(key, std::move(built));
  return *it->second;
}

int GradedAlgebra::dim(int i, int x, int y) const { return i < 0 ? 0 : piece(i, x, y).dim(); }

Path GradedAlgebra::basis_path(int i, int x, int y, int k) const {
  const Piece& p = piece(i, x, y);
  return p.paths.at(p.basis.at(k));
}

AlgElement GradedAlgebra::zero(int degree, int source, int target) const {
  return AlgElement{degree, source, target,
                    std::vector<Scalar>(dim(degree, source, target), Scalar::zero(field_))};
}

AlgElement GradedAlgebra::idempotent(int x) const { return element(quiver_.trivial(x)); }

AlgElement GradedAlgebra::arrow(int a) const {
  const Arrow& ar = quiver_.arrow(a);
  return element(Path{ar.from, ar.to, {a}});
}

std::vector<Scalar> GradedAlgebra::normal_form(const Path& p) const {
  const Piece& pc = piece(p.length(), p.source, p.target);
  auto it = pc.index.find(p.arrows);
  if (it == pc.index.end()) throw InternalError("path missing from its piece");
  return pc.reduce.column_values(it->second);
}

AlgElement GradedAlgebra::element(const Path& p) const {
  return AlgElement{p.length(), p.source, p.target, normal_form(p)};
}

AlgElement GradedAlgebra::basis_element(int i, int x, int y, int k) const {
  AlgElement e = zero(i, x, y);
  e.coords.at(k) = Scalar::one(field_);
  return e;
}

AlgElement GradedAlgebra::multiply(const AlgElement& u, const AlgElement& v) const {
  if (u.source != v.target)
    throw InputError("multiply: endpoint mismatch (source of left factor != target of right factor)");
  AlgElement out = zero(u.degree + v.degree, v.source, u.target);
  if (u.degree < 0 || v.degree < 0 || out.coords.empty()) return out;
  const Piece& pu = piece(u.degree, u.source, u.target);
  const Piece& pv = piece(v.degree, v.source, v.target);
  const Piece& po = piece(out.degree, out.source, out.target);
  for (int a = 0; a < pu.dim(); ++a) {
    if (u.coords[a].is_zero()) continue;
    for (int b = 0; b < pv.dim(); ++b) {
      if (v.coords[b].is_zero()) continue;
      const Scalar c = u.coords[a] * v.coords[b];
      std::vector<int> seq = pu.paths[pu.basis[a]].arrows;
      const auto& tail = pv.paths[pv.basis[b]].arrows;
      seq.insert(seq.end(), tail.begin(), tail.end());
      const int col = po.index.at(seq);
      for (int k = 0; k < po.dim(); ++k)
        if (!po.reduce(k, col).is_zero()) out.coords[k] += c * po.reduce(k, col);
    }
  }
  return out;
}

AlgElement GradedAlgebra::add(const AlgElement& u, const AlgElement& v) const {
  if (u.degree != v.degree || u.source != v.source || u.target != v.target)
    throw InputError("add: elements live in different pieces");
  AlgElement out = u;
  for (std::size_t k = 0; k < out.coords.size(); ++k) out.coords[k] += v.coords[k];
  return out;
}

AlgElement GradedAlgebra::scale(const AlgElement& u, const Scalar& s) const {
  AlgElement out = u;
  for (auto& c : out.coords) c *= s;
  return out;
}

Matrix GradedAlgebra::left_mult(const AlgElement& u, int j, int w) const {
  const int in_dim = dim(j, w, u.source);
  const int out_dim = dim(j + u.degree, w, u.target);
  Matrix m(field_, out_dim, in_dim);
  if (in_dim == 0 || out_dim == 0) return m;
  for (int k = 0; k < in_dim; ++k) {
    AlgElement v = basis_element(j, w, u.source, k);
    AlgElement p = multiply(u, v);
    for (int r = 0; r < out_dim; ++r) m(r, k) = p.coords[r];
  }
  return m;
}

Matrix GradedAlgebra::right_mult(const AlgElement& u, int j, int w) const {
  const int in_dim = dim(j, u.target, w);
  const int out_dim = dim(j + u.degree, u.source, w);
  Matrix m(field_, out_dim, in_dim);
  if (in_dim == 0 || out_dim == 0) return m;
  for (int k = 0; k < in_dim; ++k) {
    AlgElement v = basis_element(j, u.target, w, k);
    AlgElement p = multiply(v, u);
    for (int r = 0; r < out_dim; ++r) m(r, k) = p.coords[r];
  }
  return m;
}

AlgebraPtr GradedAlgebra::opposite() const {
  if (opposite_of_) return opposite_of_;
  std::lock_guard<std::mutex> lock(mutex_);
  if (auto cached = opposite_cache_.lock()) return cached;
  std::vector<Relation> rels;
  for (const Relation& r : relations_) {
    Relation o;
    o.coeffs = r.coeffs;
    for (const Path& p : r.paths) {
      Path q{p.target, p.source, std::vector<int>(p.arrows.rbegin(), p.arrows.rend())};
      o.paths.push_back(q);
    }
    o.degree = r.degree;
    o.source = r.target;
    o.target = r.source;
    rels.push_back(std::move(o));
  }
  auto op = std::shared_ptr<GradedAlgebra>(new GradedAlgebra(field_, quiver_.opposite(), std::move(rels)));
  op->opposite_of_ = shared_from_this();
  opposite_cache_ = op;
  return op;
}

bool GradedAlgebra::is_opposite_of(const GradedAlgebra& other) const {
  return opposite().get() == &other;
}

AlgElement GradedAlgebra::to_opposite(const AlgElement& u) const {
  AlgebraPtr op = opposite();
  AlgElement out = op->zero(u.degree, u.target, u.source);
  if (u.degree < 0) return out;
  const Piece& pu = piece(u.degree, u.source, u.target);
  const Piece& po = op->piece(u.degree, u.target, u.source);
  for (int a = 0; a < pu.dim(); ++a) {
    if (u.coords[a].is_zero()) continue;
    const auto& arr = pu.paths[pu.basis[a]].arrows;
    std::vector<int> rev(arr.rbegin(), arr.rend());
    const int col = po.index.at(rev);
    for (int k = 0; k < po.dim(); ++k)
      if (!po.reduce(k, col).is_zero()) out.coords[k] += u.coords[a] * po.reduce(k, col);
  }
  return out;
}

std::optional<int> GradedAlgebra::left_vanishing_degree(int x, int cap) const {
  for (int d = 1; d <= cap; ++d) {
    int total = 0;
    for (int y = 0; y < num_vertices(); ++y) total += dim(d, x, y);
    if (total == 0) return d;
  }
  return std::nullopt;
}

std::optional<int> GradedAlgebra::right_vanishing_degree(int x, int cap) const {
  for (int d = 1; d <= cap; ++d) {
    int total = 0;
    for (int y = 0; y < num_vertices(); ++y) total += dim(d, y, x);
    if (total == 0) return d;
  }
  return std::nullopt;
}

bool GradedAlgebra::reaches(int from, int to, int cap) const {
  for (int d = 0; d <= cap; ++d)
    if (dim(d, from, to) > 0) return true;
  return false;
}

bool GradedAlgebra::frontier_tainted_out(int a, Frontier::Kind kind, int cap) const {
  for (const Frontier& f : quiver_.frontier())
    if (f.side == Frontier::Side::Out && f.kind == kind && reaches(a, f.vertex, cap)) return true;
  return false;
}

bool GradedAlgebra::frontier_tainted_in(int a, Frontier::Kind kind, int cap) const {
  for (const Frontier& f : quiver_.frontier())
    if (f.side == Frontier::Side::In && f.kind == kind && reaches(f.vertex, a, cap)) return true;
  return false;
}

Boundedness GradedAlgebra::boundedness(int cap) const {
  if (cap <= 0) throw InputError("boundedness: degree cap must be positive");
  Boundedness b;
  for (int x = 0; x < num_vertices(); ++x) {
    for (int side = 0; side < 2; ++side) {
      VertexBound v;
      v.vertex = x;
      for (int d = 0; d <= cap; ++d) {
        int total = 0;
        for (int y = 0; y < num_vertices(); ++y) total += side == 0 ? dim(d, x, y) : dim(d, y, x);
        v.profile.push_back(total);
        if (total == 0) {
          v.finite = true;
          break;
        }
        v.total_dim += total;
      }
      if (!v.finite) v.total_dim = 0;
      if (side == 0) {
        v.frontier_ray = frontier_tainted_out(x, Frontier::Kind::Ray, cap);
        v.frontier_assumed = frontier_tainted_out(x, Frontier::Kind::Bounded, cap);
        b.left.push_back(std::move(v));
      } else {
        v.frontier_ray = frontier_tainted_in(x, Frontier::Kind::Ray, cap);
        v.frontier_assumed = frontier_tainted_in(x, Frontier::Kind::Bounded, cap);
        b.right.push_back(std::move(v));
      }
    }
  }
  return b;
}

std::string GradedAlgebra::element_to_string(const AlgElement& u) const {
  if (u.degree < 0 || u.is_zero()) return "0";
  const Piece& p = piece(u.degree, u.source, u.target);
  std::string s;
  for (int k = 0; k < p.dim(); ++k) {
    if (u.coords[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string name = quiver_.path_name(p.paths[p.basis[k]]);
    s += u.coords[k].is_one() ? name : u.coords[k].to_string() + "*" + name;
  }
  return s;
}

}  // namespace gradrep
