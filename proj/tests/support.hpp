#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradrep/artheory.hpp"
#include "gradrep/io.hpp"

#ifndef GRADREP_FIXTURES
#define GRADREP_FIXTURES "fixtures"
#endif

namespace testing {

using namespace gradrep;

inline Problem fixture(const std::string& name) { return load_problem(std::string(GRADREP_FIXTURES) + "/" + name); }

inline int vtx(const AlgebraPtr& alg, const std::string& label) { return alg->quiver().vertex_index(label); }

inline ModPtr simple(const AlgebraPtr& alg, const std::string& v, int s = 0) {
  return standard(alg, StandardKind::S, vtx(alg, v), s);
}
inline ModPtr proj(const AlgebraPtr& alg, const std::string& v, int s = 0) {
  return standard(alg, StandardKind::P, vtx(alg, v), s);
}
inline ModPtr inj(const AlgebraPtr& alg, const std::string& v, int s = 0) {
  return standard(alg, StandardKind::I, vtx(alg, v), s);
}

inline std::map<std::pair<int, int>, int> dims_of(const GradedModule& m) {
  std::map<std::pair<int, int>, int> out;
  for (int i = m.lo(); i <= m.hi(); ++i)
    for (int x = 0; x < m.algebra()->num_vertices(); ++x)
      if (m.dim(i, x)) out[{i, x}] = m.dim(i, x);
  return out;
}

/// ≤ max_vertices vertices, random arrows (loops allowed), every path of
/// length 3 set to zero plus a random selection of length-2 monomials.
inline AlgebraPtr random_monomial_algebra(Field f, std::mt19937_64& rng, int max_vertices = 4) {
  std::uniform_int_distribution<int> nv_d(1, max_vertices);
  const int nv = nv_d(rng);
  std::vector<std::string> verts;
  for (int i = 0; i < nv; ++i) verts.push_back(std::to_string(i + 1));
  std::vector<Arrow> arrows;
  std::uniform_int_distribution<int> na_d(1, nv + 2), v_d(0, nv - 1);
  const int na = na_d(rng);
  for (int k = 0; k < na; ++k) arrows.push_back({"a" + std::to_string(k + 1), v_d(rng), v_d(rng)});
  Quiver q(verts, arrows);
  std::vector<Relation> rels;
  std::bernoulli_distribution coin(0.35);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b) {
      if (arrows[b].to != arrows[a].from) continue;
      for (int c = 0; c < na; ++c) {
        if (arrows[c].to != arrows[b].from) continue;
        rels.push_back({{Path{arrows[c].from, arrows[a].to, {a, b, c}}}, {Scalar::one(f)}});
      }
    }
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b)
      if (arrows[b].to == arrows[a].from && coin(rng))
        rels.push_back({{Path{arrows[b].from, arrows[a].to, {a, b}}}, {Scalar::one(f)}});
  return GradedAlgebra::create(f, std::move(q), std::move(rels));
}

inline Scalar random_scalar(Field f, std::mt19937_64& rng) {
  if (f.is_rational()) return Scalar::from_int(f, std::uniform_int_distribution<int>(-2, 2)(rng));
  return Scalar::from_int(f, std::uniform_int_distribution<int>(0, static_cast<int>(f.modulus) - 1)(rng));
}

/// A random finite-dimensional module in degrees [0, span-1]: random pieces,
/// random sparse maps, rejected until the relations hold (falling back to
/// zeroing maps).
inline ModPtr random_module(const AlgebraPtr& alg, std::mt19937_64& rng, int max_total = 6, int span = 3) {
  const int nv = alg->num_vertices();
  const Quiver& q = alg->quiver();
  for (int attempt = 0; attempt < 200; ++attempt) {
    auto m = std::make_shared<GradedModule>(alg, 0, span - 1);
    int total = 0;
    std::uniform_int_distribution<int> dd(0, 2);
    for (int i = 0; i < span; ++i)
      for (int x = 0; x < nv; ++x) {
        int d = std::min(dd(rng) == 2 ? 1 + dd(rng) % 2 : 0, max_total - total);
        m->set_dim(i, x, d);
        total += d;
      }
    if (total == 0) continue;
    const bool zero_maps = attempt > 150;
    std::bernoulli_distribution sparse(0.5);
    for (int i = 0; i + 1 < span; ++i)
      for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        Matrix mat(alg->field(), m->dim(i + 1, ar.to), m->dim(i, ar.from));
        if (!zero_maps)
          for (int r = 0; r < mat.rows(); ++r)
            for (int c = 0; c < mat.cols(); ++c)
              if (sparse(rng)) mat(r, c) = random_scalar(alg->field(), rng);
        m->set_map(a, i, std::move(mat));
      }
    if (validate(*m).ok) return m;
  }
  return simple(alg, alg->quiver().vertices()[0]);
}

// Rank of cover restricted to Ker(cover) ∩ P0_i(x) against rad P0: the
// kernel must sit inside the radical piece by piece.
inline bool kernel_in_radical(const Presentation& p) {
  ModPtr p0 = p.cover.projective.module;
  SubModule rad = radical(p0);
  const ModPtr& k = p.kernel.module;
  for (int i = k->lo(); i <= k->hi(); ++i)
    for (int x = 0; x < p0->algebra()->num_vertices(); ++x) {
      if (k->dim(i, x) == 0) continue;
      Matrix r = rad.inclusion.at(i, x);
      Matrix both = Matrix::hstack(r, p.kernel.inclusion.at(i, x));
      if (rank(both) != rank(r)) return false;
    }
  return true;
}

inline bool socle_in_image(const Copresentation& c) {
  SubModule soc = socle(c.i0_module);
  for (int i = soc.module->lo(); i <= soc.module->hi(); ++i)
    for (int x = 0; x < c.i0_module->algebra()->num_vertices(); ++x) {
      if (soc.module->dim(i, x) == 0) continue;
      Matrix img = c.envelope.at(i, x);
      if (rank(Matrix::hstack(img, soc.inclusion.at(i, x))) != rank(img)) return false;
    }
  return true;
}

/// Small integer matrices modulo p, for oracles that must not share code with
/// the library's linear algebra.
struct ModP {
  int p;
  using Mat = std::vector<std::vector<int>>;

  Mat zero(int r, int c) const { return Mat(r, std::vector<int>(c, 0)); }
  Mat identity(int n) const {
    Mat m = zero(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  }
  Mat mul(const Mat& a, const Mat& b, int rows, int inner, int cols) const {
    Mat c = zero(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < inner; ++k)
        if (a[i][k])
          for (int j = 0; j < cols; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
    return c;
  }
};

constexpr long kBruteForceLimit = 600000;

/// dim Ext¹(M, N) by enumerating every degree-0 cocycle δ (one block per arrow
/// and degree, M_i(x) -> N_{i+1}(y)) for which the block-triangular
/// representation [[N, δ], [0, M]] satisfies the relations, and every
/// coboundary N(α)h - hM(α). dim = log_p(|Z| / |B|). Prime fields only.
inline int brute_force_ext1(const ModPtr& m, const ModPtr& n) {
  const AlgebraPtr& alg = m->algebra();
  const int p = static_cast<int>(alg->field().modulus);
  const Quiver& q = alg->quiver();
  const int nv = alg->num_vertices();
  ModP mp{p};
  const int lo = std::min(m->lo(), n->lo()) - 1, hi = std::max(m->hi(), n->hi()) + 1;
  auto dm = [&](int i, int x) { return i < m->lo() || i > m->hi() ? 0 : m->dim(i, x); };
  auto dn = [&](int i, int x) { return i < n->lo() || i > n->hi() ? 0 : n->dim(i, x); };
  auto to_int = [&](const Matrix& a) {
    ModP::Mat out = mp.zero(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
      for (int c = 0; c < a.cols(); ++c) out[r][c] = static_cast<int>(a(r, c).residue());
    return out;
  };
  auto mmap = [&](int a, int i) {
    const Arrow& ar = q.arrow(a);
    if (dm(i, ar.from) == 0 || dm(i + 1, ar.to) == 0) return mp.zero(dm(i + 1, ar.to), dm(i, ar.from));
    return to_int(m->map(a, i));
  };
  auto nmap = [&](int a, int i) {
    const Arrow& ar = q.arrow(a);
    if (dn(i, ar.from) == 0 || dn(i + 1, ar.to) == 0) return mp.zero(dn(i + 1, ar.to), dn(i, ar.from));
    return to_int(n->map(a, i));
  };

  struct Block {
    int arrow, degree, rows, cols, offset;
  };
  std::vector<Block> blocks;
  int nd = 0;
  for (int i = lo; i <= hi; ++i)
    for (int a = 0; a < q.num_arrows(); ++a) {
      const int r = dn(i + 1, q.arrow(a).to), c = dm(i, q.arrow(a).from);
      if (r && c) {
        blocks.push_back({a, i, r, c, nd});
        nd += r * c;
      }
    }
  struct HBlock {
    int degree, vertex, rows, cols, offset;
  };
  std::vector<HBlock> hblocks;
  int nh = 0;
  for (int i = lo; i <= hi; ++i)
    for (int x = 0; x < nv; ++x)
      if (dn(i, x) && dm(i, x)) {
        hblocks.push_back({i, x, dn(i, x), dm(i, x), nh});
        nh += dn(i, x) * dm(i, x);
      }
  auto power = [&](int e) {
    long v = 1;
    for (int k = 0; k < e && v <= kBruteForceLimit; ++k) v *= p;
    return v;
  };
  if (power(nd) > kBruteForceLimit || power(nh) > kBruteForceLimit) throw std::length_error("brute force too large");

  auto delta_block = [&](const std::vector<int>& d, int a, int i) {
    const Arrow& ar = q.arrow(a);
    ModP::Mat out = mp.zero(dn(i + 1, ar.to), dm(i, ar.from));
    for (const auto& b : blocks)
      if (b.arrow == a && b.degree == i)
        for (int r = 0; r < b.rows; ++r)
          for (int c = 0; c < b.cols; ++c) out[r][c] = d[b.offset + r * b.cols + c];
    return out;
  };

  auto satisfies = [&](const std::vector<int>& d) {
    for (const Relation& rel : alg->relations())
      for (int i = lo; i <= hi; ++i) {
        const int x = rel.source, y = rel.target;
        const int rows = dn(i + rel.degree, y), cols = dm(i, x);
        if (rows == 0 || cols == 0) continue;
        ModP::Mat acc = mp.zero(rows, cols);
        for (std::size_t k = 0; k < rel.paths.size(); ++k) {
          const auto& arr = rel.paths[k].arrows;  // written order: arr.back() acts first
          const int len = static_cast<int>(arr.size());
          for (int pos = 0; pos < len; ++pos) {
            // M along arrows before pos, δ at pos, N after.
            int deg = i, vert = x;
            ModP::Mat cur = mp.identity(dm(i, x));
            int cur_rows = dm(i, x);
            bool on_n = false;
            for (int step = len - 1; step >= 0; --step) {
              const int a = arr[step];
              const Arrow& ar = q.arrow(a);
              const int idx = len - 1 - step;
              ModP::Mat map;
              int out_rows;
              if (idx < pos) {
                map = mmap(a, deg);
                out_rows = dm(deg + 1, ar.to);
              } else if (idx == pos) {
                map = delta_block(d, a, deg);
                out_rows = dn(deg + 1, ar.to);
                on_n = true;
              } else {
                map = nmap(a, deg);
                out_rows = dn(deg + 1, ar.to);
              }
              cur = mp.mul(map, cur, out_rows, cur_rows, cols);
              cur_rows = out_rows;
              ++deg;
              vert = ar.to;
            }
            (void)on_n;
            (void)vert;
            const int coeff = static_cast<int>(rel.coeffs[k].residue());
            for (int r = 0; r < rows; ++r)
              for (int c = 0; c < cols; ++c) acc[r][c] = (acc[r][c] + coeff * cur[r][c]) % p;
          }
        }
        for (const auto& row : acc)
          for (int v : row)
            if (v) return false;
      }
    return true;
  };

  auto next = [&](std::vector<int>& v) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (++v[k] < p) return true;
      v[k] = 0;
    }
    return false;
  };

  long z = 0;
  std::vector<int> d(nd, 0);
  do {
    if (satisfies(d)) ++z;
  } while (next(d));

  std::set<std::vector<int>> bset;
  std::vector<int> h(nh, 0);
  do {
    std::vector<int> img(nd, 0);
    for (const auto& b : blocks) {
      const Arrow& ar = q.arrow(b.arrow);
      ModP::Mat hs = mp.zero(dn(b.degree, ar.from), dm(b.degree, ar.from));
      ModP::Mat ht = mp.zero(dn(b.degree + 1, ar.to), dm(b.degree + 1, ar.to));
      for (const auto& hb : hblocks) {
        if (hb.degree == b.degree && hb.vertex == ar.from)
          for (int r = 0; r < hb.rows; ++r)
            for (int c = 0; c < hb.cols; ++c) hs[r][c] = h[hb.offset + r * hb.cols + c];
        if (hb.degree == b.degree + 1 && hb.vertex == ar.to)
          for (int r = 0; r < hb.rows; ++r)
            for (int c = 0; c < hb.cols; ++c) ht[r][c] = h[hb.offset + r * hb.cols + c];
      }
      ModP::Mat left = mp.mul(nmap(b.arrow, b.degree), hs, b.rows, dn(b.degree, ar.from), b.cols);
      ModP::Mat right = mp.mul(ht, mmap(b.arrow, b.degree), b.rows, dm(b.degree + 1, ar.to), b.cols);
      for (int r = 0; r < b.rows; ++r)
        for (int c = 0; c < b.cols; ++c) img[b.offset + r * b.cols + c] = ((left[r][c] - right[r][c]) % p + p) % p;
    }
    bset.insert(img);
  } while (nh > 0 && next(h));

  long ratio = z / static_cast<long>(bset.size());
  int dim = 0;
  while (ratio > 1) {
    ratio /= p;
    ++dim;
  }
  return dim;
}

}  // namespace testing
