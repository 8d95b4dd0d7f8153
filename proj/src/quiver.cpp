#include "gradrep/quiver.hpp"

#include <algorithm>
#include <functional>

#include "gradrep/error.hpp"

namespace gradrep {

namespace {
const std::string kOpMark = "\xC2\xB0";  // degree sign
}

std::string opposite_arrow_name(const std::string& name) {
  if (name.size() >= kOpMark.size() &&
      name.compare(name.size() - kOpMark.size(), kOpMark.size(), kOpMark) == 0)
    return name.substr(0, name.size() - kOpMark.size());
  return name + kOpMark;
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
               std::vector<Frontier> frontier)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)), frontier_(std::move(frontier)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].empty()) throw InputError("empty vertex label");
    if (!vindex_.emplace(vertices_[i], static_cast<int>(i)).second)
      throw InputError("duplicate vertex label '" + vertices_[i] + "'");
  }
  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (a.name.empty()) throw InputError("empty arrow name");
    if (a.from < 0 || a.from >= num_vertices() || a.to < 0 || a.to >= num_vertices())
      throw InputError("arrow '" + a.name + "' has an undeclared endpoint");
    if (!aindex_.emplace(a.name, static_cast<int>(i)).second)
      throw InputError("duplicate arrow name '" + a.name + "'");
    out_[a.from].push_back(static_cast<int>(i));
    in_[a.to].push_back(static_cast<int>(i));
  }
  for (const Frontier& f : frontier_)
    if (f.vertex < 0 || f.vertex >= num_vertices())
      throw InputError("frontier marker on an undeclared vertex");
}

Quiver Quiver::from_labels(const std::vector<std::string>& vertices,
                           const std::vector<std::array<std::string, 3>>& arrows) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < vertices.size(); ++i) idx[vertices[i]] = static_cast<int>(i);
  std::vector<Arrow> as;
  for (const auto& [name, from, to] : arrows) {
    auto f = idx.find(from), t = idx.find(to);
    if (f == idx.end()) throw InputError("arrow '" + name + "': unknown vertex '" + from + "'");
    if (t == idx.end()) throw InputError("arrow '" + name + "': unknown vertex '" + to + "'");
    as.push_back({name, f->second, t->second});
  }
  return Quiver(vertices, as);
}

int Quiver::vertex_index(const std::string& label) const {
  auto it = vindex_.find(label);
  if (it == vindex_.end()) throw InputError("unknown vertex '" + label + "'");
  return it->second;
}

int Quiver::arrow_index(const std::string& name) const {
  auto it = aindex_.find(name);
  if (it == aindex_.end()) throw InputError("unknown arrow '" + name + "'");
  return it->second;
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev;
  rev.reserve(arrows_.size());
  for (const Arrow& a : arrows_) rev.push_back({opposite_arrow_name(a.name), a.to, a.from});
  std::vector<Frontier> fr = frontier_;
  for (Frontier& f : fr) f.side = f.side == Frontier::Side::In ? Frontier::Side::Out : Frontier::Side::In;
  return Quiver(vertices_, rev, fr);
}

std::vector<Path> Quiver::paths(int n, int x, int y) const {
  if (x < 0 || x >= num_vertices() || y < 0 || y >= num_vertices())
    throw InputError("paths: unknown vertex index");
  if (n < 0) throw InputError("paths: negative length");
  std::vector<Path> out;
  std::vector<int> seq;
  std::function<void(int, int)> walk = [&](int at, int remaining) {
    if (remaining == 0) {
      if (at == x) out.push_back(Path{x, y, seq});
      return;
    }
    for (int a : in_[at]) {
      seq.push_back(a);
      walk(arrows_[a].from, remaining - 1);
      seq.pop_back();
    }
  };
  walk(y, n);
  std::sort(out.begin(), out.end(), [&](const Path& p, const Path& q) {
    return std::lexicographical_compare(
        p.arrows.begin(), p.arrows.end(), q.arrows.begin(), q.arrows.end(),
        [&](int a, int b) { return arrows_[a].name < arrows_[b].name; });
  });
  return out;
}

std::vector<Path> Quiver::paths(int n, const std::string& x, const std::string& y) const {
  return paths(n, vertex_index(x), vertex_index(y));
}

std::string Quiver::path_name(const Path& p) const {
  if (p.arrows.empty()) return "e_" + vertices_[p.source];
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += "*";
    s += arrows_[p.arrows[i]].name;
  }
  return s;
}

Path Quiver::path_from_names(const std::vector<std::string>& names) const {
  if (names.empty()) throw InputError("empty path");
  Path p;
  for (const auto& n : names) p.arrows.push_back(arrow_index(n));
  for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i)
    if (arrows_[p.arrows[i]].from != arrows_[p.arrows[i + 1]].to)
      throw InputError("path arrows not composable at '" + names[i] + "'");
  p.target = arrows_[p.arrows.front()].to;
  p.source = arrows_[p.arrows.back()].from;
  return p;
}

QuiverAnalysis Quiver::analyze() const {
  QuiverAnalysis r;
  const int n = num_vertices();
  std::vector<int> colour(n, 0), parent(n, -1);
  std::function<bool(int)> dfs = [&](int v) {
    colour[v] = 1;
    for (int a : out_[v]) {
      int w = arrows_[a].to;
      if (colour[w] == 1) {
        r.cycle.clear();
        for (int u = v; u != w; u = parent[u]) r.cycle.push_back(u);
        r.cycle.push_back(w);
        std::reverse(r.cycle.begin(), r.cycle.end());
        return true;
      }
      if (colour[w] == 0) {
        parent[w] = v;
        if (dfs(w)) return true;
      }
    }
    colour[v] = 2;
    return false;
  };
  for (int v = 0; v < n && r.acyclic; ++v)
    if (colour[v] == 0 && dfs(v)) r.acyclic = false;

  r.infinite_forward_path = !r.acyclic;
  r.infinite_backward_path = !r.acyclic;
  r.strongly_locally_finite = r.acyclic;
  r.frontier_forward = !r.acyclic;
  r.frontier_backward = !r.acyclic;
  for (const Frontier& f : frontier_) {
    if (f.side == Frontier::Side::Out) r.frontier_forward = true;
    if (f.side == Frontier::Side::In) r.frontier_backward = true;
  }
  r.caveat =
      "finite quiver data: an infinite path exists exactly when there is an oriented cycle, "
      "so the forward, backward and strong-local-finiteness flags all reduce to cycle detection";
  if (!frontier_.empty())
    r.caveat += "; frontier markers declare continuations beyond the data and are reflected "
                "only in the frontier_* flags";
  return r;
}

}  // namespace gradrep
