#include "gradrep/io.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "gradrep/error.hpp"

namespace gradrep {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string as_label(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  fail(where, "expected a vertex label (string)");
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

int vertex_of(const Quiver& q, const json& j, const std::string& where) {
  const std::string label = as_label(j, where);
  if (!q.has_vertex(label)) fail(where, "unknown vertex '" + label + "'");
  return q.vertex_index(label);
}

std::string piece_key(int i, const std::string& x) { return "(" + std::to_string(i) + "," + x + ")"; }

std::pair<int, int> parse_piece_key(const Quiver& q, const std::string& key, const std::string& where) {
  static const std::regex re(R"(^\(\s*(-?\d+)\s*,\s*([^)]*?)\s*\)$)");
  std::smatch m;
  if (!std::regex_match(key, m, re)) fail(where, "piece key '" + key + "' is not of the form (degree,vertex)");
  const std::string label = m[2];
  if (!q.has_vertex(label)) fail(where, "unknown vertex '" + label + "'");
  return {std::stoi(m[1]), q.vertex_index(label)};
}

}  // namespace

const ModPtr& Problem::module(const std::string& name) const {
  auto it = modules.find(name);
  if (it == modules.end()) throw InputError("modules: no module named '" + name + "'");
  return it->second;
}

json field_to_json(Field f) { return f.to_string(); }

json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(Field f, const json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<long>());
  if (j.is_string()) {
    try {
      return Scalar::parse(f, j.get<std::string>());
    } catch (const InputError& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected a scalar (integer or \"p/q\" string)");
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(Field f, const json& j, int rows, int cols, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a matrix (array of rows)");
  Matrix m(f, rows, cols);
  if (rows == 0 || cols == 0) {
    for (const auto& row : j)
      if (!row.is_array() || !row.empty()) fail(where, "expected an empty matrix for a zero-dimensional piece");
    return m;
  }
  if (static_cast<int>(j.size()) != rows)
    fail(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  for (int r = 0; r < rows; ++r) {
    const std::string rw = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
      fail(rw, "expected a row of " + std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c) m(r, c) = scalar_from_json(f, j[r][c], rw + "[" + std::to_string(c) + "]");
  }
  return m;
}

json algebra_to_json(const GradedAlgebra& alg) {
  const Quiver& q = alg.quiver();
  json doc;
  doc["field"] = field_to_json(alg.field());
  json verts = json::array();
  for (const auto& v : q.vertices()) verts.push_back(v);
  json arrows = json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"name", a.name}, {"from", q.vertices()[a.from]}, {"to", q.vertices()[a.to]}});
  json frontier = json::array();
  for (const auto& f : q.frontier())
    frontier.push_back({{"vertex", q.vertices()[f.vertex]},
                        {"side", f.side == Frontier::Side::In ? "in" : "out"},
                        {"kind", f.kind == Frontier::Kind::Ray ? "ray" : "bounded"}});
  doc["quiver"] = {{"vertices", verts}, {"arrows", arrows}, {"frontier", frontier}};
  json rels = json::array();
  for (const auto& r : alg.relations()) {
    json paths = json::array(), coeffs = json::array();
    for (std::size_t k = 0; k < r.paths.size(); ++k) {
      json names = json::array();
      for (int a : r.paths[k].arrows) names.push_back(q.arrow(a).name);
      paths.push_back(names);
      coeffs.push_back(scalar_to_json(r.coeffs[k]));
    }
    rels.push_back({{"paths", paths}, {"coeffs", coeffs}});
  }
  doc["relations"] = rels;
  return doc;
}

AlgebraPtr algebra_from_json(const json& doc) {
  if (!doc.is_object()) fail("$", "expected a JSON object");
  const Field field = [&] {
    try {
      return Field::parse(as_string(need(doc, "field", "$"), "field"));
    } catch (const InputError& e) {
      if (std::string(e.what()).rfind("field", 0) == 0) throw;
      fail("field", e.what());
    }
  }();
  const json& qj = need(doc, "quiver", "$");
  const json& vj = need(qj, "vertices", "quiver");
  if (!vj.is_array()) fail("quiver.vertices", "expected an array");
  std::vector<std::string> verts;
  for (std::size_t i = 0; i < vj.size(); ++i) verts.push_back(as_label(vj[i], "quiver.vertices[" + std::to_string(i) + "]"));
  std::set<std::string> seen(verts.begin(), verts.end());
  if (seen.size() != verts.size()) fail("quiver.vertices", "duplicate vertex label");
  auto index_of = [&](const json& j, const std::string& where) {
    const std::string l = as_label(j, where);
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (verts[i] == l) return static_cast<int>(i);
    fail(where, "unknown vertex '" + l + "'");
  };
  std::vector<Arrow> arrows;
  const json& aj = need(qj, "arrows", "quiver");
  if (!aj.is_array()) fail("quiver.arrows", "expected an array");
  for (std::size_t i = 0; i < aj.size(); ++i) {
    const std::string w = "quiver.arrows[" + std::to_string(i) + "]";
    arrows.push_back({as_string(need(aj[i], "name", w), w + ".name"), index_of(need(aj[i], "from", w), w + ".from"),
                      index_of(need(aj[i], "to", w), w + ".to")});
  }
  std::vector<Frontier> frontier;
  if (qj.contains("frontier")) {
    const json& fj = qj["frontier"];
    if (!fj.is_array()) fail("quiver.frontier", "expected an array");
    for (std::size_t i = 0; i < fj.size(); ++i) {
      const std::string w = "quiver.frontier[" + std::to_string(i) + "]";
      Frontier f;
      f.vertex = index_of(need(fj[i], "vertex", w), w + ".vertex");
      const std::string side = as_string(need(fj[i], "side", w), w + ".side");
      if (side != "in" && side != "out") fail(w + ".side", "expected \"in\" or \"out\"");
      f.side = side == "in" ? Frontier::Side::In : Frontier::Side::Out;
      const std::string kind = as_string(need(fj[i], "kind", w), w + ".kind");
      if (kind != "ray" && kind != "bounded") fail(w + ".kind", "expected \"ray\" or \"bounded\"");
      f.kind = kind == "ray" ? Frontier::Kind::Ray : Frontier::Kind::Bounded;
      frontier.push_back(f);
    }
  }
  Quiver q = [&] {
    try {
      return Quiver(verts, arrows, frontier);
    } catch (const InputError& e) {
      fail("quiver", e.what());
    }
  }();

  std::vector<Relation> rels;
  if (doc.contains("relations")) {
    const json& rj = doc["relations"];
    if (!rj.is_array()) fail("relations", "expected an array");
    for (std::size_t r = 0; r < rj.size(); ++r) {
      const std::string w = "relations[" + std::to_string(r) + "]";
      const json& pj = need(rj[r], "paths", w);
      const json& cj = need(rj[r], "coeffs", w);
      if (!pj.is_array() || !cj.is_array()) fail(w, "paths and coeffs must be arrays");
      if (pj.size() != cj.size()) fail(w, "paths and coeffs have different lengths");
      if (pj.empty()) fail(w, "relation without paths");
      Relation rel;
      for (std::size_t k = 0; k < pj.size(); ++k) {
        const std::string pw = w + ".paths[" + std::to_string(k) + "]";
        if (!pj[k].is_array()) fail(pw, "expected an array of arrow names");
        std::vector<std::string> names;
        for (const auto& n : pj[k]) names.push_back(as_string(n, pw));
        try {
          rel.paths.push_back(q.path_from_names(names));
        } catch (const InputError& e) {
          fail(pw, e.what());
        }
        rel.coeffs.push_back(scalar_from_json(field, cj[k], w + ".coeffs[" + std::to_string(k) + "]"));
      }
      rels.push_back(std::move(rel));
    }
  }
  try {
    return GradedAlgebra::create(field, std::move(q), std::move(rels));
  } catch (const InputError& e) {
    std::string msg = e.what();
    if (msg.rfind("relation ", 0) == 0) {
      const auto colon = msg.find(':');
      fail("relations[" + msg.substr(9, colon - 9) + "]", msg.substr(colon + 2));
    }
    throw;
  }
}

json module_to_json(const GradedModule& m) {
  const Quiver& q = m.algebra()->quiver();
  json dims = json::object(), maps = json::object();
  for (int i = m.lo(); i <= m.hi(); ++i)
    for (int x = 0; x < q.num_vertices(); ++x)
      if (m.dim(i, x) > 0) dims[piece_key(i, q.vertices()[x])] = m.dim(i, x);
  for (int i = m.lo(); i < m.hi(); ++i)
    for (int a = 0; a < q.num_arrows(); ++a) {
      Matrix mat = m.map(a, i);
      if (!mat.empty() && !mat.is_zero()) maps[q.arrow(a).name + "@" + std::to_string(i)] = matrix_to_json(mat);
    }
  return {{"window", {m.lo(), m.hi()}},
          {"flags",
           {{"below", m.truncated_below() ? "truncated" : "exact"}, {"above", m.truncated_above() ? "truncated" : "exact"}}},
          {"dims", dims},
          {"maps", maps}};
}

ModPtr module_from_json(const AlgebraPtr& alg, const json& j, const std::string& where) {
  const Quiver& q = alg->quiver();
  const json& wj = need(j, "window", where);
  if (!wj.is_array() || wj.size() != 2) fail(where + ".window", "expected [lo, hi]");
  const int lo = as_int(wj[0], where + ".window[0]"), hi = as_int(wj[1], where + ".window[1]");
  if (hi < lo - 1) fail(where + ".window", "inverted window");
  bool tb = false, ta = false;
  if (j.contains("flags")) {
    const json& fj = j["flags"];
    auto flag = [&](const char* k) {
      if (!fj.contains(k)) return false;
      const std::string v = as_string(fj[k], where + ".flags." + k);
      if (v != "exact" && v != "truncated") fail(where + ".flags." + k, "expected \"exact\" or \"truncated\"");
      return v == "truncated";
    };
    tb = flag("below");
    ta = flag("above");
  }
  auto m = std::make_shared<GradedModule>(alg, lo, hi, tb, ta);
  if (j.contains("dims")) {
    const json& dj = j["dims"];
    if (!dj.is_object()) fail(where + ".dims", "expected an object");
    for (const auto& [key, val] : dj.items()) {
      const std::string w = where + ".dims." + key;
      auto [i, x] = parse_piece_key(q, key, w);
      if (i < lo || i > hi) fail(w, "degree outside the window");
      const int n = as_int(val, w);
      if (n < 0) fail(w, "negative dimension");
      m->set_dim(i, x, n);
    }
  }
  if (j.contains("maps")) {
    const json& mj = j["maps"];
    if (!mj.is_object()) fail(where + ".maps", "expected an object");
    for (const auto& [key, val] : mj.items()) {
      const std::string w = where + ".maps." + key;
      const auto at = key.rfind('@');
      if (at == std::string::npos) fail(w, "map key must be arrow@degree");
      const std::string name = key.substr(0, at);
      int a, i;
      try {
        a = q.arrow_index(name);
      } catch (const InputError&) {
        fail(w, "unknown arrow '" + name + "'");
      }
      try {
        std::size_t used = 0;
        i = std::stoi(key.substr(at + 1), &used);
        if (used != key.size() - at - 1) throw std::invalid_argument("");
      } catch (const std::exception&) {
        fail(w, "bad degree in map key");
      }
      if (i < lo || i >= hi) fail(w, "map degree outside the window");
      const Arrow& ar = q.arrow(a);
      m->set_map(a, i, matrix_from_json(alg->field(), val, m->dim(i + 1, ar.to), m->dim(i, ar.from), w));
    }
  }
  ValidationReport rep = validate(*m);
  if (!rep.ok) fail(where, rep.message);
  return m;
}

json morphism_to_json(const GradedMorphism& f) {
  const Quiver& q = f.src->algebra()->quiver();
  json pieces = json::object();
  for (int i = f.src->lo(); i <= f.src->hi(); ++i)
    for (int x = 0; x < q.num_vertices(); ++x) {
      Matrix m = f.at(i, x);
      if (!m.empty() && !m.is_zero()) pieces[piece_key(i, q.vertices()[x])] = matrix_to_json(m);
    }
  return {{"pieces", pieces}};
}

GradedMorphism morphism_from_json(const ModPtr& src, const ModPtr& tgt, const json& j, const std::string& where) {
  const Quiver& q = src->algebra()->quiver();
  GradedMorphism f(src, tgt);
  const json& pj = need(j, "pieces", where);
  if (!pj.is_object()) fail(where + ".pieces", "expected an object");
  for (const auto& [key, val] : pj.items()) {
    const std::string w = where + ".pieces." + key;
    auto [i, x] = parse_piece_key(q, key, w);
    if (i < src->lo() || i > src->hi()) fail(w, "degree outside the source window");
    f.set(i, x, matrix_from_json(src->field(), val, tgt->dim(i, x), src->dim(i, x), w));
  }
  if (!is_natural(f)) fail(where, "pieces do not commute with the arrow actions");
  return f;
}

json element_to_json(const GradedAlgebra& alg, const AlgElement& u) {
  json coords = json::array();
  for (const auto& c : u.coords) coords.push_back(scalar_to_json(c));
  const auto& v = alg.quiver().vertices();
  return {{"degree", u.degree},
          {"source", v[u.source]},
          {"target", v[u.target]},
          {"coords", coords},
          {"expr", alg.element_to_string(u)}};
}

AlgElement element_from_json(const GradedAlgebra& alg, const json& j, const std::string& where) {
  const Quiver& q = alg.quiver();
  const int d = as_int(need(j, "degree", where), where + ".degree");
  const int s = vertex_of(q, need(j, "source", where), where + ".source");
  const int t = vertex_of(q, need(j, "target", where), where + ".target");
  AlgElement u = alg.zero(d, s, t);
  const json& cj = need(j, "coords", where);
  if (!cj.is_array() || cj.size() != u.coords.size())
    fail(where + ".coords", "expected " + std::to_string(u.coords.size()) + " coordinates");
  for (std::size_t k = 0; k < cj.size(); ++k)
    u.coords[k] = scalar_from_json(alg.field(), cj[k], where + ".coords[" + std::to_string(k) + "]");
  return u;
}

json summands_to_json(const GradedAlgebra& alg, const std::vector<Summand>& s) {
  json out = json::array();
  for (const auto& x : s) out.push_back({alg.quiver().vertices()[x.vertex], x.shift});
  return out;
}

namespace {

std::vector<Summand> summands_from_json(const Quiver& q, const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of [vertex, shift]");
  std::vector<Summand> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string w = where + "[" + std::to_string(k) + "]";
    if (!j[k].is_array() || j[k].size() != 2) fail(w, "expected [vertex, shift]");
    out.push_back({vertex_of(q, j[k][0], w), as_int(j[k][1], w)});
  }
  return out;
}

const char* kind_name(StandardKind k) {
  switch (k) {
    case StandardKind::P: return "P";
    case StandardKind::I: return "I";
    default: return "S";
  }
}

}  // namespace

json summand_map_to_json(const SummandMap& f) {
  json entries = json::array();
  for (const auto& row : f.entries) {
    json r = json::array();
    for (const auto& u : row) r.push_back(element_to_json(*f.algebra, u));
    entries.push_back(r);
  }
  return {{"kind", kind_name(f.kind)},
          {"source", summands_to_json(*f.algebra, f.src)},
          {"target", summands_to_json(*f.algebra, f.tgt)},
          {"entries", entries}};
}

SummandMap summand_map_from_json(const AlgebraPtr& alg, const json& j, const std::string& where) {
  const std::string kind = as_string(need(j, "kind", where), where + ".kind");
  if (kind != "P" && kind != "I") fail(where + ".kind", "expected \"P\" or \"I\"");
  const Quiver& q = alg->quiver();
  SummandMap f = zero_map(alg, kind == "P" ? StandardKind::P : StandardKind::I,
                          summands_from_json(q, need(j, "source", where), where + ".source"),
                          summands_from_json(q, need(j, "target", where), where + ".target"));
  const json& ej = need(j, "entries", where);
  if (!ej.is_array() || ej.size() != f.src.size()) fail(where + ".entries", "expected one row per source summand");
  for (std::size_t r = 0; r < f.src.size(); ++r) {
    if (!ej[r].is_array() || ej[r].size() != f.tgt.size())
      fail(where + ".entries[" + std::to_string(r) + "]", "expected one entry per target summand");
    for (std::size_t c = 0; c < f.tgt.size(); ++c) {
      const std::string w = where + ".entries[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      AlgElement u = element_from_json(*alg, ej[r][c], w);
      const AlgElement& z = f.entries[r][c];
      if (u.degree != z.degree || u.source != z.source || u.target != z.target)
        fail(w, "entry does not live in e_b Λ_{s-t} e_a for its summands");
      f.entries[r][c] = std::move(u);
    }
  }
  return f;
}

namespace {

struct ModuleResolver {
  const AlgebraPtr& alg;
  const json& blocks;
  std::map<std::string, ModPtr>& done;
  std::set<std::string> active;

  ModPtr get(const std::string& name, const std::string& from) {
    if (auto it = done.find(name); it != done.end()) return it->second;
    if (!blocks.contains(name)) fail(from, "dangling module reference '" + name + "'");
    if (active.count(name)) fail(from, "cyclic module reference through '" + name + "'");
    active.insert(name);
    ModPtr m = build(blocks[name], "modules." + name);
    active.erase(name);
    done[name] = m;
    return m;
  }

  ModPtr build(const json& b, const std::string& where) {
    if (!b.is_object()) fail(where, "expected an object");
    const Quiver& q = alg->quiver();
    if (b.contains("standard")) {
      const json& s = b["standard"];
      const std::string w = where + ".standard";
      const std::string kind = as_string(need(s, "kind", w), w + ".kind");
      StandardKind k;
      if (kind == "P") k = StandardKind::P;
      else if (kind == "I") k = StandardKind::I;
      else if (kind == "S") k = StandardKind::S;
      else fail(w + ".kind", "expected \"P\", \"I\" or \"S\"");
      const int a = vertex_of(q, need(s, "vertex", w), w + ".vertex");
      const int shift = s.contains("shift") ? as_int(s["shift"], w + ".shift") : 0;
      std::optional<std::pair<int, int>> window;
      if (s.contains("window")) {
        const json& wj = s["window"];
        if (!wj.is_array() || wj.size() != 2) fail(w + ".window", "expected [lo, hi]");
        window = std::make_pair(as_int(wj[0], w + ".window[0]"), as_int(wj[1], w + ".window[1]"));
      }
      const int cap = s.contains("cap") ? as_int(s["cap"], w + ".cap") : 10;
      return standard(alg, k, a, shift, window, cap);
    }
    if (b.contains("sum")) {
      const json& s = b["sum"];
      if (!s.is_array() || s.empty()) fail(where + ".sum", "expected a non-empty array of module names");
      std::vector<ModPtr> parts;
      for (std::size_t k = 0; k < s.size(); ++k)
        parts.push_back(get(as_string(s[k], where + ".sum[" + std::to_string(k) + "]"), where + ".sum"));
      return direct_sum(parts);
    }
    if (b.contains("shift")) {
      const json& s = b["shift"];
      const std::string w = where + ".shift";
      ModPtr base = get(as_string(need(s, "of", w), w + ".of"), w + ".of");
      return shift(base, as_int(need(s, "by", w), w + ".by"));
    }
    return module_from_json(alg, b, where);
  }
};

json normalize_module_block(const AlgebraPtr& alg, const json& b, const ModPtr& m) {
  if (b.contains("standard") || b.contains("sum") || b.contains("shift")) {
    json out = b;
    if (out.contains("standard")) {
      json& s = out["standard"];
      s["vertex"] = as_label(s["vertex"], "");
      if (!s.contains("shift")) s["shift"] = 0;
    }
    return out;
  }
  (void)alg;
  return module_to_json(*m);
}

}  // namespace

Problem parse_problem(const json& doc) {
  Problem p;
  p.algebra = algebra_from_json(doc);
  json modules = json::object();
  if (doc.contains("modules")) {
    const json& mj = doc["modules"];
    if (!mj.is_object()) fail("modules", "expected an object of named module blocks");
    ModuleResolver res{p.algebra, mj, p.modules, {}};
    for (const auto& [name, block] : mj.items()) {
      res.get(name, "modules");
      p.module_order.push_back(name);
      modules[name] = normalize_module_block(p.algebra, block, p.modules[name]);
    }
  }
  json tasks = json::array();
  if (doc.contains("tasks")) {
    const json& tj = doc["tasks"];
    if (!tj.is_array()) fail("tasks", "expected an array");
    std::set<std::string> names;
    for (std::size_t k = 0; k < tj.size(); ++k) {
      const std::string w = "tasks[" + std::to_string(k) + "]";
      Task t;
      t.name = as_string(need(tj[k], "name", w), w + ".name");
      t.command = as_string(need(tj[k], "command", w), w + ".command");
      if (tj[k].contains("args")) {
        t.args = tj[k]["args"];
        if (!t.args.is_object()) fail(w + ".args", "expected an object");
      }
      if (!names.insert(t.name).second) fail(w + ".name", "duplicate task name '" + t.name + "'");
      tasks.push_back({{"name", t.name}, {"command", t.command}, {"args", t.args}});
      p.tasks.push_back(std::move(t));
    }
  }
  p.source = algebra_to_json(*p.algebra);
  p.source["modules"] = modules;
  p.source["tasks"] = tasks;
  return p;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": invalid JSON (" +
                     e.what() + ")");
  }
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_problem(parse_json_text(ss.str()));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string canonical_text(const json& j) { return j.dump(2) + "\n"; }

std::string serialize_problem(const Problem& p) { return canonical_text(p.source); }

}  // namespace gradrep
