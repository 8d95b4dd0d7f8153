#include "gradrep/commands.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "gradrep/artheory.hpp"
#include "gradrep/criteria.hpp"
#include "gradrep/error.hpp"

namespace gradrep {

namespace {

using Handler = std::function<json(const Problem&, const json&)>;

std::string str_arg(const json& args, const char* key) {
  if (!args.contains(key)) throw InputError(std::string("missing argument --") + key);
  const json& v = args[key];
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  throw InputError(std::string("argument --") + key + " must be a string");
}

std::string str_arg(const json& args, const char* key, const std::string& fallback) {
  return args.contains(key) ? str_arg(args, key) : fallback;
}

int int_arg(const json& args, const char* key, int fallback) {
  if (!args.contains(key)) return fallback;
  const json& v = args[key];
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    try {
      std::size_t used = 0;
      int n = std::stoi(v.get<std::string>(), &used);
      if (used == v.get<std::string>().size()) return n;
    } catch (const std::exception&) {
    }
  }
  throw InputError(std::string("argument --") + key + " must be an integer");
}

std::pair<int, int> parse_window(const std::string& text) {
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw InputError("--window expects lo:hi, got '" + text + "'");
  try {
    std::size_t u1 = 0, u2 = 0;
    const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
    int lo = std::stoi(a, &u1), hi = std::stoi(b, &u2);
    if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument("");
    if (hi < lo - 1) throw InputError("--window: inverted window " + text);
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw InputError("--window expects integers lo:hi, got '" + text + "'");
  } catch (const std::out_of_range&) {
    throw InputError("--window bounds out of range: '" + text + "'");
  }
}

ModPtr module_arg(const Problem& p, const json& args, const char* key) {
  ModPtr m = p.module(str_arg(args, key));
  if (args.contains("window")) {
    auto [lo, hi] = parse_window(str_arg(args, "window"));
    m = restrict_window(m, lo, hi);
  }
  return m;
}

json json_arg(const json& args, const char* key) {
  if (!args.contains(key)) throw InputError(std::string("missing argument --") + key);
  const json& v = args[key];
  if (v.is_object()) return v;
  const std::string path = str_arg(args, key);
  std::ifstream in(path);
  if (!in) throw InputError(std::string("--") + key + ": cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json_text(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::uint64_t seed_of(const json& args) { return static_cast<std::uint64_t>(int_arg(args, "seed", 0)); }
int budget_of(const json& args) { return int_arg(args, "budget", 64); }

json elements_to_json(const GradedAlgebra& alg, const std::vector<PureElement>& els) {
  json out = json::array();
  for (const auto& e : els)
    out.push_back({{"degree", e.degree}, {"vertex", alg.quiver().vertices()[e.vertex]}, {"vector", matrix_to_json(e.vector.transpose())[0]}});
  return out;
}

json scalars_to_json(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

json resolution_to_json(const GradedAlgebra& alg, const GradedDimension& d) {
  json terms = json::array();
  for (const auto& t : d.resolution.terms) terms.push_back(summands_to_json(alg, t));
  json maps = json::array();
  for (const auto& f : d.resolution.maps) maps.push_back(summand_map_to_json(f));
  json out = {{"value", d.label()}, {"cap", d.cap}, {"terms", terms}, {"maps", maps}};
  if (!d.value) out["reason"] = d.reason;
  return out;
}

json indec_to_json(const IndecVerdict& v) {
  return {{"verdict", v.label()},
          {"end_dim", v.end_dim},
          {"radical_dim", v.radical_dim},
          {"candidates_tried", v.tried},
          {"detail", v.detail}};
}

json sequence_to_json(const AlmostSplitSequence& s) {
  return {{"direction", s.direction},
          {"left", module_to_json(*s.left)},
          {"middle", module_to_json(*s.middle)},
          {"right", module_to_json(*s.right)},
          {"f", morphism_to_json(s.f)},
          {"g", morphism_to_json(s.g)},
          {"xi", scalars_to_json(s.xi)}};
}

json verdict_to_json(const ArsVerdict& v) {
  return {{"result", v.label()},
          {"exact", v.exact},
          {"nonsplit", v.nonsplit},
          {"socle", v.socle},
          {"left_is_tau", v.left_is_tau},
          {"ends_indecomposable", v.ends_indecomposable},
          {"left_verdict", v.left_verdict},
          {"right_verdict", v.right_verdict},
          {"ext_dim", v.ext_dim},
          {"radical_dim", v.radical_dim},
          {"xi", scalars_to_json(v.xi)}};
}

json cmd_validate(const Problem& p, const json&) {
  json mods = json::object();
  bool all = true;
  for (const auto& name : p.module_order) {
    ValidationReport r = validate(*p.modules.at(name));
    json e = {{"ok", r.ok}};
    if (!r.ok) {
      all = false;
      e["relation"] = r.relation;
      e["degree"] = r.degree;
      e["message"] = r.message;
    }
    mods[name] = e;
  }
  return {{"ok", all}, {"algebra", algebra_to_json(*p.algebra)}, {"modules", mods}};
}

json cmd_dims(const Problem& p, const json& args) {
  auto one = [](const ModPtr& m) {
    json j = module_to_json(*m);
    j.erase("maps");
    j["total_dim"] = m->exact() ? json(m->total_dim()) : json("truncated");
    if (!m->exact()) j["window_dim"] = m->total_dim();
    return j;
  };
  if (args.contains("module")) return one(module_arg(p, args, "module"));
  json out = json::object();
  for (const auto& name : p.module_order) out[name] = one(p.modules.at(name));
  return out;
}

json cmd_hom(const Problem& p, const json& args) {
  ModPtr m = module_arg(p, args, "source"), n = module_arg(p, args, "target");
  HomSpace h = ghom(m, n);
  json basis = json::array();
  for (const auto& f : h.basis) basis.push_back(morphism_to_json(f));
  json out = {{"dim", h.dim()}, {"basis", basis}};
  if (m->exact() && n->exact()) {
    StableHomDims s = stable_hom_dims(m, n);
    out["underline_dim"] = s.underline;
    out["overline_dim"] = s.overline;
  }
  return out;
}

json cmd_ext1(const Problem& p, const json& args) {
  ModPtr m = module_arg(p, args, "source"), n = module_arg(p, args, "target");
  ExtSpace e = ext1(m, n);
  json reps = json::array();
  for (int k = 0; k < e.dim(); ++k) {
    std::vector<Scalar> c(e.dim(), Scalar::zero(m->field()));
    c[k] = Scalar::one(m->field());
    reps.push_back(morphism_to_json(e.representative(c)));
  }
  return {{"dim", e.dim()},
          {"syzygy", module_to_json(*e.pres.kernel.module)},
          {"cover", summands_to_json(*p.algebra, e.pres.cover.projective.summands)},
          {"representatives", reps}};
}

json cmd_rad(const Problem& p, const json& args) {
  SubModule r = radical(module_arg(p, args, "module"));
  return {{"module", module_to_json(*r.module)}, {"inclusion", morphism_to_json(r.inclusion)}};
}

json cmd_top(const Problem& p, const json& args) {
  ModPtr m = module_arg(p, args, "module");
  QuotientModule t = top(m);
  json out = {{"module", module_to_json(*t.module)}};
  try {
    out["basis"] = elements_to_json(*p.algebra, top_basis(m));
  } catch (const WindowError& e) {
    out["basis_note"] = e.what();
  }
  return out;
}

json cmd_soc(const Problem& p, const json& args) {
  ModPtr m = module_arg(p, args, "module");
  SubModule s = socle(m);
  json out = {{"module", module_to_json(*s.module)}};
  if (m->exact()) {
    out["basis"] = elements_to_json(*p.algebra, soc_basis(m));
  } else {
    out["basis_note"] = "computed on degrees " + std::to_string(s.module->lo()) + ".." +
                        std::to_string(s.module->hi()) + " where the module is known with its arrows";
  }
  return out;
}

json cmd_cover(const Problem& p, const json& args) {
  Cover c = projective_cover(module_arg(p, args, "module"));
  return {{"top", elements_to_json(*p.algebra, c.top)},
          {"projective", summands_to_json(*p.algebra, c.projective.summands)},
          {"kernel", module_to_json(*syzygy(c).module)}};
}

json cmd_envelope(const Problem& p, const json& args) {
  Envelope e = injective_envelope(module_arg(p, args, "module"));
  return {{"socle", elements_to_json(*p.algebra, e.socle)},
          {"injective", summands_to_json(*p.algebra, e.injective.summands)}};
}

json cmd_present(const Problem& p, const json& args) {
  Presentation pr = minimal_presentation(module_arg(p, args, "module"));
  return {{"p0", summands_to_json(*p.algebra, pr.d1.tgt)},
          {"p1", summands_to_json(*p.algebra, pr.d1.src)},
          {"matrix", summand_map_to_json(pr.d1)},
          {"minimal", pr.is_minimal()}};
}

json cmd_copresent(const Problem& p, const json& args) {
  Copresentation c = minimal_copresentation(module_arg(p, args, "module"));
  return {{"i0", summands_to_json(*p.algebra, c.i0)},
          {"i1", summands_to_json(*p.algebra, c.i1)},
          {"matrix", summand_map_to_json(c.d0)},
          {"minimal", c.is_minimal()}};
}

json cmd_transpose(const Problem& p, const json& args) {
  Transpose t = transpose(module_arg(p, args, "module"));
  return {{"presentation", summand_map_to_json(t.presentation.d1)},
          {"transpose_matrix", summand_map_to_json(t.matrix)},
          {"opposite_algebra", algebra_to_json(*t.matrix.algebra)},
          {"module", module_to_json(*t.module)}};
}

json cmd_nakayama(const Problem& p, const json& args) {
  SummandMap f = args.contains("map") ? summand_map_from_json(p.algebra, json_arg(args, "map"))
                                      : minimal_presentation(module_arg(p, args, "module")).d1;
  const bool forward = f.kind == StandardKind::P;
  SummandMap g = forward ? nakayama(f) : nakayama_inverse(f);
  return {{"functor", forward ? "nu" : "nu-inverse"},
          {"input", summand_map_to_json(f)},
          {"output", summand_map_to_json(g)}};
}

json translate_json(const Translate& t) {
  json out = {{"module", module_to_json(*t.module)}, {"verdict", t.verdict}};
  if (!t.warning.empty()) out["warning"] = t.warning;
  return out;
}

json cmd_tau(const Problem& p, const json& args) {
  return translate_json(tau(module_arg(p, args, "module"), true, budget_of(args), seed_of(args)));
}

json cmd_tau_inv(const Problem& p, const json& args) {
  return translate_json(tau_inverse(module_arg(p, args, "module"), true, budget_of(args), seed_of(args)));
}

json cmd_ars(const Problem& p, const json& args) {
  const std::string dir = str_arg(args, "direction", "ending");
  if (dir != "ending" && dir != "starting") throw InputError("--direction must be 'ending' or 'starting'");
  AlmostSplitSequence s = almost_split_sequence(module_arg(p, args, "module"),
                                                dir == "ending" ? Direction::Ending : Direction::Starting,
                                                budget_of(args), seed_of(args));
  json out = sequence_to_json(s);
  out["certificate"] = verdict_to_json(verify_almost_split(s, budget_of(args), seed_of(args)));
  return out;
}

json cmd_verify_ars(const Problem& p, const json& args) {
  json j = json_arg(args, "sequence");
  const json& body = j.contains("sequence") ? j["sequence"] : j;
  auto need = [&](const char* k) -> const json& {
    if (!body.contains(k)) throw InputError(std::string("sequence: missing field '") + k + "'");
    return body[k];
  };
  AlmostSplitSequence s;
  s.left = module_from_json(p.algebra, need("left"), "sequence.left");
  s.middle = module_from_json(p.algebra, need("middle"), "sequence.middle");
  s.right = module_from_json(p.algebra, need("right"), "sequence.right");
  s.f = morphism_from_json(s.left, s.middle, need("f"), "sequence.f");
  s.g = morphism_from_json(s.middle, s.right, need("g"), "sequence.g");
  return verdict_to_json(verify_almost_split(s, budget_of(args), seed_of(args)));
}

json cmd_ar_formula(const Problem& p, const json& args) {
  ArFormulaReport r = ar_formula_check(module_arg(p, args, "module"), module_arg(p, args, "with"));
  return {{"underline_hom_M_X", r.underline_hom},
          {"ext1_X_tauM", r.ext_x_tau_m},
          {"first_holds", r.first_holds()},
          {"overline_hom_X_M", r.overline_hom},
          {"ext1_tauinvM_X", r.ext_tauinv_m_x},
          {"second_holds", r.second_holds()}};
}

json cmd_pd(const Problem& p, const json& args) {
  const int cap = int_arg(args, "cap", 10);
  if (cap < 0) throw InputError("--cap must be non-negative");
  const std::string kind = str_arg(args, "kind", "proj");
  if (kind != "proj" && kind != "inj" && kind != "both") throw InputError("--kind must be proj, inj or both");
  const std::string which = str_arg(args, "simple", "all");
  const Quiver& q = p.algebra->quiver();
  std::vector<int> verts;
  if (which == "all") {
    for (int x = 0; x < q.num_vertices(); ++x) verts.push_back(x);
  } else {
    if (!q.has_vertex(which)) throw InputError("--simple: unknown vertex '" + which + "'");
    verts.push_back(q.vertex_index(which));
  }
  json out = json::object();
  for (int x : verts) {
    ModPtr s = standard(p.algebra, StandardKind::S, x, 0);
    json row = json::object();
    if (kind != "inj") row["pd"] = resolution_to_json(*p.algebra, projective_dimension(s, cap));
    if (kind != "proj") row["id"] = resolution_to_json(*p.algebra, injective_dimension(s, cap));
    out[q.vertices()[x]] = row;
  }
  return {{"cap", cap}, {"simples", out}};
}

NoetherianClaim noetherian_arg(const json& args) {
  const std::string v = str_arg(args, "noetherian", "none");
  if (v != "none" && v != "left" && v != "right" && v != "both")
    throw InputError("--noetherian expects none, left, right or both, got '" + v + "'");
  return {v == "left" || v == "both", v == "right" || v == "both"};
}

json cmd_criteria(const Problem& p, const json& args) {
  return report_to_json(*p.algebra, existence_report(p.algebra, int_arg(args, "cap", 10), noetherian_arg(args)));
}

json cmd_indec(const Problem& p, const json& args) {
  return indec_to_json(is_strongly_indecomposable(module_arg(p, args, "module"), budget_of(args), seed_of(args)));
}

json cmd_analyze_quiver(const Problem& p, const json&) {
  const Quiver& q = p.algebra->quiver();
  QuiverAnalysis a = q.analyze();
  json cycle = json::array();
  for (int v : a.cycle) cycle.push_back(q.vertices()[v]);
  return {{"acyclic", a.acyclic},
          {"infinite_forward_path", a.infinite_forward_path},
          {"infinite_backward_path", a.infinite_backward_path},
          {"strongly_locally_finite", a.strongly_locally_finite},
          {"frontier_forward", a.frontier_forward},
          {"frontier_backward", a.frontier_backward},
          {"cycle", cycle},
          {"caveat", a.caveat}};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"validate", cmd_validate},   {"dims", cmd_dims},
      {"hom", cmd_hom},             {"ext1", cmd_ext1},
      {"rad", cmd_rad},             {"top", cmd_top},
      {"soc", cmd_soc},             {"cover", cmd_cover},
      {"envelope", cmd_envelope},   {"present", cmd_present},
      {"copresent", cmd_copresent}, {"transpose", cmd_transpose},
      {"nakayama", cmd_nakayama},   {"tau", cmd_tau},
      {"tau-inv", cmd_tau_inv},     {"ars", cmd_ars},
      {"verify-ars", cmd_verify_ars}, {"ar-formula", cmd_ar_formula},
      {"pd", cmd_pd},               {"criteria", cmd_criteria},
      {"analyze-quiver", cmd_analyze_quiver}, {"indec", cmd_indec},
  };
  return h;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : handlers()) v.push_back(k);
    return v;
  }();
  return names;
}

json run_command(const Problem& p, const std::string& command, const json& args) {
  auto it = handlers().find(command);
  if (it == handlers().end()) throw InputError("unknown command '" + command + "'");
  return it->second(p, args.is_null() ? json::object() : args);
}

json run_tasks(const Problem& p, int jobs, const std::function<void(const Task&, const json&)>& on_done) {
  const std::size_t n = p.tasks.size();
  std::vector<json> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  std::mutex done_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < n; k = next++) {
      const Task& t = p.tasks[k];
      try {
        results[k] = run_command(p, t.command, t.args);
      } catch (...) {
        errors[k] = std::current_exception();
        continue;
      }
      if (on_done) {
        std::lock_guard<std::mutex> lock(done_mutex);
        on_done(t, results[k]);
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
  std::vector<std::thread> pool;
  for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  json out = json::object();
  for (std::size_t k = 0; k < n; ++k) out[p.tasks[k].name] = std::move(results[k]);
  return out;
}

std::string render_table(const Problem& p, const std::string& command, const json& r) {
  std::ostringstream out;
  if (command == "criteria") {
    NoetherianClaim claim;
    claim.left = r["noetherian"]["left"].value("asserted", false);
    claim.right = r["noetherian"]["right"].value("asserted", false);
    return report_to_table(*p.algebra, existence_report(p.algebra, r.value("cap", 10), claim));
  }
  if (command == "pd") {
    out << "simple  pd              id\n";
    for (const auto& [v, row] : r["simples"].items()) {
      auto cell = [&](const char* k) {
        if (!row.contains(k)) return std::string("-");
        std::string s = row[k]["value"].get<std::string>();
        return s;
      };
      std::string pd = cell("pd");
      out << v << std::string(v.size() < 8 ? 8 - v.size() : 1, ' ') << pd
          << std::string(pd.size() < 16 ? 16 - pd.size() : 1, ' ') << cell("id") << "\n";
    }
    return out.str();
  }
  if (command == "dims" && r.contains("dims")) {
    for (const auto& [k, v] : r["dims"].items()) out << k << "  " << v.get<int>() << "\n";
    out << "total " << r["total_dim"].dump() << "\n";
    return out.str();
  }
  std::function<void(const json&, const std::string&)> walk = [&](const json& j, const std::string& prefix) {
    if (j.is_object() && !j.empty()) {
      for (const auto& [k, v] : j.items()) walk(v, prefix.empty() ? k : prefix + "." + k);
    } else {
      out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
  };
  walk(r, "");
  return out.str();
}

}  // namespace gradrep
