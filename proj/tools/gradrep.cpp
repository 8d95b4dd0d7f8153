#include <CLI11.hpp>

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "gradrep/commands.hpp"
#include "gradrep/error.hpp"

using namespace gradrep;

namespace {

struct Options {
  std::string file, module, source, target, with, direction = "ending", sequence, map, simple = "all",
      kind = "proj", window, out, noetherian = "none";
  std::string out_dir;
  int cap = 10, seed = 0, budget = 64, jobs = 1;
  bool as_json = false, as_table = false;
};

json collect_args(CLI::App* sub, const Options& o) {
  json a = json::object();
  auto put = [&](const char* flag, const char* key, const auto& value) {
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if (opt && opt->count()) a[key] = value;
  };
  put("--module", "module", o.module);
  put("--source", "source", o.source);
  put("--target", "target", o.target);
  put("--with", "with", o.with);
  put("--direction", "direction", o.direction);
  put("--sequence", "sequence", o.sequence);
  put("--map", "map", o.map);
  put("--simple", "simple", o.simple);
  put("--kind", "kind", o.kind);
  put("--window", "window", o.window);
  put("--cap", "cap", o.cap);
  put("--seed", "seed", o.seed);
  put("--budget", "budget", o.budget);
  put("--noetherian", "noetherian", o.noetherian);
  return a;
}

void write_atomically(const std::string& path, const std::string& text) {
  std::filesystem::path target(path);
  if (const char* dir = std::getenv("GRADREP_OUT_DIR"); dir && target.is_relative()) target = std::filesystem::path(dir) / target;
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  std::filesystem::path tmp = target;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()) % 100000);
  {
    std::ofstream f(tmp);
    if (!f) throw InputError("cannot write '" + tmp.string() + "'");
    f << text;
  }
  std::filesystem::rename(tmp, target);
}

std::string task_file_name(const std::string& name) {
  std::string out;
  for (unsigned char c : name) out += std::isalnum(c) || c == '-' || c == '.' ? static_cast<char>(c) : '_';
  return out.empty() ? "task" : out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded representations of bound quivers: covers, presentations, AR theory, existence criteria"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("file", o.file, "problem file (JSON)")->required();
    s->add_option("--window", o.window, "restrict the module(s) to degrees lo:hi");
    s->add_option("--cap", o.cap, "degree / resolution cap");
    s->add_option("--seed", o.seed, "seed for randomized searches");
    s->add_option("--budget", o.budget, "number of random candidates in searches");
    s->add_flag("--json", o.as_json, "JSON output (default)");
    s->add_flag("--table", o.as_table, "plain-text output");
    s->add_option("--out", o.out, "write the result to this path");
  };
  const std::map<std::string, std::string> help = {
      {"validate", "check the algebra and every module against the relations"},
      {"dims", "dimension vectors"},
      {"hom", "graded Hom space GHom(source, target)"},
      {"ext1", "Ext^1(source, target)"},
      {"rad", "radical"},
      {"top", "top"},
      {"soc", "socle"},
      {"cover", "projective cover"},
      {"envelope", "injective envelope"},
      {"present", "minimal projective presentation"},
      {"copresent", "minimal injective copresentation"},
      {"transpose", "transpose Tr M"},
      {"nakayama", "Nakayama functor on a map between projectives (or its inverse on injectives)"},
      {"tau", "Auslander-Reiten translate"},
      {"tau-inv", "inverse Auslander-Reiten translate"},
      {"ars", "almost split sequence ending or starting at a module"},
      {"verify-ars", "verify a serialized almost split sequence"},
      {"ar-formula", "check both Auslander-Reiten formulas for a pair of modules"},
      {"pd", "graded projective / injective dimension of simples"},
      {"criteria", "existence criteria for almost split sequences and triangles"},
      {"analyze-quiver", "cycle and infinite-path analysis"},
      {"indec", "indecomposability verdict from the endomorphism algebra"},
      {"tasks", "run the tasks listed in the problem file"},
  };
  std::map<CLI::App*, std::string> subs;
  for (const auto& [name, text] : help) {
    CLI::App* s = app.add_subcommand(name, text);
    common(s);
    subs[s] = name;
  }
  for (auto& [s, name] : subs) {
    if (name == "hom" || name == "ext1") {
      s->add_option("--source", o.source)->required();
      s->add_option("--target", o.target)->required();
    } else if (name == "ar-formula") {
      s->add_option("--module", o.module)->required();
      s->add_option("--with", o.with)->required();
    } else if (name == "ars") {
      s->add_option("--module", o.module)->required();
      s->add_option("--direction", o.direction)->check(CLI::IsMember({"ending", "starting"}));
    } else if (name == "verify-ars") {
      s->add_option("--sequence", o.sequence, "JSON file with left, middle, right, f, g")->required();
    } else if (name == "nakayama") {
      auto* mp = s->add_option("--map", o.map, "JSON file with a map between projectives or injectives");
      s->add_option("--module", o.module, "use the minimal presentation map of this module")->excludes(mp);
    } else if (name == "pd") {
      s->add_option("--simple", o.simple, "vertex label or 'all'");
      s->add_option("--kind", o.kind)->check(CLI::IsMember({"proj", "inj", "both"}));
    } else if (name == "criteria") {
      s->add_option("--noetherian", o.noetherian, "assert local noetherianity on a side")
          ->check(CLI::IsMember({"none", "left", "right", "both"}));
    } else if (name == "tasks") {
      s->add_option("--jobs", o.jobs, "run up to this many tasks concurrently")->check(CLI::PositiveNumber);
      s->add_option("--out-dir", o.out_dir, "also write each task's result to <dir>/<task>.json");
    } else if (name == "dims") {
      s->add_option("--module", o.module);
    } else if (name != "validate" && name != "analyze-quiver" && name != "tasks") {
      s->add_option("--module", o.module)->required();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = subs.at(chosen);
  try {
    Problem p = load_problem(o.file);
    json result;
    if (command == "tasks") {
      std::function<void(const Task&, const json&)> write_one;
      if (!o.out_dir.empty())
        write_one = [&](const Task& t, const json& r) {
          write_atomically((std::filesystem::path(o.out_dir) / (task_file_name(t.name) + ".json")).string(),
                           canonical_text(r));
        };
      result = run_tasks(p, o.jobs, write_one);
    } else {
      result = run_command(p, command, collect_args(chosen, o));
    }
    std::string text;
    if (o.as_table && command != "tasks") {
      text = render_table(p, command, result);
    } else {
      text = canonical_text(result);
    }
    if (o.out.empty()) {
      std::cout << text;
    } else {
      write_atomically(o.out, text);
    }
    return 0;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
