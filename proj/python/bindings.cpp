#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gradrep/commands.hpp"
#include "gradrep/error.hpp"

namespace py = pybind11;
using namespace gradrep;

PYBIND11_MODULE(_gradrep, m) {
  m.doc() = "Graded representations of quivers with relations";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);
  py::register_exception<WindowError>(m, "WindowError", precondition.ptr());
  py::register_exception<UnsupportedRadical>(m, "UnsupportedRadical", precondition.ptr());
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);
  (void)input_error;

  py::class_<Problem>(m, "Problem")
      .def_property_readonly("modules", [](const Problem& p) { return p.module_order; })
      .def_property_readonly("vertices", [](const Problem& p) { return p.algebra->quiver().vertices(); })
      .def_property_readonly("field", [](const Problem& p) { return p.algebra->field().to_string(); })
      .def_property_readonly("tasks", [](const Problem& p) {
        std::vector<std::string> names;
        for (const auto& t : p.tasks) names.push_back(t.name);
        return names;
      })
      .def("serialize", &serialize_problem)
      .def(
          "run_json",
          [](const Problem& p, const std::string& command, const std::string& args) {
            json a = parse_json_text(args);
            json out;
            {
              py::gil_scoped_release release;
              out = run_command(p, command, a);
            }
            return out.dump();
          },
          py::arg("command"), py::arg("args") = "{}")
      .def("run_tasks_json", [](const Problem& p) { return run_tasks(p).dump(); })
      .def("render_table", [](const Problem& p, const std::string& command, const std::string& result) {
        return render_table(p, command, parse_json_text(result));
      });

  m.def("load_problem", &load_problem, py::arg("path"));
  m.def(
      "parse_problem", [](const std::string& text) { return parse_problem(parse_json_text(text)); },
      py::arg("text"));
  m.def("command_names", &command_names);
}
