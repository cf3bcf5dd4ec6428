#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xxent/asymptotics.hpp"
#include "xxent/bulk.hpp"
#include "xxent/ed_oracle.hpp"
#include "xxent/ground_state.hpp"
#include "xxent/limit_temperature.hpp"
#include "xxent/thermal_core.hpp"

namespace py = pybind11;
using namespace xxent;

namespace {

py::dict as_dict(const PairDensity& pd) {
  py::dict d;
  d["p_plus"] = pd.p_plus;
  d["p"] = pd.p;
  d["p_minus"] = pd.p_minus;
  d["alpha"] = pd.alpha;
  return d;
}

py::dict as_dict(const LimitTemperatureResult& r) {
  static const char* names[] = {"exact", "bulk", "asymptotic"};
  py::list thresholds;
  for (const auto& iv : r.thresholds) thresholds.append(py::make_tuple(iv.t_on, iv.t_off));
  py::dict d;
  d["upper"] = r.upper;
  d["thresholds"] = thresholds;
  d["method"] = names[static_cast<int>(r.method)];
  d["flags"] = r.warnings.flags();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pairwise concurrence of the cyclic XX chain in a transverse field.";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<ChainSpec>(m, "Chain")
      .def(py::init<int, double, double>(), py::arg("n"), py::arg("v"), py::arg("b"))
      .def_property_readonly("n", &ChainSpec::n)
      .def_property_readonly("v", &ChainSpec::v)
      .def_property_readonly("b", &ChainSpec::b)
      .def("__repr__", [](const ChainSpec& s) {
        return "Chain(n=" + std::to_string(s.n()) + ", v=" + py::repr(py::float_(s.v())).cast<std::string>() +
               ", b=" + py::repr(py::float_(s.b())).cast<std::string>() + ")";
      });

  m.def("critical_fields", [](const ChainSpec& s) { return critical_fields(s).fields; }, py::arg("chain"),
        "Fields b_1 > ... > b_n at which the ground-state fermion number steps.");
  m.def("ground_sector", [](const ChainSpec& s) {
        const auto g = ground_sector(s);
        return py::make_tuple(g.N, g.degenerate);
      }, py::arg("chain"));
  m.def("ground_concurrence", &gs_concurrence, py::arg("n"), py::arg("N"), py::arg("L"), py::arg("odd_af") = false);

  m.def("pair_density", [](const ChainSpec& s, double t, int L) {
        if (t == 0.0) return as_dict(zero_temperature_limit_pair_density(s, L));
        return as_dict(pair_density(s, t, L));
      }, py::arg("chain"), py::arg("T"), py::arg("L"));
  m.def("concurrence", [](const ChainSpec& s, double t, int L) {
        if (t == 0.0) return concurrence(zero_temperature_limit_pair_density(s, L));
        return concurrence(pair_density(s, t, L));
      }, py::arg("chain"), py::arg("T"), py::arg("L"));
  m.def("log_partition", &log_partition_function, py::arg("chain"), py::arg("T"));

  m.def("bulk_pair_density", [](int L, double t, double b, double v) { return as_dict(bulk_pair_density(L, t, b, v)); },
        py::arg("L"), py::arg("T"), py::arg("b"), py::arg("v") = 1.0);
  m.def("bulk_concurrence", [](int L, double t, double b, double v) { return concurrence(bulk_pair_density(L, t, b, v)); },
        py::arg("L"), py::arg("T"), py::arg("b"), py::arg("v") = 1.0);
  m.def("high_field_concurrence", [](const ChainSpec& s, double t, int L) { return high_field_concurrence(s, 1.0 / t, L); },
        py::arg("chain"), py::arg("T"), py::arg("L"));

  m.def("limit_temperature", [](const ChainSpec& s, int L) { return as_dict(limit_temperature(s, L)); },
        py::arg("chain"), py::arg("L"));
  m.def("bulk_limit_temperature", [](int L, double b, double v) { return as_dict(bulk_limit_temperature_at(L, b, v)); },
        py::arg("L"), py::arg("b"), py::arg("v") = 1.0);
  m.def("plateau_limit_temperature", &plateau_limit_temperature, py::arg("n"), py::arg("v"), py::arg("L"),
        py::arg("odd_af") = false);

  m.def("ed_concurrence", [](const ChainSpec& s, double t, int L) {
        const auto blocks = ed::build_blocks(s);
        const auto state = t == 0.0 ? ed::ground_state(blocks, s.n(), s.abs_v()) : ed::thermal_state(blocks, s.n(), t);
        return ed::wootters_concurrence(ed::reduced_pair_density(state, 0, L));
      }, py::arg("chain"), py::arg("T"), py::arg("L"),
      "Concurrence from dense diagonalization of the spin Hamiltonian (small n only).");
}
