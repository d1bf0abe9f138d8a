// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thermolength/eos.hpp"
#include "thermolength/errors.hpp"
#include "thermolength/metric.hpp"
#include "thermolength/path.hpp"
#include "thermolength/quadrature.hpp"
#include "thermolength/verify.hpp"
#include "thermolength/work.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
namespace tl = thermolength;

namespace {

tl::Path make_path(const std::vector<tl::Segment>& segments) { return tl::Path(segments); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weinhold thermodynamic length and isentropic work for constant-cv gases";

  // Translators run newest first, so the base class is registered before its children.
  auto error = py::register_exception<tl::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<tl::DomainError>(m, "DomainError", error.ptr());
  py::register_exception<tl::SingularityError>(m, "SingularityError", error.ptr());
  py::register_exception<tl::InstabilityError>(m, "InstabilityError", error.ptr());
  py::register_exception<tl::ConvergenceError>(m, "ConvergenceError", error.ptr());
  py::register_exception<tl::UnsupportedModel>(m, "UnsupportedModel", error.ptr());

  py::enum_<tl::Variant>(m, "Variant")
      .value("IDEAL", tl::Variant::kIdeal)
      .value("QUASI_IDEAL", tl::Variant::kQuasiIdeal)
      .value("VAN_DER_WAALS", tl::Variant::kVanDerWaals)
      .value("CUSTOM", tl::Variant::kCustom)
      .def("__str__", [](tl::Variant v) { return std::string(tl::to_string(v)); });

  py::class_<tl::State>(m, "State")
      .def(py::init<double, double>(), "s"_a, "v"_a)
      .def_readwrite("s", &tl::State::s)
      .def_readwrite("v", &tl::State::v)
      .def("__repr__", [](const tl::State& st) {
        return "State(s=" + py::repr(py::float_(st.s)).cast<std::string>() +
               ", v=" + py::repr(py::float_(st.v)).cast<std::string>() + ")";
      });

  py::class_<tl::GasModel>(m, "GasModel")
      .def_static("ideal", &tl::GasModel::ideal, "cv"_a, "R"_a, "s0"_a = 0.0)
      .def_static("quasi_ideal", &tl::GasModel::quasi_ideal, "cv"_a, "R"_a, "b"_a, "s0"_a = 0.0)
      .def_static("van_der_waals", &tl::GasModel::van_der_waals, "cv"_a, "R"_a, "a"_a, "b"_a,
                  "s0"_a = 0.0)
      .def_static(
          "custom",
          [](double cv, double R, std::function<double(double)> f1,
             std::function<double(double)> f1_prime, std::function<double(double)> f1_second,
             std::function<double(double)> f2, std::function<double(double)> f2_prime,
             std::function<double(double)> f2_second, double s0, double v_lower) {
            return tl::GasModel::custom(cv, R, {std::move(f1), std::move(f1_prime), std::move(f1_second)},
                                        {std::move(f2), std::move(f2_prime), std::move(f2_second)},
                                        s0, v_lower);
          },
          "cv"_a, "R"_a, "f1"_a, "f1_prime"_a, "f1_second"_a, "f2"_a, "f2_prime"_a, "f2_second"_a,
          "s0"_a = 0.0, "v_lower"_a = 0.0,
          "Model with caller-supplied volume factors and their first two derivatives.")
      .def_property_readonly("variant", &tl::GasModel::variant)
      .def_property_readonly("cv", &tl::GasModel::cv)
      .def_property_readonly("R", &tl::GasModel::R)
      .def_property_readonly("s0", &tl::GasModel::s0)
      .def_property_readonly("a", &tl::GasModel::a)
      .def_property_readonly("b", &tl::GasModel::b)
      .def_property_readonly("lower_volume", &tl::GasModel::lower_volume)
      .def_property_readonly("is_ideal_like", &tl::GasModel::is_ideal_like)
      .def("f1", &tl::GasModel::f1, "v"_a)
      .def("f2", &tl::GasModel::f2, "v"_a);

  py::class_<tl::ThermoPoint>(m, "ThermoPoint")
      .def_readonly("u", &tl::ThermoPoint::u)
      .def_readonly("T", &tl::ThermoPoint::T)
      .def_readonly("p", &tl::ThermoPoint::p)
      .def_readonly("cv", &tl::ThermoPoint::cv)
      .def_readonly("cp", &tl::ThermoPoint::cp)
      .def_readonly("alpha", &tl::ThermoPoint::alpha)
      .def_readonly("kappa_t", &tl::ThermoPoint::kappa_t)
      .def_property_readonly("gamma", &tl::ThermoPoint::gamma);

  m.def("internal_energy", &tl::internal_energy, "model"_a, "state"_a);
  m.def("temperature", &tl::temperature, "model"_a, "state"_a);
  m.def("pressure", &tl::pressure, "model"_a, "state"_a);
  m.def("thermo_point", &tl::thermo_point, "model"_a, "state"_a);
  m.def("entropy_from_uv", &tl::entropy_from_uv, "model"_a, "u"_a, "v"_a);
  m.def("entropy_on_isotherm", &tl::entropy_on_isotherm, "model"_a, "T"_a, "v"_a);

  py::class_<tl::MetricTensor>(m, "MetricTensor")
      .def_readonly("g_ss", &tl::MetricTensor::g_ss)
      .def_readonly("g_sv", &tl::MetricTensor::g_sv)
      .def_readonly("g_vv", &tl::MetricTensor::g_vv)
      .def_readonly("stable", &tl::MetricTensor::stable)
      .def_property_readonly("determinant", &tl::MetricTensor::determinant);

  m.def("metric_from_hessian", &tl::metric_from_hessian, "model"_a, "state"_a);
  m.def("metric_from_coefficients", &tl::metric_from_coefficients, "point"_a, "v"_a);

  py::class_<tl::QuadratureConfig>(m, "QuadratureConfig")
      .def(py::init([](double rel_tol, double abs_tol, int max_subdivisions) {
             tl::QuadratureConfig cfg{rel_tol, abs_tol, max_subdivisions};
             cfg.validate();
             return cfg;
           }),
           "rel_tol"_a = 1e-10, "abs_tol"_a = 1e-12, "max_subdivisions"_a = 2000)
      .def_readonly("rel_tol", &tl::QuadratureConfig::rel_tol)
      .def_readonly("abs_tol", &tl::QuadratureConfig::abs_tol)
      .def_readonly("max_subdivisions", &tl::QuadratureConfig::max_subdivisions);

  py::class_<tl::LengthResult>(m, "LengthResult")
      .def_readonly("value", &tl::LengthResult::value)
      .def_readonly("estimated_error", &tl::LengthResult::estimated_error)
      .def_readonly("panels_used", &tl::LengthResult::panels_used);

  py::class_<tl::Isentrope>(m, "Isentrope")
      .def(py::init<double, double, double>(), "s"_a, "v_start"_a, "v_end"_a)
      .def_readonly("s", &tl::Isentrope::s)
      .def_readonly("v_start", &tl::Isentrope::v_start)
      .def_readonly("v_end", &tl::Isentrope::v_end);
  py::class_<tl::Isochore>(m, "Isochore")
      .def(py::init<double, double, double>(), "v"_a, "s_start"_a, "s_end"_a)
      .def_readonly("v", &tl::Isochore::v)
      .def_readonly("s_start", &tl::Isochore::s_start)
      .def_readonly("s_end", &tl::Isochore::s_end);
  py::class_<tl::Isotherm>(m, "Isotherm")
      .def(py::init<double, double, double>(), "T"_a, "v_start"_a, "v_end"_a)
      .def_readonly("T", &tl::Isotherm::T)
      .def_readonly("v_start", &tl::Isotherm::v_start)
      .def_readonly("v_end", &tl::Isotherm::v_end);
  py::class_<tl::LinearSV>(m, "LinearSV")
      .def(py::init<tl::State, tl::State>(), "start"_a, "end"_a)
      .def_readonly("start", &tl::LinearSV::start)
      .def_readonly("end", &tl::LinearSV::end);

  m.def(
      "path_length",
      [](const tl::GasModel& model, const std::vector<tl::Segment>& segments,
         const tl::QuadratureConfig& cfg) { return tl::path_length(model, make_path(segments), cfg); },
      "model"_a, "segments"_a, "config"_a = tl::QuadratureConfig{},
      "Length of a piecewise path given as a list of Isentrope/Isochore/Isotherm/LinearSV.");

  m.def("isentropic_length_closed", &tl::isentropic_length_closed, "model"_a, "s"_a, "v1"_a, "v2"_a);
  m.def("isentropic_length_signed", &tl::isentropic_length_signed, "model"_a, "s"_a, "v_start"_a,
        "v_end"_a);
  m.def("isentropic_length_numeric", &tl::isentropic_length_numeric, "model"_a, "s"_a, "v1"_a,
        "v2"_a, "config"_a = tl::QuadratureConfig{});
  m.def("rarefaction_length", &tl::rarefaction_length, "gamma"_a, "p0"_a, "V0"_a, "p1"_a);

  py::class_<tl::WorkResult>(m, "WorkResult")
      .def_readonly("w", &tl::WorkResult::w)
      .def_readonly("u_initial", &tl::WorkResult::u_initial)
      .def_readonly("u_final", &tl::WorkResult::u_final)
      .def_readonly("v_start", &tl::WorkResult::v_start)
      .def_readonly("v_end", &tl::WorkResult::v_end)
      .def_property_readonly("w_in", &tl::WorkResult::w_in)
      .def_property_readonly("w_out", &tl::WorkResult::w_out);

  py::class_<tl::TheoremWork>(m, "TheoremWork")
      .def_readonly("w_in", &tl::TheoremWork::w_in)
      .def_readonly("w_out", &tl::TheoremWork::w_out);

  m.def("isentropic_work", &tl::isentropic_work, "model"_a, "s"_a, "v_start"_a, "v_end"_a);
  m.def("work_from_length", &tl::work_from_length, "model"_a, "length"_a, "u2"_a);
  m.def("length_from_work", &tl::length_from_work, "model"_a, "u1"_a, "u2"_a);
  m.def("theorem_residual_in", &tl::theorem_residual_in, "model"_a, "length"_a, "u2"_a, "w_in"_a);
  m.def(
      "lemma_check",
      [](const tl::GasModel& model, double s, double v, std::optional<double> v_ref) {
        const tl::LemmaSides sides = tl::lemma_check(model, s, v, v_ref);
        return py::make_tuple(sides.lhs, sides.rhs);
      },
      "model"_a, "s"_a, "v"_a, "v_ref"_a = py::none(),
      "Returns ((dL/dv)^2, d^2W/dv^2) at v on the isentrope s.");

  py::class_<tl::IdentityReport>(m, "IdentityReport")
      .def_readonly("name", &tl::IdentityReport::name)
      .def_readonly("trials", &tl::IdentityReport::trials)
      .def_readonly("failures", &tl::IdentityReport::failures)
      .def_readonly("max_residual", &tl::IdentityReport::max_residual)
      .def_readonly("tolerance", &tl::IdentityReport::tolerance)
      .def_readonly("first_error", &tl::IdentityReport::first_error)
      .def_property_readonly("passed", &tl::IdentityReport::passed);

  m.def(
      "run_verification",
      [](std::uint64_t seed, int trials, const std::optional<tl::GasModel>& model) {
        if (model && model->variant() == tl::Variant::kCustom) {
          return tl::run_verification(*model, seed, trials);  // callbacks need the GIL
        }
        py::gil_scoped_release release;
        return model ? tl::run_verification(*model, seed, trials) : tl::run_verification(seed, trials);
      },
      "seed"_a = 2024, "trials"_a = 1000, "model"_a = py::none());
}
