// Copyright 2026 The thermolength Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "document.hpp"
#include "thermolength/errors.hpp"
#include "thermolength/metric.hpp"
#include "thermolength/path.hpp"
#include "thermolength/verify.hpp"
#include "thermolength/work.hpp"

namespace thermolength::cli {

namespace {

constexpr double kDefaultR = 8.314462618;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numeric settings gathered from the config file and then from flags, flags winning.
struct Settings {
  std::map<std::string, double> numbers;
  std::string model;
  nlohmann::json segments;
  std::string format;

  std::optional<double> get(const std::string& key) const {
    auto it = numbers.find(key);
    if (it == numbers.end()) return std::nullopt;
    return it->second;
  }

  double require(const std::string& key) const {
    if (auto x = get(key)) return *x;
    throw UsageError("missing required value --" + key);
  }
};

// Flag storage; only flags the user actually passed are copied into Settings.
struct Flags {
  std::string config;
  std::string model;
  std::string format;
  std::map<std::string, double> values;
  long long seed = 2024;
  int trials = 1000;
  int max_subdivisions = 2000;
};

const char* const kNumericFlags[] = {"cv", "R", "s0", "a", "b", "s", "v", "v1", "v2",
                                     "v-min", "v-max", "steps", "rel-tol", "abs-tol"};

void add_common(CLI::App* sub, Flags& flags) {
  sub->add_option("--config", flags.config, "JSON document with model keys and segments");
  sub->add_option("--model", flags.model, "ideal | quasi-ideal | vdw");
  sub->add_option("--format", flags.format, "json | csv | human");
  sub->add_option("--cv", flags.values["cv"], "molar heat capacity at constant volume");
  sub->add_option("--R", flags.values["R"], "gas constant (default 8.314462618)");
  sub->add_option("--s0", flags.values["s0"], "reference molar entropy");
  sub->add_option("--a", flags.values["a"], "van der Waals attraction");
  sub->add_option("--b", flags.values["b"], "excluded molar volume");
  sub->add_option("--rel-tol", flags.values["rel-tol"], "quadrature relative tolerance");
  sub->add_option("--abs-tol", flags.values["abs-tol"], "quadrature absolute tolerance");
  sub->add_option("--max-subdivisions", flags.max_subdivisions, "quadrature panel budget");
}

void add_state(CLI::App* sub, Flags& flags) {
  sub->add_option("--s", flags.values["s"], "molar entropy");
  sub->add_option("--v", flags.values["v"], "molar volume");
}

void add_interval(CLI::App* sub, Flags& flags) {
  sub->add_option("--s", flags.values["s"], "molar entropy of the isentrope");
  sub->add_option("--v1", flags.values["v1"], "start volume");
  sub->add_option("--v2", flags.values["v2"], "end volume");
}

Settings resolve(const CLI::App& sub, const Flags& flags) {
  Settings st;
  if (!flags.config.empty()) {
    std::ifstream in(flags.config);
    if (!in) throw UsageError("cannot open config file '" + flags.config + "'");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw UsageError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw UsageError("config must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
      if (key == "model") {
        if (!value.is_string()) throw UsageError("config key 'model' must be a string");
        st.model = value.get<std::string>();
      } else if (key == "format") {
        if (!value.is_string()) throw UsageError("config key 'format' must be a string");
        st.format = value.get<std::string>();
      } else if (key == "segments") {
        st.segments = value;
      } else if (value.is_number()) {
        std::string flag = key;
        for (char& c : flag) c = c == '_' ? '-' : c;
        st.numbers[flag] = value.get<double>();
      } else {
        throw UsageError("config key '" + key + "' must be numeric");
      }
    }
  }
  if (sub.count("--model") > 0) st.model = flags.model;
  if (sub.count("--format") > 0) st.format = flags.format;
  for (const char* name : kNumericFlags) {
    const std::string opt = std::string("--") + name;
    if (sub.get_option_no_throw(opt) != nullptr && sub.count(opt) > 0) {
      st.numbers[name] = flags.values.at(name);
    }
  }
  if (sub.count("--max-subdivisions") > 0) {
    st.numbers["max-subdivisions"] = flags.max_subdivisions;
  }
  return st;
}

GasModel build_model(const Settings& st) {
  const Variant variant = parse_variant(st.model.empty() ? "ideal" : st.model);
  const double R = st.get("R").value_or(kDefaultR);
  const double cv = st.get("cv").value_or(1.5 * R);
  const double s0 = st.get("s0").value_or(0.0);
  switch (variant) {
    case Variant::kIdeal:
      return GasModel::ideal(cv, R, s0);
    case Variant::kQuasiIdeal:
      return GasModel::quasi_ideal(cv, R, st.get("b").value_or(0.0), s0);
    case Variant::kVanDerWaals:
      return GasModel::van_der_waals(cv, R, st.get("a").value_or(0.0), st.get("b").value_or(0.0),
                                     s0);
    case Variant::kCustom:
      break;
  }
  throw DomainError("custom models need f1/f2 functions and are only available from the library");
}

QuadratureConfig build_quadrature(const Settings& st) {
  QuadratureConfig cfg;
  if (const char* env = std::getenv(kRelTolEnv); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double x = std::strtod(env, &end);
    if (end == env || *end != '\0') {
      throw UsageError(std::string(kRelTolEnv) + " is not a number: '" + env + "'");
    }
    cfg.rel_tol = x;
  }
  if (auto x = st.get("rel-tol")) cfg.rel_tol = *x;
  if (auto x = st.get("abs-tol")) cfg.abs_tol = *x;
  if (auto x = st.get("max-subdivisions")) cfg.max_subdivisions = static_cast<int>(*x);
  cfg.validate();
  return cfg;
}

Node model_node(const GasModel& m) {
  Node n = Node::object();
  n.set("variant", std::string(to_string(m.variant())));
  n.set("cv", m.cv()).set("R", m.R()).set("s0", m.s0());
  if (m.variant() != Variant::kIdeal) n.set("b", m.b());
  if (m.variant() == Variant::kVanDerWaals) n.set("a", m.a());
  return n;
}

Format output_format(const Settings& st, Format fallback) {
  if (st.format.empty()) return fallback;
  try {
    return parse_format(st.format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

double json_number(const nlohmann::json& seg, const char* key, std::size_t index) {
  if (!seg.contains(key) || !seg[key].is_number()) {
    throw UsageError("segment " + std::to_string(index) + " needs numeric '" + key + "'");
  }
  return seg[key].get<double>();
}

Path parse_segments(const nlohmann::json& segments) {
  if (!segments.is_array()) throw UsageError("'segments' must be an array");
  Path path;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const nlohmann::json& seg = segments[i];
    if (!seg.is_object() || !seg.contains("kind") || !seg["kind"].is_string()) {
      throw UsageError("segment " + std::to_string(i) + " needs a string 'kind'");
    }
    const std::string kind = seg["kind"].get<std::string>();
    if (kind == "isentrope") {
      path.append(Isentrope{json_number(seg, "s", i), json_number(seg, "v1", i),
                            json_number(seg, "v2", i)});
    } else if (kind == "isochore") {
      path.append(Isochore{json_number(seg, "v", i), json_number(seg, "s1", i),
                           json_number(seg, "s2", i)});
    } else if (kind == "isotherm") {
      path.append(Isotherm{json_number(seg, "T", i), json_number(seg, "v1", i),
                           json_number(seg, "v2", i)});
    } else if (kind == "linear") {
      path.append(LinearSV{{json_number(seg, "s1", i), json_number(seg, "v1", i)},
                           {json_number(seg, "s2", i), json_number(seg, "v2", i)}});
    } else {
      throw UsageError("segment " + std::to_string(i) + " has unknown kind '" + kind + "'");
    }
  }
  return path;
}

int cmd_point(const Settings& st, std::ostream& out) {
  const double s = st.require("s");
  const double v = st.require("v");
  const GasModel model = build_model(st);
  const ThermoPoint tp = thermo_point(model, {s, v});
  Node doc = Node::object();
  doc.set("model", model_node(model));
  doc.set("s", s).set("v", v);
  doc.set("u", tp.u).set("T", tp.T).set("p", tp.p);
  doc.set("cv", tp.cv).set("cp", tp.cp).set("gamma", tp.gamma());
  doc.set("alpha", tp.alpha).set("kappa_T", tp.kappa_t);
  write_document(out, doc, output_format(st, Format::kJson));
  return kOk;
}

int cmd_metric(const Settings& st, std::ostream& out) {
  const double s = st.require("s");
  const double v = st.require("v");
  const GasModel model = build_model(st);
  const MetricTensor h = metric_from_hessian(model, {s, v});
  Node doc = Node::object();
  doc.set("model", model_node(model));
  doc.set("s", s).set("v", v);
  doc.set("g_ss", h.g_ss).set("g_sv", h.g_sv).set("g_vv", h.g_vv);
  doc.set("determinant", h.determinant()).set("stable", h.stable);
  // The coefficient route needs kappa_T > 0; report it when defined.
  try {
    const MetricTensor c = metric_from_coefficients(thermo_point(model, {s, v}), v);
    const double diff = std::max({std::abs(h.g_ss - c.g_ss), std::abs(h.g_sv - c.g_sv),
                                  std::abs(h.g_vv - c.g_vv)});
    doc.set("coefficient_g_ss", c.g_ss).set("coefficient_g_sv", c.g_sv);
    doc.set("coefficient_g_vv", c.g_vv).set("route_max_abs_difference", diff);
  } catch (const SingularityError& e) {
    doc.set("coefficient_route", std::string(e.what()));
  }
  write_document(out, doc, output_format(st, Format::kJson));
  return kOk;
}

int cmd_length(const Settings& st, std::ostream& out) {
  const GasModel model = build_model(st);
  const QuadratureConfig cfg = build_quadrature(st);
  Path path;
  if (!st.segments.is_null()) {
    if (st.get("v1") || st.get("v2")) {
      throw UsageError("give either segments in --config or --s/--v1/--v2, not both");
    }
    path = parse_segments(st.segments);
  } else {
    path.append(Isentrope{st.require("s"), st.require("v1"), st.require("v2")});
  }
  const LengthResult r = path_length(model, path, cfg);

  Node doc = Node::object();
  doc.set("model", model_node(model));
  doc.set("segments", static_cast<int>(path.segments().size()));
  doc.set("value", r.value).set("quadrature", r.value);
  const bool single_isentrope =
      path.segments().size() == 1 && std::holds_alternative<Isentrope>(path.segments().front());
  if (single_isentrope && model.is_ideal_like()) {
    const auto& seg = std::get<Isentrope>(path.segments().front());
    const double closed = isentropic_length_closed(model, seg.s, seg.v_start, seg.v_end);
    doc.set("closed_form", closed);
    doc.set("signed_closed_form", isentropic_length_signed(model, seg.s, seg.v_start, seg.v_end));
    doc.set("abs_difference", std::abs(closed - r.value));
  }
  doc.set("estimated_error", r.estimated_error).set("panels_used", r.panels_used);
  write_document(out, doc, output_format(st, Format::kJson));
  return kOk;
}

int cmd_work(const Settings& st, std::ostream& out) {
  const double s = st.require("s");
  const double v1 = st.require("v1");
  const double v2 = st.require("v2");
  const GasModel model = build_model(st);
  const QuadratureConfig cfg = build_quadrature(st);
  const WorkResult w = isentropic_work(model, s, v1, v2);

  Node doc = Node::object();
  doc.set("model", model_node(model));
  doc.set("s", s).set("v_start", v1).set("v_end", v2);
  doc.set("w", w.w).set("W_in", w.w_in()).set("W_out", w.w_out());
  doc.set("u_initial", w.u_initial).set("u_final", w.u_final);
  doc.set("pressure_integral_residual", pressure_integral_check(model, s, v1, v2, cfg));
  if (model.is_ideal_like()) {
    const double L = isentropic_length_closed(model, s, v1, v2);
    const double u_small_v = v1 <= v2 ? w.u_initial : w.u_final;
    const double u_large_v = v1 <= v2 ? w.u_final : w.u_initial;
    const TheoremWork tw = work_from_length(model, L, u_large_v);
    doc.set("length", L);
    doc.set("W_in_from_length", tw.w_in);
    doc.set("theorem_residual", theorem_residual_in(model, L, u_large_v, w.w_in()));
    doc.set("length_from_energies", length_from_work(model, u_small_v, u_large_v));
  }
  write_document(out, doc, output_format(st, Format::kJson));
  return kOk;
}

Node table_row(const GasModel& model, const QuadratureConfig& cfg, double s, double v1, double v2) {
  Node row = Node::object();
  row.set("v1", v1).set("v2", v2);
  try {
    const WorkResult w = isentropic_work(model, s, v1, v2);
    const double lq = isentropic_length_numeric(model, s, v1, v2, cfg).value;
    row.set("u1", w.u_initial).set("u2", w.u_final);
    if (model.is_ideal_like()) {
      const double lc = isentropic_length_closed(model, s, v1, v2);
      const double u_large_v = v1 <= v2 ? w.u_final : w.u_initial;
      const double predicted = work_from_length(model, lc, u_large_v).w_in;
      row.set("L_closed", lc).set("L_quadrature", lq).set("W", w.w);
      row.set("theorem_residual", std::abs(predicted - std::abs(w.w)));
    } else {
      row.set("L_closed", Node()).set("L_quadrature", lq).set("W", w.w);
      row.set("theorem_residual", Node());
    }
    row.set("error", "");
  } catch (const Error& e) {
    row.set("u1", Node()).set("u2", Node()).set("L_closed", Node()).set("L_quadrature", Node());
    row.set("W", Node()).set("theorem_residual", Node());
    row.set("error", std::string(e.what()));
  }
  return row;
}

int cmd_table(const Settings& st, std::ostream& out) {
  const GasModel model = build_model(st);
  const QuadratureConfig cfg = build_quadrature(st);
  const double s = st.get("s").value_or(0.0);
  const double v_min = st.require("v-min");
  const double v_max = st.get("v-max").value_or(v_min);
  const double steps_value = st.get("steps").value_or(1.0);
  if (steps_value < 1.0 || steps_value != std::floor(steps_value) || steps_value > 1000.0) {
    throw UsageError("--steps must be an integer in [1, 1000]");
  }
  const int steps = static_cast<int>(steps_value);
  if (!(v_max >= v_min)) throw UsageError("--v-max must not be below --v-min");

  auto grid = [&](int i) {
    return steps == 1 ? v_min : v_min + (v_max - v_min) * i / (steps - 1);
  };
  Node doc = Node::object();
  doc.set("model", model_node(model));
  doc.set("s", s);
  Node rows = Node::array();
  for (int i = 0; i < steps; ++i) {
    for (int j = 0; j < steps; ++j) rows.push(table_row(model, cfg, s, grid(i), grid(j)));
  }
  doc.set("rows", std::move(rows));
  write_document(out, doc, output_format(st, Format::kCsv));
  return kOk;
}

int cmd_verify(const CLI::App& sub, const Settings& st, const Flags& flags, std::ostream& out) {
  if (flags.trials < 1) throw UsageError("--trials must be at least 1");
  const Format format = output_format(st, Format::kJson);
  const bool fixed = !st.model.empty() || sub.count("--cv") > 0 || st.get("cv").has_value();

  Node doc = Node::object();
  doc.set("seed", static_cast<long long>(flags.seed)).set("trials", flags.trials);
  doc.set("mode", fixed ? "fixed-model" : "randomized");

  std::vector<IdentityReport> reports;
  if (fixed) {
    std::optional<GasModel> model;
    try {
      model = build_model(st);
    } catch (const DomainError& e) {
      doc.set("passed", false).set("error", std::string(e.what()));
      write_document(out, doc, format);
      return kDomain;
    }
    doc.set("model", model_node(*model));
    reports = run_verification(*model, static_cast<std::uint64_t>(flags.seed), flags.trials);
  } else {
    reports = run_verification(static_cast<std::uint64_t>(flags.seed), flags.trials);
  }

  bool all = true;
  Node rows = Node::array();
  for (const IdentityReport& r : reports) {
    all = all && r.passed();
    Node row = Node::object();
    row.set("identity", r.name).set("passed", r.passed());
    row.set("trials", r.trials).set("failures", r.failures);
    row.set("max_residual", r.max_residual).set("tolerance", r.tolerance);
    row.set("first_error", r.first_error);
    rows.push(std::move(row));
  }
  doc.set("passed", all);
  doc.set("rows", std::move(rows));
  write_document(out, doc, format);
  return all ? kOk : kNumerical;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weinhold thermodynamic length for constant heat capacity gases"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 ok, 1 usage/parse, 2 domain/validation, 3 numerical.\n"
      "Environment: THERMOLENGTH_REL_TOL overrides the default quadrature rel_tol (1e-10).");

  Flags flags;
  CLI::App* point = app.add_subcommand("point", "thermodynamic state: u, T, p, cv, cp, alpha, kappa_T");
  CLI::App* metric = app.add_subcommand("metric", "Weinhold metric at a state, both routes");
  CLI::App* length =
      app.add_subcommand("length", "length of an isentrope (--s --v1 --v2) or a --config path");
  CLI::App* work = app.add_subcommand("work", "isentropic work and the length-work identities");
  CLI::App* verify = app.add_subcommand("verify", "randomized identity suite");
  CLI::App* table = app.add_subcommand("table", "grid of lengths and works over (v1, v2)");

  for (CLI::App* sub : {point, metric, length, work, verify, table}) add_common(sub, flags);
  add_state(point, flags);
  add_state(metric, flags);
  add_interval(length, flags);
  add_interval(work, flags);
  verify->add_option("--seed", flags.seed, "generator seed")->capture_default_str();
  verify->add_option("--trials", flags.trials, "instances per identity")->capture_default_str();
  table->add_option("--s", flags.values["s"], "molar entropy of the isentropes (default 0)");
  table->add_option("--v-min", flags.values["v-min"], "smallest grid volume");
  table->add_option("--v-max", flags.values["v-max"], "largest grid volume");
  table->add_option("--steps", flags.values["steps"], "grid points per axis (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (point->parsed()) return cmd_point(resolve(*point, flags), out);
    if (metric->parsed()) return cmd_metric(resolve(*metric, flags), out);
    if (length->parsed()) return cmd_length(resolve(*length, flags), out);
    if (work->parsed()) return cmd_work(resolve(*work, flags), out);
    if (table->parsed()) return cmd_table(resolve(*table, flags), out);
    if (verify->parsed()) return cmd_verify(*verify, resolve(*verify, flags), flags, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const UnsupportedModel& e) {
    err << "unsupported: " << e.what() << '\n';
    return kDomain;
  } catch (const SingularityError& e) {
    err << "singular: " << e.what() << '\n';
    return kDomain;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << '\n';
    return kNumerical;
  } catch (const InstabilityError& e) {
    err << "instability: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}

}  // namespace thermolength::cli
