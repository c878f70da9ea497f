// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "tqsim/cli/config.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>

#include "params.hpp"
#include "tqsim/errors.hpp"

namespace tqsim::cli {

using nlohmann::json;

std::optional<Experiment> parse_experiment(std::string_view name) {
  if (name == "two-slit") return Experiment::TwoSlit;
  if (name == "scatter") return Experiment::Scatter;
  if (name == "detector") return Experiment::Detector;
  if (name == "coherent") return Experiment::Coherent;
  if (name == "propagator-check") return Experiment::PropagatorCheck;
  return std::nullopt;
}

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::TwoSlit: return "two-slit";
    case Experiment::Scatter: return "scatter";
    case Experiment::Detector: return "detector";
    case Experiment::Coherent: return "coherent";
    case Experiment::PropagatorCheck: return "propagator-check";
  }
  return "unknown";
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

std::string format_violation(const Violation& v) { return v.field + ": " + v.rule; }

json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open config file " + path);
  json j = json::parse(in, nullptr, /*allow_exceptions=*/false, /*ignore_comments=*/true);
  if (j.is_discarded()) throw InvalidParameter("config file " + path + " is not valid JSON");
  if (!j.is_object()) throw InvalidParameter("config file " + path + " must hold a JSON object");
  return j;
}

namespace detail {
namespace {

void add(Violations& v, std::string field, std::string rule) {
  v.push_back({std::move(field), std::move(rule)});
}

std::optional<double> read_number(const json& j, const std::string& key, double fallback,
                                  Violations& v) {
  if (!j.contains(key)) return fallback;
  const json& x = j.at(key);
  if (!x.is_number()) {
    add(v, key, key + " must be a number");
    return std::nullopt;
  }
  const double d = x.get<double>();
  if (!std::isfinite(d)) {
    add(v, key, key + " must be finite");
    return std::nullopt;
  }
  return d;
}

// Integral JSON number (1e5 written as a float is accepted).
std::optional<std::int64_t> read_integer(const json& j, const std::string& key,
                                         std::int64_t fallback, Violations& v) {
  if (!j.contains(key)) return fallback;
  const json& x = j.at(key);
  if (x.is_number_integer()) return x.get<std::int64_t>();
  if (x.is_number_float()) {
    const double d = x.get<double>();
    if (std::isfinite(d) && std::floor(d) == d && std::abs(d) < 9.0e18) {
      return static_cast<std::int64_t>(d);
    }
  }
  add(v, key, key + " must be an integer");
  return std::nullopt;
}

template <std::size_t N>
std::optional<std::array<double, N>> read_tuple(const json& j, const std::string& key,
                                                std::array<double, N> fallback, Violations& v) {
  if (!j.contains(key)) return fallback;
  const json& x = j.at(key);
  std::array<double, N> out{};
  bool ok = x.is_array() && x.size() == N;
  for (std::size_t i = 0; ok && i < N; ++i) {
    ok = x[i].is_number() && std::isfinite(x[i].get<double>());
    if (ok) out[i] = x[i].get<double>();
  }
  if (!ok) {
    add(v, key, key + " must be an array of " + std::to_string(N) + " finite numbers");
    return std::nullopt;
  }
  return out;
}

std::optional<Point2> read_point(const json& j, const std::string& key, Point2 fallback,
                                 Violations& v) {
  auto t = read_tuple<2>(j, key, {fallback.x, fallback.y}, v);
  if (!t) return std::nullopt;
  return Point2{(*t)[0], (*t)[1]};
}

std::optional<FourVector> read_four_vector(const json& j, const std::string& key,
                                           Violations& v) {
  auto t = read_tuple<4>(j, key, {}, v);
  if (!t) return std::nullopt;
  return FourVector{(*t)[0], (*t)[1], (*t)[2], (*t)[3]};
}

std::optional<Coupling> read_coupling(const json& j, const std::string& key, double fallback,
                                      Violations& v) {
  auto g = read_number(j, key, fallback, v);
  if (!g) return std::nullopt;
  if (!(*g >= 0.0 && *g <= 1.0)) {
    add(v, key, "coupling.g must lie in [0,1]");
    return std::nullopt;
  }
  return Coupling(*g);
}

void check_known_keys(const json& j, std::initializer_list<const char*> keys, Violations& v) {
  std::set<std::string> known{"experiment", "seed", "trials", "format"};
  for (const char* k : keys) known.insert(k);
  for (const auto& item : j.items()) {
    if (!known.contains(item.key())) add(v, item.key(), "unknown field");
  }
}

std::int64_t default_trials(Experiment e) {
  switch (e) {
    case Experiment::TwoSlit: return 100000;
    case Experiment::Scatter: return 1;
    case Experiment::Detector: return 1000;
    case Experiment::Coherent: return 100000;
    case Experiment::PropagatorCheck: return 10000;
  }
  return 1;
}

OutputFormat default_format(Experiment e) {
  switch (e) {
    case Experiment::TwoSlit:
    case Experiment::Coherent: return OutputFormat::Csv;
    default: return OutputFormat::Json;
  }
}

}  // namespace

CommonParams parse_common(const ExperimentConfig& config, Violations& v) {
  const json& j = config.params;
  CommonParams p;
  p.format = default_format(config.experiment);

  if (j.contains("experiment")) {
    const json& e = j.at("experiment");
    if (!e.is_string() || parse_experiment(e.get<std::string>()) != config.experiment) {
      add(v, "experiment", "config file names a different experiment");
    }
  }

  if (config.seed) {
    p.seed = *config.seed;
  } else if (j.contains("seed")) {
    const json& s = j.at("seed");
    if (s.is_number_unsigned()) {
      p.seed = s.get<std::uint64_t>();
    } else {
      add(v, "seed", "seed must be an unsigned 64-bit integer");
    }
  }

  std::optional<std::int64_t> trials = config.trials;
  if (!trials) trials = read_integer(j, "trials", default_trials(config.experiment), v);
  if (trials) {
    if (*trials < 1) {
      add(v, "trials", "trials must be >= 1");
    } else {
      p.trials = static_cast<std::uint64_t>(*trials);
    }
  }

  std::optional<std::string> format = config.format;
  if (!format && j.contains("format")) {
    if (j.at("format").is_string()) {
      format = j.at("format").get<std::string>();
    } else {
      add(v, "format", "format must be \"csv\" or \"json\"");
    }
  }
  if (format) {
    if (auto f = parse_format(*format)) {
      p.format = *f;
    } else {
      add(v, "format", "format must be \"csv\" or \"json\"");
    }
  }
  return p;
}

TwoSlitParams parse_two_slit(const json& j, Violations& v) {
  check_known_keys(j,
                   {"source", "slitA", "slitB", "screen_x", "screen_ymin", "screen_ymax",
                    "cells", "k", "regime", "screen_coupling"},
                   v);
  TwoSlitParams p;
  const std::size_t before = v.size();
  auto source = read_point(j, "source", {0.0, 0.0}, v);
  auto slit_a = read_point(j, "slitA", {1.0, 0.5}, v);
  std::optional<Point2> slit_b = Point2{1.0, -0.5};
  bool masked = false;
  if (j.contains("slitB") && j.at("slitB").is_null()) {
    masked = true;
  } else {
    auto b = read_point(j, "slitB", {1.0, -0.5}, v);
    if (b) slit_b = *b;
  }
  auto screen_x = read_number(j, "screen_x", 3.0, v);
  auto y_min = read_number(j, "screen_ymin", -3.0, v);
  auto y_max = read_number(j, "screen_ymax", 3.0, v);
  auto cells = read_integer(j, "cells", 201, v);
  auto k = read_number(j, "k", 50.0, v);
  auto coupling = read_coupling(j, "screen_coupling", 1.0, v);

  if (cells && *cells < 1) add(v, "cells", "cells must be >= 1");
  if (k && !(*k > 0.0)) add(v, "k", "k must be > 0");
  if (y_min && y_max && cells && *cells > 1 && !(*y_max > *y_min)) {
    add(v, "screen_ymax", "screen_ymax must exceed screen_ymin");
  }
  if (coupling) p.screen.coupling = *coupling;

  if (j.contains("regime")) {
    const json& r = j.at("regime");
    const std::string name = r.is_string() ? r.get<std::string>() : "";
    if (name == "relativistic") {
      p.screen.regime = Regime::Relativistic;
    } else if (name == "nonrelativistic") {
      p.screen.regime = Regime::Nonrelativistic;
    } else {
      add(v, "regime", "regime must be \"relativistic\" or \"nonrelativistic\"");
    }
  } else {
    p.screen.regime = Regime::Relativistic;
  }

  if (v.size() != before) return p;
  p.screen_x = *screen_x;
  try {
    p.unmasked = TwoSlitGeometry::screen_line(*source, *slit_a, slit_b, *screen_x, *y_min,
                                              *y_max, static_cast<std::size_t>(*cells), *k);
    p.geometry = masked ? p.unmasked->masked() : *p.unmasked;
  } catch (const Error& e) {
    add(v, "geometry", e.what());
  }
  return p;
}

ScatterParams parse_scatter(const json& j, Violations& v) {
  check_known_keys(j, {"p1", "p2", "p3", "p4", "mass", "g", "sqrt_s", "theta", "phi"}, v);
  ScatterParams p;
  const std::size_t before = v.size();
  auto coupling = read_coupling(j, "g", 1.0, v);
  auto mass = read_number(j, "mass", 0.0, v);
  if (mass && *mass < 0.0) add(v, "mass", "mass must be >= 0");
  if (coupling) p.coupling = *coupling;

  const bool explicit_momenta = j.contains("p1") || j.contains("p2") || j.contains("p3") ||
                                j.contains("p4");
  const bool cm_form = j.contains("sqrt_s");
  if (explicit_momenta && cm_form) {
    add(v, "sqrt_s", "give either p1..p4 or sqrt_s/theta/phi, not both");
    return p;
  }

  if (explicit_momenta) {
    std::array<std::optional<FourVector>, 4> ps;
    for (int i = 0; i < 4; ++i) {
      const std::string key = "p" + std::to_string(i + 1);
      if (!j.contains(key)) {
        add(v, key, key + " is required when momenta are given explicitly");
      } else {
        ps[i] = read_four_vector(j, key, v);
      }
    }
    if (v.size() != before) return p;
    try {
      p.process.emplace(*ps[0], *ps[1], *ps[2], *ps[3], *mass);
    } catch (const Error& e) {
      add(v, "kinematics", e.what());
    }
    return p;
  }

  if (!cm_form) {
    // Head-on massless beams at sqrt_s = 2 scattering to +/-x.
    if (v.size() != before) return p;
    try {
      p.process.emplace(FourVector{1, 0, 0, 1}, FourVector{1, 0, 0, -1}, FourVector{1, 1, 0, 0},
                        FourVector{1, -1, 0, 0}, *mass);
    } catch (const Error& e) {
      add(v, "kinematics", e.what());
    }
    return p;
  }

  auto sqrt_s = read_number(j, "sqrt_s", 2.0, v);
  auto theta = read_number(j, "theta", std::acos(0.0), v);
  auto phi = read_number(j, "phi", 0.0, v);
  if (v.size() != before) return p;
  try {
    p.process = ScatterProcess::center_of_mass(*sqrt_s, *theta, *phi, *mass);
  } catch (const Error& e) {
    add(v, "kinematics", e.what());
  }
  return p;
}

DetectorParams parse_detector(const json& j, Violations& v) {
  check_known_keys(j, {"N", "g", "simulate"}, v);
  DetectorParams p;
  auto n = read_number(j, "N", 1e23, v);
  auto coupling = read_coupling(j, "g", 0.007, v);
  if (j.contains("simulate")) {
    if (j.at("simulate").is_boolean()) {
      p.simulate = j.at("simulate").get<bool>();
    } else {
      add(v, "simulate", "simulate must be a boolean");
    }
  }
  if (n && !(*n >= 1.0 && std::floor(*n) == *n)) {
    add(v, "N", "N must be an integer >= 1");
    n.reset();
  }
  if (n && p.simulate && *n > 1e6) add(v, "N", "simulation requires N <= 1e6");
  if (n && coupling) p.array.emplace(*n, *coupling);
  return p;
}

CoherentParams parse_coherent(const json& j, Violations& v) {
  check_known_keys(j, {"alpha", "phases", "periods"}, v);
  CoherentParams p;
  if (auto a = read_tuple<2>(j, "alpha", {2.0, 0.0}, v)) {
    p.alpha = {(*a)[0], (*a)[1]};
    if (std::norm(p.alpha) > 1e4) add(v, "alpha", "|alpha|^2 must be <= 1e4");
  }
  if (auto n = read_integer(j, "phases", 1000, v)) {
    if (*n < 1) {
      add(v, "phases", "phases must be >= 1");
    } else {
      p.phases = static_cast<std::size_t>(*n);
    }
  }
  if (auto periods = read_number(j, "periods", 2.0, v)) {
    if (!(*periods > 0.0)) {
      add(v, "periods", "periods must be > 0");
    } else {
      p.periods = *periods;
    }
  }
  return p;
}

PropagatorParams parse_propagator(const json& j, Violations& v) {
  check_known_keys(j, {"epsilon", "q_range"}, v);
  PropagatorParams p;
  if (auto eps = read_number(j, "epsilon", 1e-9, v)) {
    if (!(*eps > 0.0)) {
      add(v, "epsilon", "epsilon must be > 0");
    } else {
      p.epsilon = *eps;
    }
  }
  if (auto range = read_number(j, "q_range", 3.0, v)) {
    if (!(*range > 0.0)) {
      add(v, "q_range", "q_range must be > 0");
    } else {
      p.q_range = *range;
    }
  }
  return p;
}

void parse_all(const ExperimentConfig& config, Violations& v) {
  parse_common(config, v);
  switch (config.experiment) {
    case Experiment::TwoSlit: parse_two_slit(config.params, v); break;
    case Experiment::Scatter: parse_scatter(config.params, v); break;
    case Experiment::Detector: parse_detector(config.params, v); break;
    case Experiment::Coherent: parse_coherent(config.params, v); break;
    case Experiment::PropagatorCheck: parse_propagator(config.params, v); break;
  }
}

}  // namespace detail

std::vector<Violation> validate(const ExperimentConfig& config) {
  std::vector<Violation> v;
  if (!config.params.is_object()) {
    v.push_back({"config", "config must be a JSON object"});
    return v;
  }
  detail::parse_all(config, v);
  return v;
}

}  // namespace tqsim::cli
