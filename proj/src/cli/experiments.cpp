// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "tqsim/cli/experiments.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <string>

#include "params.hpp"
#include "tqsim/propagators.hpp"
#include "tqsim/stats.hpp"

namespace tqsim::cli {
namespace {

using detail::CommonParams;
using detail::Violations;
using ordered_json = nlohmann::ordered_json;

// Adding +0.0 prints a negative zero as 0.
std::string num(double x) { return fmt::format("{:.17g}", x + 0.0); }

nlohmann::ordered_json complex_json(ComplexAmplitude z) { return {z.real(), z.imag()}; }

std::string finish_json(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string run_two_slit(const ExperimentConfig& config, const CommonParams& common) {
  Violations v;
  const auto p = detail::parse_two_slit(config.params, v);
  const TwoSlitGeometry& geom = *p.geometry;

  Histogram hist;
  if (config.threads > 0) {
    hist = two_slit_pattern_parallel(geom, common.trials, common.seed, config.threads, p.screen);
  } else {
    RandomStream rng(common.seed);
    hist = two_slit_pattern(geom, common.trials, rng, p.screen);
  }
  const std::vector<double> weights = analytic_weights(geom);

  if (common.format == OutputFormat::Csv) {
    std::string out = "cell_y,count,analytic_weight\n";
    for (std::size_t i = 0; i < weights.size(); ++i) {
      out += fmt::format("{},{},{}\n", num(geom.cells()[i].y), hist.counts[i], num(weights[i]));
    }
    return out;
  }

  ordered_json j;
  j["experiment"] = "two-slit";
  j["seed"] = common.seed;
  j["trials"] = common.trials;
  j["events"] = hist.events();
  j["unconfirmed"] = hist.unconfirmed;
  if (hist.events() > 0) {
    const auto gof = stats::chi_square_gof(hist.counts, weights);
    j["chi2"] = gof.statistic;
    j["dof"] = gof.dof;
    j["p_value"] = gof.p_value;
  }
  const Window window = central_fringe_window(*p.unmasked, p.screen_x);
  j["visibility_analytic"] =
      fringe_visibility(analytic_intensity_profile(geom, p.screen_x, window, 4001));
  ordered_json cells = ordered_json::array();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    cells.push_back({{"cell_y", geom.cells()[i].y},
                     {"count", hist.counts[i]},
                     {"analytic_weight", weights[i]}});
  }
  j["cells"] = std::move(cells);
  return finish_json(j);
}

std::string run_scatter(const ExperimentConfig& config, const CommonParams& common) {
  Violations v;
  const auto p = detail::parse_scatter(config.params, v);
  const AmplitudeBreakdown b = breakdown(*p.process, p.coupling);

  if (common.format == OutputFormat::Csv) {
    std::string out = "quantity,value\n";
    auto row = [&](std::string_view name, double value) {
      out += fmt::format("{},{}\n", name, num(value));
    };
    row("q2_annihilation", b.q2_annihilation);
    row("q2_exchange", b.q2_exchange);
    row("m_annihilation_re", b.annihilation.real());
    row("m_annihilation_im", b.annihilation.imag());
    row("m_exchange_re", b.exchange.real());
    row("m_exchange_im", b.exchange.imag());
    row("m_total_re", b.total.real());
    row("m_total_im", b.total.imag());
    row("probability", b.probability);
    row("interference", b.interference);
    return out;
  }

  ordered_json j;
  j["experiment"] = "scatter";
  j["g"] = p.coupling.g();
  j["q2_annihilation"] = b.q2_annihilation;
  j["q2_exchange"] = b.q2_exchange;
  j["m_annihilation"] = complex_json(b.annihilation);
  j["m_exchange"] = complex_json(b.exchange);
  j["m_total"] = complex_json(b.total);
  j["probability"] = b.probability;
  j["interference"] = b.interference;
  return finish_json(j);
}

std::string run_detector(const ExperimentConfig& config, const CommonParams& common) {
  Violations v;
  const auto p = detail::parse_detector(config.params, v);
  const DetectorArray& array = *p.array;

  ordered_json j;
  j["experiment"] = "detector";
  j["N"] = array.count();
  j["g"] = array.coupling().g();
  j["p_confirm"] = confirmation_probability(array.coupling());
  j["p_response"] = detector_response_probability(array);
  j["log_complement"] = detector_log_complement(array);

  if (p.simulate) {
    const auto n = static_cast<std::size_t>(array.count());
    const AbsorberSet absorbers = AbsorberSet::uniform(n, array.coupling());
    std::vector<OfferComponent> components;
    components.reserve(n);
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) components.push_back({AbsorberId{i}, amplitude});
    const OfferWave ow(std::move(components));

    RandomStream rng(common.seed);
    std::vector<double> counts(common.trials);
    std::uint64_t responded = 0;
    for (auto& c : counts) {
      c = static_cast<double>(count_confirmations(ow, absorbers, Regime::Relativistic, rng));
      if (c > 0.0) ++responded;
    }
    const auto m = stats::moments(counts);
    const double q = confirmation_probability(array.coupling());
    j["trials"] = common.trials;
    j["seed"] = common.seed;
    j["empirical_response"] = static_cast<double>(responded) / static_cast<double>(common.trials);
    j["mean_count"] = m.mean;
    j["variance_count"] = m.variance;
    j["expected_mean"] = array.count() * q;
    j["expected_variance"] = array.count() * q * (1.0 - q);
  }

  if (common.format == OutputFormat::Json) return finish_json(j);
  std::string out = "quantity,value\n";
  for (const auto& item : j.items()) {
    if (item.value().is_number_float()) {
      out += fmt::format("{},{}\n", item.key(), num(item.value().get<double>()));
    } else if (item.value().is_number()) {
      out += fmt::format("{},{}\n", item.key(), item.value().dump());
    }
  }
  return out;
}

std::string run_coherent(const ExperimentConfig& config, const CommonParams& common) {
  Violations v;
  const auto p = detail::parse_coherent(config.params, v);
  const CoherentState state(p.alpha);

  std::vector<QuadraturePhase> phases(p.phases);
  const double span = 2.0 * std::numbers::pi * p.periods;
  for (std::size_t i = 0; i < phases.size(); ++i) {
    phases[i].theta = span * static_cast<double>(i) / static_cast<double>(phases.size());
  }
  RandomStream trace_rng = RandomStream::substream(common.seed, 0);
  const std::vector<double> trace = sample_quadrature_trace(state, phases, trace_rng);

  if (common.format == OutputFormat::Csv) {
    std::string out = "phase,sample,analytic_mean,analytic_sd\n";
    for (std::size_t i = 0; i < phases.size(); ++i) {
      const auto s = quadrature_statistics(state, phases[i]);
      out += fmt::format("{},{},{},{}\n", num(phases[i].theta), num(trace[i]), num(s.mean),
                         num(std::sqrt(s.variance)));
    }
    return out;
  }

  RandomStream box_rng = RandomStream::substream(common.seed, 1);
  ordered_json j;
  j["experiment"] = "coherent";
  j["seed"] = common.seed;
  j["alpha"] = complex_json(p.alpha);
  j["mean_photon_number"] = state.mean_photon_number();
  j["n_max"] = state.n_max();
  j["truncated_norm"] = coherent_coefficients(state).norm_squared();
  j["box_trials"] = common.trials;
  j["box_mean_count"] = absorbing_box(state, common.trials, box_rng);
  if (phases.size() >= 4) {
    std::vector<double> theta;
    theta.reserve(phases.size());
    for (const auto& ph : phases) theta.push_back(ph.theta);
    const auto fit = stats::fit_sinusoid(theta, trace);
    j["fit_amplitude"] = fit.amplitude;
    j["fit_residual_variance"] = fit.residual_variance;
    j["analytic_amplitude"] = std::numbers::sqrt2 * std::abs(p.alpha);
  }
  return finish_json(j);
}

std::string run_propagator_check(const ExperimentConfig& config, const CommonParams& common) {
  Violations v;
  const auto p = detail::parse_propagator(config.params, v);
  const Regulator reg(p.epsilon);
  RandomStream rng(common.seed);

  const bool csv = common.format == OutputFormat::Csv;
  std::string out;
  if (csv) {
    out = "t,x,y,z,epsilon,q2,retarded_re,retarded_im,advanced_re,advanced_im,"
          "time_symmetric,feynman_re,feynman_im\n";
  }
  double davies_max = 0.0;
  std::uint64_t reversal_mismatches = 0;
  std::uint64_t off_shell_samples = 0;
  double off_shell_ratio_max = 0.0;
  auto coordinate = [&] { return p.q_range * (2.0 * rng.uniform() - 1.0); };
  for (std::uint64_t i = 0; i < common.trials; ++i) {
    const FourVector q{coordinate(), coordinate(), coordinate(), coordinate()};
    const auto ret = green_retarded(q, reg);
    const auto adv = green_advanced(q, reg);
    const auto sym = green_time_symmetric(q, reg);
    const auto feyn = green_feynman(q, reg);
    const auto mean = 0.5 * (ret + adv);
    const double scale = std::max(std::abs(sym), std::abs(mean));
    if (scale > 0.0) davies_max = std::max(davies_max, std::abs(sym - mean) / scale);
    if (green_retarded(q, reg) != green_advanced({-q.t, q.x, q.y, q.z}, reg)) {
      ++reversal_mismatches;
    }
    const double q2 = minkowski_norm2(q);
    if (std::abs(q2) > 1e3 * p.epsilon) {
      ++off_shell_samples;
      const double dev = std::abs(feyn - ComplexAmplitude{0.0, 1.0} * sym);
      off_shell_ratio_max = std::max(off_shell_ratio_max, dev * q2 * q2 / p.epsilon);
    }
    if (csv) {
      out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", num(q.t), num(q.x),
                         num(q.y), num(q.z), num(p.epsilon), num(q2), num(ret.real()),
                         num(ret.imag()), num(adv.real()), num(adv.imag()), num(sym.real()),
                         num(feyn.real()), num(feyn.imag()));
    }
  }
  if (csv) return out;

  ordered_json j;
  j["experiment"] = "propagator-check";
  j["seed"] = common.seed;
  j["samples"] = common.trials;
  j["epsilon"] = p.epsilon;
  j["davies_max_rel_deviation"] = davies_max;
  j["time_reversal_mismatches"] = reversal_mismatches;
  j["off_shell_samples"] = off_shell_samples;
  j["off_shell_fitted_c"] = off_shell_ratio_max;
  return finish_json(j);
}

std::string dispatch(const ExperimentConfig& config, const CommonParams& common) {
  switch (config.experiment) {
    case Experiment::TwoSlit: return run_two_slit(config, common);
    case Experiment::Scatter: return run_scatter(config, common);
    case Experiment::Detector: return run_detector(config, common);
    case Experiment::Coherent: return run_coherent(config, common);
    case Experiment::PropagatorCheck: return run_propagator_check(config, common);
  }
  throw InvalidParameter("unknown experiment");
}

}  // namespace

int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  const auto violations = validate(config);
  if (!violations.empty()) {
    for (const auto& v : violations) err << "invalid config: " << format_violation(v) << "\n";
    return kExitInvalidConfig;
  }
  Violations unused;
  const CommonParams common = detail::parse_common(config, unused);

  std::string result;
  try {
    result = dispatch(config, common);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const InvalidParameter& e) {
    err << "invalid config: " << e.what() << "\n";
    return kExitInvalidConfig;
  }

  if (config.out) {
    std::ofstream file(*config.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open output file " << *config.out << "\n";
      return kExitInvalidConfig;
    }
    file << result;
  } else {
    out << result;
  }
  return kExitOk;
}

}  // namespace tqsim::cli
