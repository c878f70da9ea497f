// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "tqsim/two_slit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace tqsim {
namespace {

void require_leg(Point2 from, Point2 to) {
  if (distance(from, to) == 0.0) throw DegenerateGeometry("zero-length propagation leg");
}

AbsorberSet screen_absorbers(std::size_t cells, Coupling coupling) {
  return AbsorberSet::uniform(cells, coupling);
}

void accumulate(Histogram& hist, std::optional<AbsorberId> winner) {
  if (winner) {
    ++hist.counts[winner->value];
  } else {
    ++hist.unconfirmed;
  }
}

}  // namespace

double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

TwoSlitGeometry::TwoSlitGeometry(Point2 source, Point2 slit_a, std::optional<Point2> slit_b,
                                 std::vector<Point2> cells, double wavenumber)
    : source_(source), slit_a_(slit_a), slit_b_(slit_b), cells_(std::move(cells)),
      k_(wavenumber) {
  if (!(std::isfinite(k_) && k_ > 0.0)) throw InvalidParameter("k must be finite and > 0");
  if (cells_.empty()) throw InvalidParameter("screen has no cells");
  if (slit_b_ && *slit_b_ == slit_a_) throw InvalidParameter("slits must be distinct");

  auto sorted = cells_;
  std::sort(sorted.begin(), sorted.end(),
            [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidParameter("screen cells must be distinct");
  }

  require_leg(source_, slit_a_);
  if (slit_b_) require_leg(source_, *slit_b_);
  for (Point2 cell : cells_) {
    require_leg(slit_a_, cell);
    if (slit_b_) require_leg(*slit_b_, cell);
  }
}

TwoSlitGeometry TwoSlitGeometry::screen_line(Point2 source, Point2 slit_a,
                                             std::optional<Point2> slit_b, double screen_x,
                                             double y_min, double y_max, std::size_t cells,
                                             double wavenumber) {
  if (cells == 0) throw InvalidParameter("cells must be >= 1");
  if (!(y_max > y_min) && cells > 1) throw InvalidParameter("screen_ymax must exceed screen_ymin");
  std::vector<Point2> points(cells);
  const double step = cells > 1 ? (y_max - y_min) / static_cast<double>(cells - 1) : 0.0;
  for (std::size_t i = 0; i < cells; ++i) {
    points[i] = {screen_x, y_min + step * static_cast<double>(i)};
  }
  return TwoSlitGeometry(source, slit_a, slit_b, std::move(points), wavenumber);
}

TwoSlitGeometry TwoSlitGeometry::standard() {
  return screen_line({0.0, 0.0}, {1.0, 0.5}, Point2{1.0, -0.5}, 3.0, -3.0, 3.0, 201, 50.0);
}

TwoSlitGeometry TwoSlitGeometry::masked() const {
  return TwoSlitGeometry(source_, slit_a_, std::nullopt, cells_, k_);
}

ComplexAmplitude leg_amplitude(Point2 from, Point2 to, double wavenumber) {
  const double length = distance(from, to);
  if (length == 0.0) throw DegenerateGeometry("zero-length propagation leg");
  return std::polar(1.0 / length, wavenumber * length);
}

ComplexAmplitude two_slit_amplitude(const TwoSlitGeometry& geom, Point2 target) {
  const double k = geom.wavenumber();
  ComplexAmplitude psi =
      leg_amplitude(geom.slit_a(), target, k) * leg_amplitude(geom.source(), geom.slit_a(), k);
  if (const auto& b = geom.slit_b()) {
    psi += leg_amplitude(*b, target, k) * leg_amplitude(geom.source(), *b, k);
  }
  return psi;
}

ComplexAmplitude two_slit_offer(const TwoSlitGeometry& geom, std::size_t cell) {
  if (cell >= geom.cells().size()) throw std::out_of_range("screen cell index out of range");
  return two_slit_amplitude(geom, geom.cells()[cell]);
}

OfferWave two_slit_offer_wave(const TwoSlitGeometry& geom) {
  std::vector<OfferComponent> components;
  components.reserve(geom.cells().size());
  for (std::size_t i = 0; i < geom.cells().size(); ++i) {
    components.push_back({AbsorberId{i}, two_slit_offer(geom, i)});
  }
  return OfferWave(std::move(components));
}

std::vector<double> analytic_weights(const TwoSlitGeometry& geom) {
  std::vector<double> w(geom.cells().size());
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = born_weight(two_slit_offer(geom, i));
    total += w[i];
  }
  for (double& x : w) x /= total;
  return w;
}

std::uint64_t Histogram::events() const {
  std::uint64_t n = 0;
  for (auto c : counts) n += c;
  return n;
}

Histogram& Histogram::merge(const Histogram& other) {
  if (other.counts.size() != counts.size()) {
    throw InvalidParameter("cannot merge histograms with different bin counts");
  }
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  unconfirmed += other.unconfirmed;
  return *this;
}

Histogram two_slit_pattern(const TwoSlitGeometry& geom, std::uint64_t trials, RandomStream& rng,
                           const ScreenModel& screen) {
  if (trials == 0) throw InvalidParameter("trials must be >= 1");
  const OfferWave ow = two_slit_offer_wave(geom);
  const AbsorberSet cells = screen_absorbers(geom.cells().size(), screen.coupling);
  Histogram hist{std::vector<std::uint64_t>(geom.cells().size(), 0), 0};
  for (std::uint64_t t = 0; t < trials; ++t) {
    accumulate(hist, run_transaction(ow, cells, screen.regime, rng));
  }
  return hist;
}

Histogram two_slit_pattern_parallel(const TwoSlitGeometry& geom, std::uint64_t trials,
                                    std::uint64_t seed, unsigned threads,
                                    const ScreenModel& screen) {
  if (trials == 0) throw InvalidParameter("trials must be >= 1");
  threads = std::max(1u, threads);
  const OfferWave ow = two_slit_offer_wave(geom);
  const AbsorberSet cells = screen_absorbers(geom.cells().size(), screen.coupling);
  const Histogram empty{std::vector<std::uint64_t>(geom.cells().size(), 0), 0};

  std::vector<Histogram> partial(threads, empty);
  auto work = [&](unsigned worker) {
    for (std::uint64_t t = worker; t < trials; t += threads) {
      RandomStream rng = RandomStream::substream(seed, t);
      accumulate(partial[worker], run_transaction(ow, cells, screen.regime, rng));
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  pool.clear();

  Histogram total = empty;
  for (const auto& h : partial) total.merge(h);
  return total;
}

double fringe_visibility(std::span<const double> intensity) {
  if (intensity.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(intensity.begin(), intensity.end());
  const double sum = *hi + *lo;
  return sum > 0.0 ? (*hi - *lo) / sum : 0.0;
}

Window central_fringe_window(const TwoSlitGeometry& geom, double screen_x) {
  if (!geom.slit_b()) throw InvalidParameter("fringe window needs both slits");
  const Point2 a = geom.slit_a();
  const Point2 b = *geom.slit_b();
  const double separation = distance(a, b);
  const double depth = std::abs(screen_x - 0.5 * (a.x + b.x));
  const double period = (2.0 * std::numbers::pi / geom.wavenumber()) * depth / separation;
  const double centre = 0.5 * (a.y + b.y);
  return {centre - 0.6 * period, centre + 0.6 * period};
}

std::vector<double> analytic_intensity_profile(const TwoSlitGeometry& geom, double screen_x,
                                               Window window, std::size_t samples) {
  std::vector<double> profile(samples);
  const double step =
      samples > 1 ? (window.hi - window.lo) / static_cast<double>(samples - 1) : 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const Point2 p{screen_x, window.lo + step * static_cast<double>(i)};
    profile[i] = born_weight(two_slit_amplitude(geom, p));
  }
  return profile;
}

}  // namespace tqsim
