// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tqsim/core.hpp"
#include "tqsim/transactions.hpp"

// Two-slit experiment on the transaction engine.
//
// The offer reaching screen cell X through slit A is <X|A><A|S>, each leg
// an outgoing scalar spherical wave e^{ikL}/L. Both routes are summed
// before squaring. Screen cells are the absorbers competing for the
// transaction; by default they are ideal macroscopic absorbers (g = 1).
namespace tqsim {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point2&, const Point2&) = default;
};

double distance(Point2 a, Point2 b);

class TwoSlitGeometry {
 public:
  // Throws InvalidParameter for coincident slits, duplicate cells, an empty
  // screen, or k not finite and > 0, and DegenerateGeometry when any leg
  // (source-slit or slit-cell) has zero length.
  TwoSlitGeometry(Point2 source, Point2 slit_a, std::optional<Point2> slit_b,
                  std::vector<Point2> cells, double wavenumber);

  // `cells` evenly spaced points on the line x = screen_x spanning
  // [y_min, y_max] inclusive.
  static TwoSlitGeometry screen_line(Point2 source, Point2 slit_a, std::optional<Point2> slit_b,
                                     double screen_x, double y_min, double y_max,
                                     std::size_t cells, double wavenumber);

  // Source (0,0); slits (1, +/-0.5); 201 cells on x = 3, y in [-3, 3]; k = 50.
  static TwoSlitGeometry standard();

  // Same geometry with slit B closed.
  TwoSlitGeometry masked() const;

  Point2 source() const { return source_; }
  Point2 slit_a() const { return slit_a_; }
  const std::optional<Point2>& slit_b() const { return slit_b_; }
  std::span<const Point2> cells() const { return cells_; }
  double wavenumber() const { return k_; }

 private:
  Point2 source_;
  Point2 slit_a_;
  std::optional<Point2> slit_b_;
  std::vector<Point2> cells_;
  double k_;
};

// e^{ikL}/L for L = |to - from|. Throws DegenerateGeometry when L = 0.
ComplexAmplitude leg_amplitude(Point2 from, Point2 to, double wavenumber);

// Summed offer amplitude at an arbitrary screen point.
ComplexAmplitude two_slit_amplitude(const TwoSlitGeometry& geom, Point2 target);

// Summed offer amplitude at screen cell `cell`. Throws std::out_of_range.
ComplexAmplitude two_slit_offer(const TwoSlitGeometry& geom, std::size_t cell);

// Offer wave addressed to every screen cell; absorber id = cell index.
OfferWave two_slit_offer_wave(const TwoSlitGeometry& geom);

// Born weights of the cells normalized to sum to 1.
std::vector<double> analytic_weights(const TwoSlitGeometry& geom);

struct ScreenModel {
  Regime regime = Regime::Nonrelativistic;
  Coupling coupling{1.0};
};

struct Histogram {
  std::vector<std::uint64_t> counts;
  // Trials in which no cell confirmed, so no event happened.
  std::uint64_t unconfirmed = 0;

  std::uint64_t events() const;
  // Bin-wise sum; throws InvalidParameter on a size mismatch.
  Histogram& merge(const Histogram& other);
};

// Sequential run drawing every trial from `rng`.
Histogram two_slit_pattern(const TwoSlitGeometry& geom, std::uint64_t trials, RandomStream& rng,
                           const ScreenModel& screen = {});

// Trial i draws from RandomStream::substream(seed, i), so the histogram is
// the same for every thread count.
Histogram two_slit_pattern_parallel(const TwoSlitGeometry& geom, std::uint64_t trials,
                                    std::uint64_t seed, unsigned threads,
                                    const ScreenModel& screen = {});

// (max - min) / (max + min). Zero for an empty or all-zero profile.
double fringe_visibility(std::span<const double> intensity);

struct Window {
  double lo;
  double hi;
};

// The slit midline on the screen x = screen_x, padded to +/-0.6 of the
// small-angle fringe period (2 pi / k) D / d. Requires both slits.
Window central_fringe_window(const TwoSlitGeometry& geom, double screen_x);

// |amplitude|^2 at `samples` evenly spaced points of the window on x = screen_x.
std::vector<double> analytic_intensity_profile(const TwoSlitGeometry& geom, double screen_x,
                                               Window window, std::size_t samples);

}  // namespace tqsim
