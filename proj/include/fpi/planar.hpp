#pragma once

/**
 * @file planar.hpp
 * @brief Built-in planar maps and a winding-number fixed point index engine.
 *
 * Several of the maps are written on the cylinder S^1 x R with its lower
 * end e- compactified to a point. The chart used throughout is
 *
 *     (theta, r)  ->  (e^r cos theta, e^r sin theta),     e-  ->  origin,
 *
 * so e- is the planar fixed point at 0 and small circles around it are
 * circles {r = const} of the cylinder.
 *
 * The index i(f^n, p) is the winding number of f^n(x) - x along a small
 * counterclockwise circle around p, computed by adaptive bisection of the
 * circle parameter until every sampled angle increment is below pi/2.
 */

#include "fpi/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fpi {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  bool operator==(const Point&) const = default;
};

inline double norm(Point p) { return std::hypot(p.x, p.y); }

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Base of the failures of the numerical index computation.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// |f^n(x) - x| fell below epsilon at a sample of the circle.
class FixedPointOnCurve : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

/// Bisection depth exceeded or the angle sum was not a whole number of
/// turns; usually the radius is unsuitable.
class RefinementExhausted : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

namespace detail {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// theta mod 2 pi in [0, 2 pi).
inline double wrap_positive(double theta) {
  double u = std::fmod(theta, kTwoPi);
  if (u < 0) u += kTwoPi;
  if (u >= kTwoPi) u -= kTwoPi;
  return u;
}

/// Signed circular distance representative in (-pi, pi].
inline double wrap_signed(double theta) {
  double u = wrap_positive(theta);
  return u > kPi ? u - kTwoPi : u;
}

inline Point from_cylinder(double theta, double r) {
  const double rho = std::exp(r);
  return {rho * std::cos(theta), rho * std::sin(theta)};
}

}  // namespace detail

/// f(x) = x / 2. Sink at the origin.
struct SinkExample {
  Point operator()(Point p) const { return 0.5 * p; }
};

/// Polar (rho, theta) -> (2 rho, d theta). Source of degree d at the origin.
struct SourceExample {
  std::int64_t degree = 2;

  Point operator()(Point p) const {
    const double rho = norm(p);
    if (rho == 0.0) return {0.0, 0.0};
    const double theta = std::atan2(p.y, p.x) * static_cast<double>(degree);
    return {2.0 * rho * std::cos(theta), 2.0 * rho * std::sin(theta)};
  }
};

/// Realizes sigma^1 - sum_{k in F} a_k sigma^k at the origin.
///
/// On the closed lower half cylinder (r <= 0, the unit disk in the chart):
///
///   f(theta, r) = (h(theta), min(r + g(theta), 0))
///
/// where h is a circle map with exactly a_k attracting k-periodic orbits laid
/// out on evenly spaced angles, constant on a plateau of half width delta
/// around every orbit point and a smoothstep between plateaus (along the
/// shorter arc between the two plateau images), and g is >= 0 exactly on the
/// plateaus V: delta - dist(theta, P) on V, and outside V a linear descent to
/// -kOffPlateauDepth at the middle of each gap. The orbit points on the
/// boundary circle are sinks of f and the origin is the only other fixed
/// point of any f^n.
///
/// h is flat at the plateau edges, so an orbit can only be stretched in theta
/// where g has already pulled it well towards the origin. This keeps the
/// features of f^n - x on small circles at the plateau scale for large n.
class RealizationMap {
 public:
  static constexpr Index kMaxPoints = 4096;
  static constexpr double kOffPlateauDepth = 4.0;

  explicit RealizationMap(std::map<Index, Index> multiplicities) : multiplicities_(std::move(multiplicities)) {
    if (multiplicities_.empty()) throw std::invalid_argument("RealizationMap: F is empty");
    for (const auto& [k, a] : multiplicities_) {
      if (k == 0 || a == 0) throw std::invalid_argument("RealizationMap: periods and multiplicities must be positive");
      for (Index c = 0; c < a; ++c) {
        const Index first = next_.size();
        for (Index i = 0; i < k; ++i) next_.push_back(i + 1 < k ? first + i + 1 : first);
        if (next_.size() > kMaxPoints) throw std::invalid_argument("RealizationMap: too many orbit points");
      }
    }
    const Index count = next_.size();
    angles_.resize(count);
    for (Index j = 0; j < count; ++j) angles_[j] = detail::kTwoPi * static_cast<double>(j) / static_cast<double>(count);
    delta_ = detail::kTwoPi / static_cast<double>(count) / 8.0;
  }

  const std::map<Index, Index>& multiplicities() const { return multiplicities_; }
  /// Orbit points on the boundary circle, in layout order.
  const std::vector<double>& orbit_angles() const { return angles_; }
  double plateau_half_width() const { return delta_; }

  /// Number of boundary points fixed by h^n, sum_{k | n} k a_k.
  Index boundary_fixed_points(Index n) const {
    Index total = 0;
    for (const auto& [k, a] : multiplicities_)
      if (n % k == 0) total += k * a;
    return total;
  }

  /// The circle map h.
  double circle_map(double theta) const {
    const Index count = angles_.size();
    const double u = detail::wrap_positive(theta);
    const double spacing = detail::kTwoPi / static_cast<double>(count);
    Index j = static_cast<Index>(u / spacing);
    if (j >= count) j = count - 1;
    const double offset = u - angles_[j];
    if (offset <= delta_) return angles_[next_[j]];
    if (spacing - offset <= delta_) return angles_[next_[(j + 1) % count]];
    const double t = (offset - delta_) / (spacing - 2.0 * delta_);
    const double s = t * t * (3.0 - 2.0 * t);
    const double from = angles_[next_[j]];
    const double to = angles_[next_[(j + 1) % count]];
    const double sweep = detail::wrap_signed(to - from);
    return detail::wrap_positive(from + s * sweep);
  }

  /// dist(theta, complement of int V) on V, negative and piecewise linear off V.
  double height_increment(double theta) const {
    const Index count = angles_.size();
    const double spacing = detail::kTwoPi / static_cast<double>(count);
    const double u = detail::wrap_positive(theta);
    const double offset = std::fmod(u, spacing);
    const double distance = std::min(offset, spacing - offset);
    return distance <= delta_ ? delta_ - distance : -kOffPlateauDepth * (distance - delta_) / (0.5 * spacing - delta_);
  }

  Point operator()(Point p) const {
    const double rho = norm(p);
    if (rho > 1.0 + 1e-12) throw DomainError("RealizationMap: point outside the unit disk");
    if (rho == 0.0) return {0.0, 0.0};
    const double theta = std::atan2(p.y, p.x);
    const double r = std::min(std::log(rho), 0.0);
    return detail::from_cylinder(circle_map(theta), std::min(r + height_increment(theta), 0.0));
  }

 private:
  std::map<Index, Index> multiplicities_;
  std::vector<Index> next_;
  std::vector<double> angles_;
  double delta_ = 0.0;
};

/// Fixed point at the origin that is isolated among periodic points but not
/// as an invariant set, with i(f^n, 0) = 2^n - 1.
///
/// h is a degree-2 circle covering that fixes I0 = [-pi/8, pi/8] pointwise and
/// has slope (4 pi - pi/4) / (2 pi - pi/4) on the complementary arc. Outside
/// the strip A = I0 x R the map is (h(theta), r + 1); inside A it is the strip
/// homeomorphism
///
///   t(x, y) = (x + x (1 - |x|), y + s(x, y)),
///   s(x, y) = (1 - |x|) clamp(y, -1, 1) + |x|,
///
/// conjugated by (theta, r) -> (8 theta / pi, r).
struct UnboundedExample {
  static constexpr double kHalfWidth = detail::kPi / 8.0;
  static constexpr double kSlope = (4.0 * detail::kPi - detail::kPi / 4.0) / (2.0 * detail::kPi - detail::kPi / 4.0);

  static double circle_map(double theta) {
    const double v = detail::wrap_signed(theta);
    if (std::abs(v) <= kHalfWidth) return v;
    const double u = v > 0 ? v : v + detail::kTwoPi;  // in (pi/8, 2 pi - pi/8)
    return detail::wrap_signed(kHalfWidth + kSlope * (u - kHalfWidth));
  }

  static double strip_shift(double x, double y) {
    const double ax = std::abs(x);
    return (1.0 - ax) * std::clamp(y, -1.0, 1.0) + ax;
  }

  Point operator()(Point p) const {
    const double rho = norm(p);
    if (rho == 0.0) return {0.0, 0.0};
    const double theta = std::atan2(p.y, p.x);
    const double r = std::log(rho);
    if (std::abs(theta) > kHalfWidth) return detail::from_cylinder(circle_map(theta), r + 1.0);
    const double x = theta / kHalfWidth;
    const double x_next = x + x * (1.0 - std::abs(x));
    return detail::from_cylinder(x_next * kHalfWidth, r + strip_shift(x, r));
  }
};

class PlanarMap {
 public:
  using Family = std::variant<SinkExample, SourceExample, RealizationMap, UnboundedExample>;

  PlanarMap(Family family) : family_(std::move(family)) {}  // NOLINT(google-explicit-constructor)

  static PlanarMap sink() { return PlanarMap(SinkExample{}); }
  static PlanarMap source(std::int64_t degree) {
    if (degree == 0) throw std::invalid_argument("SourceExample: degree must be nonzero");
    return PlanarMap(SourceExample{degree});
  }
  static PlanarMap realization(std::map<Index, Index> multiplicities) {
    return PlanarMap(RealizationMap(std::move(multiplicities)));
  }
  static PlanarMap unbounded() { return PlanarMap(UnboundedExample{}); }

  const Family& family() const { return family_; }

  std::string name() const {
    switch (family_.index()) {
      case 0: return "sink";
      case 1: return "source";
      case 2: return "realization";
      default: return "unbounded";
    }
  }

  Point evaluate(Point p) const {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw DomainError("evaluate: non-finite point");
    return std::visit([&](const auto& f) { return f(p); }, family_);
  }

  Point iterate(Point p, Index n) const {
    for (Index i = 0; i < n; ++i) p = evaluate(p);
    return p;
  }

  /// Angular width of the narrowest feature of f around the origin, 0 if none.
  double feature_width() const {
    if (const auto* r = std::get_if<RealizationMap>(&family_)) return 2.0 * r->plateau_half_width();
    return 0.0;
  }

 private:
  Family family_;
};

inline Point evaluate(const PlanarMap& f, Point p) { return f.evaluate(p); }
inline Point iterate(const PlanarMap& f, Point p, Index n) { return f.iterate(p, n); }

struct WindingOptions {
  Index initial_samples = 256;
  double epsilon = 1e-12;
  Index max_depth = 24;
  double max_step = std::numbers::pi / 2.0;
  /// The count is grown by the golden ratio until two consecutive runs agree,
  /// up to this many initial samples. No cross-check when it is <= initial_samples.
  Index max_initial_samples = Index{1} << 18;
  /// Budget of map evaluations f^n(x) per winding_index call, cross-check included.
  Index max_samples = Index{1} << 22;
};

struct WindingResult {
  std::int64_t index = 0;
  Index samples_used = 0;
  double max_arc_step = 0.0;  // radians
};

/// Default circle radius around e-: e^-3.
inline double default_radius() { return std::exp(-3.0); }

namespace detail {

class WindingIntegrator {
 public:
  WindingIntegrator(const PlanarMap& f, Index n, Point center, double radius, const WindingOptions& opts,
                    Index budget)
      : f_(f), n_(n), center_(center), radius_(radius), opts_(opts), budget_(budget) {}

  WindingResult run() {
    if (opts_.initial_samples < 3) throw std::invalid_argument("winding_index: need at least 3 initial samples");
    const Index count = opts_.initial_samples;
    const Point first = displacement(0.0);
    Point previous = first;
    double total = 0.0;
    for (Index i = 1; i <= count; ++i) {
      const double s0 = static_cast<double>(i - 1) / static_cast<double>(count);
      const double s1 = static_cast<double>(i) / static_cast<double>(count);
      const Point current = i == count ? first : displacement(s1);
      total += sweep(s0, previous, s1, current, 0);
      previous = current;
    }
    const double turns = total / kTwoPi;
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) >= 1e-6)
      throw RefinementExhausted("winding_index: angle sum " + std::to_string(turns) + " is not a whole number of turns");
    return WindingResult{static_cast<std::int64_t>(rounded), samples_, max_step_};
  }

 private:
  static double angle_between(Point a, Point b) {
    return std::atan2(a.x * b.y - a.y * b.x, a.x * b.x + a.y * b.y);
  }

  Point displacement(double s) {
    const double phi = kTwoPi * s;
    const Point x = center_ + radius_ * Point{std::cos(phi), std::sin(phi)};
    if (samples_ >= budget_)
      throw RefinementExhausted("winding_index: sample budget of " + std::to_string(opts_.max_samples) +
                                " exhausted for f^" + std::to_string(n_));
    const Point g = f_.iterate(x, n_) - x;
    ++samples_;
    if (!std::isfinite(g.x) || !std::isfinite(g.y)) throw RefinementExhausted("winding_index: non-finite image");
    if (norm(g) < opts_.epsilon)
      throw FixedPointOnCurve("winding_index: f^" + std::to_string(n_) + " has a fixed point on the circle near (" +
                              std::to_string(x.x) + ", " + std::to_string(x.y) + ")");
    return g;
  }

  // Angle swept on [s0, s1]. An arc is accepted only if its direct increment
  // and both half increments are within max_step; checking the midpoint keeps
  // an arc whose true sweep is close to a multiple of 2 pi from passing as small.
  double sweep(double s0, Point g0, double s1, Point g1, Index depth) {
    const double sm = 0.5 * (s0 + s1);
    const Point gm = displacement(sm);
    const double whole = angle_between(g0, g1);
    const double left = angle_between(g0, gm);
    const double right = angle_between(gm, g1);
    const double bound = opts_.max_step;
    if (std::abs(whole) < bound && std::abs(left) < bound && std::abs(right) < bound) {
      max_step_ = std::max({max_step_, std::abs(left), std::abs(right)});
      return left + right;
    }
    if (depth >= opts_.max_depth)
      throw RefinementExhausted("winding_index: refinement depth " + std::to_string(opts_.max_depth) +
                                " exceeded; try another radius");
    return sweep(s0, g0, sm, gm, depth + 1) + sweep(sm, gm, s1, g1, depth + 1);
  }

  const PlanarMap& f_;
  Index n_;
  Point center_;
  double radius_;
  WindingOptions opts_;
  Index budget_;
  Index samples_ = 0;
  double max_step_ = 0.0;
};

}  // namespace detail

/// Winding number of f^n(x) - x as x runs once counterclockwise around the
/// circle |x - center| = radius. This is the sum of the fixed point indices
/// of f^n inside the circle.
///
/// Bisection cannot see turns that fall entirely between two initial samples,
/// and on pieces where f^n - x turns at a constant rate a dyadic grid aliases
/// the same way at every level. The run is therefore repeated with the initial
/// count scaled by the golden ratio until two consecutive results agree (see
/// WindingOptions::max_initial_samples). The first run also uses at least
/// four samples per PlanarMap::feature_width.
inline WindingResult winding_index(const PlanarMap& f, Index n, Point center, double radius,
                                   const WindingOptions& opts = {}) {
  if (n == 0) throw std::invalid_argument("winding_index: n must be positive");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("winding_index: radius must be positive");
  WindingOptions run_opts = opts;
  if (const double width = f.feature_width(); width > 0.0)
    run_opts.initial_samples =
        std::max(run_opts.initial_samples, static_cast<Index>(std::ceil(4.0 * detail::kTwoPi / width)));
  WindingResult result = detail::WindingIntegrator(f, n, center, radius, run_opts, opts.max_samples).run();
  if (opts.max_initial_samples <= run_opts.initial_samples) return result;
  Index total = result.samples_used;
  while (true) {
    const Index previous = run_opts.initial_samples;
    run_opts.initial_samples = static_cast<Index>(std::llround(static_cast<double>(previous) * std::numbers::phi));
    if (run_opts.initial_samples > opts.max_initial_samples)
      throw RefinementExhausted("winding_index: result still changes at " + std::to_string(previous) +
                                " initial samples; f^" + std::to_string(n) + " is not resolved on this circle");
    const WindingResult finer =
        detail::WindingIntegrator(f, n, center, radius, run_opts, opts.max_samples - total).run();
    total += finer.samples_used;
    if (finer.index == result.index) {
      result.samples_used = total;
      return result;
    }
    result = finer;
  }
}

/// (i(f^n, center))_{n=1..N} assembled from winding_index.
inline IndexSequence index_sequence_numerical(const PlanarMap& f, Index horizon, Point center, double radius,
                                              const WindingOptions& opts = {}) {
  auto seq = IndexSequence::zeros(horizon);
  for (Index n = 1; n <= horizon; ++n) seq[n] = winding_index(f, n, center, radius, opts).index;
  return seq;
}

}  // namespace fpi
