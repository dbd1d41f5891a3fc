#pragma once

// Core domain types shared by every module: point configurations and
// discrete measures on S^d, the pair potentials F(t) on [-1,1], and the
// seeded RNG specification used for reproducible runs.

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace acute {

enum class ErrorKind {
  DimensionMismatch,
  NotOnSphere,
  Empty,
  InvalidCount,
  ZeroVector,
  InvalidParams,
  InsufficientNodes,
  WrongBasis,
  WrongDimension,
  QuadratureUnstable,
  InvalidB,
  BracketInvalid,
  InvalidInput,
  InconsistentBounds,
  Io,
  Usage,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  const char* kind_name() const { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

// N unit vectors in R^(d+1), stored row-major. Immutable after
// construction; every point has norm 1 within 1e-12.
class PointConfiguration {
 public:
  PointConfiguration(int dim, std::vector<double> coords);

  int dim() const { return dim_; }
  int width() const { return dim_ + 1; }
  std::size_t n() const { return coords_.size() / width(); }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * width(), static_cast<std::size_t>(width())};
  }
  const std::vector<double>& coords() const { return coords_; }

 private:
  int dim_;
  std::vector<double> coords_;
};

// Weighted point masses (z_i, w_i) on S^d with w_i >= 0 and sum w_i = 1.
class DiscreteMeasure {
 public:
  DiscreteMeasure(int dim, std::vector<double> coords, std::vector<double> weights);

  int dim() const { return dim_; }
  int width() const { return dim_ + 1; }
  std::size_t n() const { return weights_.size(); }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * width(), static_cast<std::size_t>(width())};
  }
  double weight(std::size_t i) const { return weights_[i]; }
  const std::vector<double>& coords() const { return coords_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  int dim_;
  std::vector<double> coords_;
  std::vector<double> weights_;
};

// Pair potential F: [-1,1] -> R applied to inner products of unit vectors.
struct Potential {
  enum class Kind { AcuteAngle, Frame, PFrame, Geodesic, QuadraticMajorant };

  Kind kind = Kind::AcuteAngle;
  double param = 0.0;  // p for PFrame, b for QuadraticMajorant

  double value(double t) const;
  // F(1), evaluated from the formula rather than through a rounded dot
  // product. Diagonal terms of pair sums use this.
  double value_at_one() const;
  // dF/dt with the acute-angle conventions: sign(0)=0, |t| clamped to
  // 1-1e-12, and optional smoothing eps (ignored by the smooth kinds).
  double derivative(double t, double smoothing_eps) const;
  // Smoothed value F_eps; equals value() for every kind except AcuteAngle,
  // where F_eps(t) = arccos(sqrt((t^2+eps^2)/(1+eps^2))).
  double smoothed_value(double t, double smoothing_eps) const;

  std::string name() const;
  static Potential acute() { return {Kind::AcuteAngle, 0.0}; }
  static Potential frame() { return {Kind::Frame, 0.0}; }
  static Potential pframe(double p);
  static Potential geodesic() { return {Kind::Geodesic, 0.0}; }
  static Potential quadratic_majorant(double b) { return {Kind::QuadraticMajorant, b}; }
  // Parses "acute", "frame", "pframe:<p>", "geodesic", "quadmaj:<b>".
  static Potential parse(const std::string& text);
};

// Seed specification: one documented generator, master seed, stream index.
// Identical (seed, stream) reproduces identical sequences regardless of
// thread count.
struct RngSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  static const char* algorithm() { return "splitmix64-seeded mt19937_64, Box-Muller normals"; }
  RngSpec with_stream_offset(std::uint64_t k) const { return {seed, stream + k}; }
};

// Builds a validated configuration. Points whose norm deviates from 1 by
// at most 1e-9 are renormalized (decimal round-trips must survive);
// larger deviations are rejected.
PointConfiguration validate_configuration(const std::vector<std::vector<double>>& raw, int dim);

// Same acceptance rules for the support; weights must be nonnegative with
// sum within 1e-9 of 1 (then normalized exactly).
DiscreteMeasure validate_measure(const std::vector<std::vector<double>>& raw,
                                 const std::vector<double>& weights, int dim);

// Uniform-weight measure on the support of a configuration.
DiscreteMeasure uniform_measure(const PointConfiguration& config);

// n points, each a normalized vector of d+1 iid standard normals.
PointConfiguration random_configuration(int dim, std::size_t n, const RngSpec& rng);

// x.y clamped to [-1,1]; use before every arccos.
double clamp_dot(std::span<const double> x, std::span<const double> y);

}  // namespace acute
