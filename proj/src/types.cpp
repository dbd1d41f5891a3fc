#include "acute/types.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "acute/rng.hpp"

namespace acute {

namespace {

constexpr double kRenormTol = 1e-9;  // accept-and-renormalize threshold
constexpr double kNormTol = 1e-12;   // post-construction invariant

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

std::vector<double> flatten_and_check(const std::vector<std::vector<double>>& raw, int dim,
                                      const char* what) {
  if (dim < 0) throw Error(ErrorKind::InvalidInput, "sphere dimension must be >= 0");
  if (raw.empty()) throw Error(ErrorKind::Empty, std::string(what) + ": no points given");
  const std::size_t width = static_cast<std::size_t>(dim) + 1;
  std::vector<double> coords;
  coords.reserve(raw.size() * width);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].size() != width) {
      throw Error(ErrorKind::DimensionMismatch,
                  std::string(what) + ": point " + std::to_string(i) + " has " +
                      std::to_string(raw[i].size()) + " coordinates, expected " +
                      std::to_string(width));
    }
    const double r = norm(raw[i]);
    if (std::abs(r - 1.0) > kRenormTol) {
      throw Error(ErrorKind::NotOnSphere, std::string(what) + ": point " + std::to_string(i) +
                                              " has norm " + std::to_string(r));
    }
    for (double x : raw[i]) coords.push_back(x / r);
  }
  return coords;
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::NotOnSphere: return "not_on_sphere";
    case ErrorKind::Empty: return "empty";
    case ErrorKind::InvalidCount: return "invalid_count";
    case ErrorKind::ZeroVector: return "zero_vector";
    case ErrorKind::InvalidParams: return "invalid_params";
    case ErrorKind::InsufficientNodes: return "insufficient_nodes";
    case ErrorKind::WrongBasis: return "wrong_basis";
    case ErrorKind::WrongDimension: return "wrong_dimension";
    case ErrorKind::QuadratureUnstable: return "quadrature_unstable";
    case ErrorKind::InvalidB: return "invalid_b";
    case ErrorKind::BracketInvalid: return "bracket_invalid";
    case ErrorKind::InvalidInput: return "invalid_input";
    case ErrorKind::InconsistentBounds: return "inconsistent_bounds";
    case ErrorKind::Io: return "io";
    case ErrorKind::Usage: return "usage";
  }
  return "unknown";
}

PointConfiguration::PointConfiguration(int dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ < 0) throw Error(ErrorKind::InvalidInput, "sphere dimension must be >= 0");
  if (coords_.empty() || coords_.size() % width() != 0)
    throw Error(ErrorKind::DimensionMismatch, "coordinate buffer size not a multiple of dim+1");
  for (std::size_t i = 0; i < n(); ++i) {
    if (std::abs(norm(point(i)) - 1.0) > kNormTol)
      throw Error(ErrorKind::NotOnSphere, "point " + std::to_string(i) + " is off the sphere");
  }
}

DiscreteMeasure::DiscreteMeasure(int dim, std::vector<double> coords, std::vector<double> weights)
    : dim_(dim), coords_(std::move(coords)), weights_(std::move(weights)) {
  if (dim_ < 0) throw Error(ErrorKind::InvalidInput, "sphere dimension must be >= 0");
  if (weights_.empty() || coords_.size() != weights_.size() * width())
    throw Error(ErrorKind::DimensionMismatch, "atom/weight count mismatch");
  double sum = 0.0;
  for (double w : weights_) {
    if (w < 0.0) throw Error(ErrorKind::InvalidInput, "negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kNormTol)
    throw Error(ErrorKind::InvalidInput, "weights sum to " + std::to_string(sum));
  for (std::size_t i = 0; i < n(); ++i) {
    if (std::abs(norm(point(i)) - 1.0) > kNormTol)
      throw Error(ErrorKind::NotOnSphere, "atom " + std::to_string(i) + " is off the sphere");
  }
}

double Potential::value(double t) const {
  switch (kind) {
    case Kind::AcuteAngle: return std::acos(std::abs(t));
    case Kind::Frame: return t * t;
    case Kind::PFrame: return std::pow(std::abs(t), param);
    case Kind::Geodesic: return std::acos(t);
    case Kind::QuadraticMajorant: return std::numbers::pi / 2 - param * t * t;
  }
  return 0.0;
}

double Potential::value_at_one() const {
  switch (kind) {
    case Kind::AcuteAngle: return 0.0;
    case Kind::Frame: return 1.0;
    case Kind::PFrame: return 1.0;
    case Kind::Geodesic: return 0.0;
    case Kind::QuadraticMajorant: return std::numbers::pi / 2 - param;
  }
  return 0.0;
}

double Potential::derivative(double t, double smoothing_eps) const {
  // derivative-domain clamp keeps coincident/antipodal pairs finite
  const double tc = std::min(1.0 - 1e-12, std::max(-1.0 + 1e-12, t));
  switch (kind) {
    case Kind::AcuteAngle: {
      if (smoothing_eps > 0.0) {
        const double e2 = smoothing_eps * smoothing_eps;
        return -tc / std::sqrt((tc * tc + e2) * (1.0 - tc * tc));
      }
      if (tc == 0.0) return 0.0;  // symmetric subgradient
      const double s = tc > 0.0 ? 1.0 : -1.0;
      return -s / std::sqrt(1.0 - tc * tc);
    }
    case Kind::Frame: return 2.0 * t;
    case Kind::PFrame: {
      if (t == 0.0) return 0.0;
      const double s = t > 0.0 ? 1.0 : -1.0;
      return param * std::pow(std::abs(t), param - 1.0) * s;
    }
    case Kind::Geodesic: return -1.0 / std::sqrt(1.0 - tc * tc);
    case Kind::QuadraticMajorant: return -2.0 * param * t;
  }
  return 0.0;
}

double Potential::smoothed_value(double t, double smoothing_eps) const {
  if (kind != Kind::AcuteAngle || smoothing_eps <= 0.0) return value(t);
  const double e2 = smoothing_eps * smoothing_eps;
  const double u = std::sqrt((t * t + e2) / (1.0 + e2));
  return std::acos(std::min(1.0, u));
}

std::string Potential::name() const {
  switch (kind) {
    case Kind::AcuteAngle: return "acute";
    case Kind::Frame: return "frame";
    case Kind::PFrame: return "pframe:" + std::to_string(param);
    case Kind::Geodesic: return "geodesic";
    case Kind::QuadraticMajorant: return "quadmaj:" + std::to_string(param);
  }
  return "?";
}

Potential Potential::pframe(double p) {
  if (!(p > 0.0)) throw Error(ErrorKind::InvalidParams, "pframe exponent must be > 0");
  return {Kind::PFrame, p};
}

Potential Potential::parse(const std::string& text) {
  if (text == "acute") return acute();
  if (text == "frame") return frame();
  if (text == "geodesic") return geodesic();
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string head = text.substr(0, colon);
    const std::string tail = text.substr(colon + 1);
    try {
      if (head == "pframe") return pframe(std::stod(tail));
      if (head == "quadmaj") return quadratic_majorant(std::stod(tail));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::Usage, "bad potential parameter: " + text);
    }
  }
  throw Error(ErrorKind::Usage,
              "unknown potential '" + text + "' (acute|frame|pframe:p|geodesic|quadmaj:b)");
}

PointConfiguration validate_configuration(const std::vector<std::vector<double>>& raw, int dim) {
  return PointConfiguration(dim, flatten_and_check(raw, dim, "configuration"));
}

DiscreteMeasure validate_measure(const std::vector<std::vector<double>>& raw,
                                 const std::vector<double>& weights, int dim) {
  auto coords = flatten_and_check(raw, dim, "measure");
  if (weights.size() != raw.size())
    throw Error(ErrorKind::DimensionMismatch, "measure: weight count does not match atom count");
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw Error(ErrorKind::InvalidInput, "measure: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kRenormTol)
    throw Error(ErrorKind::InvalidInput, "measure: weights sum to " + std::to_string(sum));
  std::vector<double> normalized(weights);
  for (double& w : normalized) w /= sum;
  return DiscreteMeasure(dim, std::move(coords), std::move(normalized));
}

DiscreteMeasure uniform_measure(const PointConfiguration& config) {
  return DiscreteMeasure(config.dim(), config.coords(),
                         std::vector<double>(config.n(), 1.0 / static_cast<double>(config.n())));
}

PointConfiguration random_configuration(int dim, std::size_t n, const RngSpec& rng) {
  if (dim < 0) throw Error(ErrorKind::InvalidInput, "sphere dimension must be >= 0");
  if (n == 0) throw Error(ErrorKind::InvalidCount, "need at least one point");
  NormalRng gen(rng);
  const int width = dim + 1;
  std::vector<double> coords(n * width);
  for (std::size_t i = 0; i < n; ++i) {
    double r2;
    do {
      r2 = 0.0;
      for (int k = 0; k < width; ++k) {
        const double g = gen.normal();
        coords[i * width + k] = g;
        r2 += g * g;
      }
    } while (r2 == 0.0);
    const double inv = 1.0 / std::sqrt(r2);
    for (int k = 0; k < width; ++k) coords[i * width + k] *= inv;
  }
  return PointConfiguration(dim, std::move(coords));
}

double clamp_dot(std::span<const double> x, std::span<const double> y) {
  double t = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) t += x[k] * y[k];
  return std::min(1.0, std::max(-1.0, t));
}

}  // namespace acute
