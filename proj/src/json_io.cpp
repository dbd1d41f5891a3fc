#include "acute/json_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace acute {

namespace {

void dump_node(const json& j, std::ostream& os, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * indent, ' ');
  const std::string pad_in(static_cast<std::size_t>(depth + 1) * indent, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        os << pad_in << json(it.key()).dump() << ": ";
        dump_node(it.value(), os, indent, depth + 1);
        if (i + 1 < j.size()) os << ",";
        os << "\n";
      }
      os << pad << "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // flat arrays of numbers stay on one line
      bool scalars_only = true;
      for (const auto& v : j)
        if (v.is_structured()) scalars_only = false;
      if (scalars_only) {
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          dump_node(j[i], os, indent, depth + 1);
          if (i + 1 < j.size()) os << ", ";
        }
        os << "]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        os << pad_in;
        dump_node(j[i], os, indent, depth + 1);
        if (i + 1 < j.size()) os << ",";
        os << "\n";
      }
      os << pad << "]";
      return;
    }
    case json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
      return;
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string dump_json(const json& j, int indent) {
  std::ostringstream os;
  dump_node(j, os, indent, 0);
  os << "\n";
  return os.str();
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot open for writing: " + path);
  out << dump_json(j);
  if (!out) throw Error(ErrorKind::Io, "write failed: " + path);
}

json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open: " + path);
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Io, path + ": " + e.what());
  }
  return j;
}

json configuration_to_json(const PointConfiguration& config) {
  json j;
  j["dim"] = config.dim();
  json points = json::array();
  for (std::size_t i = 0; i < config.n(); ++i) {
    json row = json::array();
    for (double x : config.point(i)) row.push_back(x);
    points.push_back(std::move(row));
  }
  j["points"] = std::move(points);
  return j;
}

json measure_to_json(const DiscreteMeasure& mu) {
  json j;
  j["dim"] = mu.dim();
  json points = json::array();
  for (std::size_t i = 0; i < mu.n(); ++i) {
    json row = json::array();
    for (double x : mu.point(i)) row.push_back(x);
    points.push_back(std::move(row));
  }
  j["points"] = std::move(points);
  j["weights"] = mu.weights();
  return j;
}

namespace {

std::vector<std::vector<double>> points_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
    throw Error(ErrorKind::Io, "expected an object with 'dim' and 'points'");
  std::vector<std::vector<double>> raw;
  for (const auto& row : j.at("points")) raw.push_back(row.get<std::vector<double>>());
  return raw;
}

}  // namespace

PointConfiguration configuration_from_json(const json& j) {
  return validate_configuration(points_from_json(j), j.at("dim").get<int>());
}

DiscreteMeasure measure_from_json(const json& j) {
  auto raw = points_from_json(j);
  std::vector<double> weights;
  if (j.contains("weights") && !j.at("weights").is_null())
    weights = j.at("weights").get<std::vector<double>>();
  else
    weights.assign(raw.size(), 1.0 / static_cast<double>(raw.size()));
  return validate_measure(raw, weights, j.at("dim").get<int>());
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

}  // namespace acute
