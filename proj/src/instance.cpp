// Copyright 2026 The conncover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "conncover/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace conncover {

namespace {

constexpr double kDefaultTolerance = 1e-9;

double read_tolerance() {
  const char* env = std::getenv("CONNCOVER_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double value = std::strtod(env, &end);
  if (end == env || *end != '\0' || !std::isfinite(value) || value < 0.0) {
    throw std::invalid_argument(std::string("CONNCOVER_TOL is not a non-negative number: ") + env);
  }
  return value;
}

void require_finite(const std::vector<Point>& pts, const char* what) {
  for (const Point& p : pts) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument(std::string("non-finite coordinate in ") + what);
    }
  }
}

// Uniform double in [0, 1) from the top 53 bits; stable across standard
// library implementations, unlike std::uniform_real_distribution.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<Point> points_from_json(const nlohmann::json& arr, const char* what) {
  if (!arr.is_array()) throw std::invalid_argument(std::string("'") + what + "' must be an array");
  std::vector<Point> out;
  out.reserve(arr.size());
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw std::invalid_argument(std::string("'") + what + "' entries must be [x, y] pairs");
    }
    out.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return out;
}

nlohmann::json points_to_json(const std::vector<Point>& pts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Point& p : pts) arr.push_back({p.x, p.y});
  return arr;
}

}  // namespace

double geometric_tolerance() {
  static const double tol = read_tolerance();
  return tol;
}

bool within_radius(double dist2, double radius, double unit) {
  return dist2 <= radius * radius + geometric_tolerance() * unit * unit;
}

SensorSet::SensorSet(std::initializer_list<SensorId> ids) : SensorSet(std::vector<SensorId>(ids)) {}

SensorSet::SensorSet(std::vector<SensorId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

void SensorSet::insert(SensorId id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) ids_.insert(it, id);
}

bool SensorSet::contains(SensorId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

SensorSet set_union(const SensorSet& a, const SensorSet& b) {
  std::vector<SensorId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return SensorSet(std::move(out));
}

Instance::Instance(std::vector<Point> sensors, std::vector<Point> targets, double rc, double rs)
    : sensors_(std::move(sensors)), targets_(std::move(targets)), rc_(rc), rs_(rs) {
  if (!(rc_ > 0.0) || !std::isfinite(rc_)) throw std::invalid_argument("r_c must be positive and finite");
  if (!(rs_ > 0.0) || !std::isfinite(rs_)) throw std::invalid_argument("r_s must be positive and finite");
  if (!std::isfinite(rs_ / rc_)) throw std::invalid_argument("r_s / r_c is not finite");
  require_finite(sensors_, "sensors");
  require_finite(targets_, "targets");
}

bool Instance::covers(SensorId s, TargetId t) const {
  return within_radius(squared_distance(sensor(s), target(t)), rs_, rc_);
}

bool Instance::communicates(SensorId u, SensorId v) const {
  return within_radius(squared_distance(sensor(u), sensor(v)), rc_, rc_);
}

Instance normalize(const Instance& inst) {
  if (inst.rc() == 1.0) return inst;
  const double scale = 1.0 / inst.rc();
  auto scaled = [&](const std::vector<Point>& pts) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const Point& p : pts) out.push_back({p.x * scale, p.y * scale});
    return out;
  };
  return Instance(scaled(inst.sensors()), scaled(inst.targets()), 1.0, inst.rs() * scale);
}

std::vector<TargetId> coverage(const Instance& inst, const SensorSet& sensors) {
  std::vector<TargetId> out;
  for (std::size_t t = 0; t < inst.num_targets(); ++t) {
    for (SensorId s : sensors) {
      if (inst.covers(s, static_cast<TargetId>(t))) {
        out.push_back(static_cast<TargetId>(t));
        break;
      }
    }
  }
  return out;
}

std::size_t coverage_count(const Instance& inst, std::span<const SensorId> sensors) {
  std::size_t count = 0;
  for (std::size_t t = 0; t < inst.num_targets(); ++t) {
    for (SensorId s : sensors) {
      if (inst.covers(s, static_cast<TargetId>(t))) {
        ++count;
        break;
      }
    }
  }
  return count;
}

std::vector<std::vector<SensorId>> coverers(const Instance& inst) {
  std::vector<std::vector<SensorId>> out(inst.num_targets());
  for (std::size_t t = 0; t < inst.num_targets(); ++t) {
    for (std::size_t s = 0; s < inst.num_sensors(); ++s) {
      if (inst.covers(static_cast<SensorId>(s), static_cast<TargetId>(t))) {
        out[t].push_back(static_cast<SensorId>(s));
      }
    }
  }
  return out;
}

Instance generate(std::size_t n, std::size_t m, double rc, double rs, double extent,
                  std::uint64_t seed) {
  if (!(extent >= 0.0) || !std::isfinite(extent)) throw std::invalid_argument("extent must be finite and >= 0");
  std::mt19937_64 rng(seed);
  auto draw = [&](std::size_t count) {
    std::vector<Point> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      const double x = unit_uniform(rng) * extent;
      const double y = unit_uniform(rng) * extent;
      pts.push_back({x, y});
    }
    return pts;
  };
  std::vector<Point> sensors = draw(n);
  std::vector<Point> targets = draw(m);
  return Instance(std::move(sensors), std::move(targets), rc, rs);
}

std::string to_json(const Instance& inst) {
  nlohmann::json j;
  j["rc"] = inst.rc();
  j["rs"] = inst.rs();
  j["sensors"] = points_to_json(inst.sensors());
  j["targets"] = points_to_json(inst.targets());
  return j.dump();
}

Instance instance_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed instance JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("instance JSON must be an object");
  for (const char* key : {"rc", "rs", "sensors", "targets"}) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("instance JSON missing '") + key + "'");
  }
  if (!j["rc"].is_number() || !j["rs"].is_number()) {
    throw std::invalid_argument("'rc' and 'rs' must be numbers");
  }
  return Instance(points_from_json(j["sensors"], "sensors"), points_from_json(j["targets"], "targets"),
                  j["rc"].get<double>(), j["rs"].get<double>());
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_json(buf.str());
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << to_json(inst) << '\n';
}

}  // namespace conncover
