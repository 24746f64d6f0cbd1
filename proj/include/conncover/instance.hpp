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

#ifndef CONNCOVER_INSTANCE_HPP_
#define CONNCOVER_INSTANCE_HPP_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace conncover {

using SensorId = std::int32_t;
using TargetId = std::int32_t;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double squared_distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Geometric tolerance on squared-distance comparisons, in units of r_c^2.
// Defaults to 1e-9; the CONNCOVER_TOL environment variable overrides it once,
// at first use.
double geometric_tolerance();

// Closed-disk membership shared by the communication and sensing relations:
// dist^2 <= radius^2 + tol * unit^2, where unit is the communication radius of
// the instance (1 after normalization).
bool within_radius(double dist2, double radius, double unit);

// Sorted set of sensor ids without duplicates.
class SensorSet {
 public:
  SensorSet() = default;
  SensorSet(std::initializer_list<SensorId> ids);
  explicit SensorSet(std::vector<SensorId> ids);

  void insert(SensorId id);
  bool contains(SensorId id) const;

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<SensorId>& ids() const { return ids_; }

  friend bool operator==(const SensorSet&, const SensorSet&) = default;
  friend auto operator<=>(const SensorSet&, const SensorSet&) = default;

 private:
  std::vector<SensorId> ids_;
};

SensorSet set_union(const SensorSet& a, const SensorSet& b);

// Sensors, targets, communication radius r_c and sensing radius r_s in the
// plane. Immutable after construction.
class Instance {
 public:
  Instance() = default;
  // Throws std::invalid_argument on non-positive radii or non-finite values.
  Instance(std::vector<Point> sensors, std::vector<Point> targets, double rc,
           double rs);

  const std::vector<Point>& sensors() const { return sensors_; }
  const std::vector<Point>& targets() const { return targets_; }
  const Point& sensor(SensorId s) const { return sensors_[static_cast<std::size_t>(s)]; }
  const Point& target(TargetId t) const { return targets_[static_cast<std::size_t>(t)]; }
  std::size_t num_sensors() const { return sensors_.size(); }
  std::size_t num_targets() const { return targets_.size(); }
  double rc() const { return rc_; }
  double rs() const { return rs_; }
  // C = r_s / r_c.
  double ratio() const { return rs_ / rc_; }
  bool is_normalized() const { return rc_ == 1.0; }

  bool covers(SensorId s, TargetId t) const;
  bool communicates(SensorId u, SensorId v) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Point> sensors_;
  std::vector<Point> targets_;
  double rc_ = 1.0;
  double rs_ = 1.0;
};

// Rescales so that r_c = 1. Identity when r_c is already 1.
Instance normalize(const Instance& inst);

// Targets covered by at least one sensor in `sensors`, ascending.
std::vector<TargetId> coverage(const Instance& inst, const SensorSet& sensors);
std::size_t coverage_count(const Instance& inst, std::span<const SensorId> sensors);

// covered_by[t] = sensors within r_s of target t, ascending.
std::vector<std::vector<SensorId>> coverers(const Instance& inst);

// n sensors and m targets uniform in [0, extent]^2, deterministic in seed.
Instance generate(std::size_t n, std::size_t m, double rc, double rs,
                  double extent, std::uint64_t seed);

// JSON: {"rc": number, "rs": number, "sensors": [[x,y],...], "targets": [...]}
std::string to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

}  // namespace conncover

#endif  // CONNCOVER_INSTANCE_HPP_
