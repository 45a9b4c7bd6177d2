/******************************************************************************
 * Copyright 2026 The edopt Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "edopt/config.hpp"
#include "edopt/energy.hpp"
#include "edopt/geometry.hpp"

namespace edopt {

// Smooth moving displacement bump: amplitude * exp(-|p - c(f)|^2 / 2 sigma^2)
// with c(f) = center + f * velocity (both in the grid plane).
struct GaussianBump {
  Vec3 amplitude = Vec3::Zero();
  Eigen::Vector2d center = Eigen::Vector2d::Zero();
  Eigen::Vector2d velocity = Eigen::Vector2d::Zero();
  double sigma = 1.0;
};

struct ScenarioConfig {
  int grid_nx = 40;
  int grid_ny = 30;
  double grid_spacing = 0.05;
  int frames = 10;
  double camera_height = 1.2;
  Eigen::Vector2d camera_start = Eigen::Vector2d::Zero();
  Eigen::Vector2d camera_step = Eigen::Vector2d::Zero();
  double fov_x = 0.45;  // frustum half-angles, radians
  double fov_y = 0.35;
  double noise_sigma = -1.0;    // < 0: 0.1 * grid_spacing
  double node_radius = -1.0;    // < 0: 3 * grid_spacing
  double max_pair_dist = -1.0;  // < 0: 2 * grid_spacing
  std::uint64_t seed = 1;
  std::vector<GaussianBump> bumps;

  double noise() const;
  double radius() const;
  double pair_dist() const;
  void validate() const;  // throws std::invalid_argument
};

ScenarioConfig scenario_config_from(const ConfigMap& map);
ScenarioConfig load_scenario_config(const std::string& path);

// World-to-camera transform: p_cam = rotation * (p - center). A point is in
// the frustum iff z_cam > 0 and |x_cam| <= z_cam tan(fov_x), same for y.
struct CameraPose {
  Mat3 rotation = Mat3::Identity();
  Vec3 center = Vec3::Zero();
};

bool in_frustum(const CameraPose& pose, double fov_x, double fov_y,
                const Vec3& point);

struct Frame {
  int index = 0;
  CameraPose pose;
  PointSet scan;                // noisy true-warped visible vertices
  std::vector<int> visible;     // ascending vertex ids
  std::vector<int> newly_revealed;
};

struct Scenario {
  ScenarioConfig config;
  std::vector<Vec3> rest_vertices;  // grid, x-major
  std::vector<std::array<int, 3>> grid_faces;
  std::vector<Frame> frames;

  // Ground-truth warp of a rest position at a frame.
  Vec3 warped(const Vec3& rest, int frame) const;
};

Scenario generate_scenario(const ScenarioConfig& config);

// One-sided nearest-neighbor pairing from model points into the scan; a
// model point is paired iff its nearest scan point is within max_dist, ties
// broken by lower scan index. `pair.vertex` indexes into model_points.
std::vector<PointPair> make_correspondences(std::span<const Vec3> model_points,
                                            const PointSet& scan,
                                            double max_dist);

struct FrameMetrics {
  int frame = 0;
  int nodes_total = 0;
  int nodes_pr = 0;
  int nodes_pi = 0;
  int level1_dim = 0;
  int pairs = 0;
  double rmse = 0.0;      // visible vertices vs. ground-truth warp
  double residual = 0.0;  // mean pair distance after the solve
  double assembly_ms = 0.0;
  double level1_ms = 0.0;
  double level2_ms = 0.0;
  double linear_ms = 0.0;
  double total_ms = 0.0;
};

struct RunSummary {
  double mean_rmse = 0.0;
  double max_rmse = 0.0;
  double mean_residual = 0.0;
};

double registration_rmse(std::span<const Vec3> estimated,
                         std::span<const Vec3> truth);
RunSummary summarize(std::span<const FrameMetrics> rows);

}  // namespace edopt
