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
#include <optional>
#include <string>
#include <vector>

#include "edopt/scenario.hpp"
#include "edopt/solver.hpp"

namespace edopt {

// Handle constraints for single-shot deformation: text lines
// `vertex_id tx ty tz`.
struct Handle {
  int vertex = 0;
  Vec3 target = Vec3::Zero();
};

std::vector<Handle> load_handles(const std::string& path, int vertex_count);

struct DeformOptions {
  std::string mesh_path;
  std::string handles_path;
  std::string out_dir = ".";
  Strategy solver = Strategy::batch;
  double node_radius = 0.0;  // <= 0: bbox diagonal / 12
  EnergyWeights weights;
  SolveOptions solve;
  bool compare_with_batch = false;
};

struct DeformResult {
  Mesh deformed;
  SolveReport report;
  double max_displacement = 0.0;
  int max_displacement_vertex = -1;
};

DeformResult run_deform(const DeformOptions& opts);

struct SimOptions {
  std::string config_path;
  std::string out_dir = ".";
  Strategy solver = Strategy::decoupled;
  std::optional<std::uint64_t> seed_override;
  SolveOptions solve;
  EnergyWeights weights;
  bool write_outputs = true;
};

struct SimResult {
  std::vector<FrameMetrics> rows;
  RunSummary summary;
  double bbox_diagonal = 0.0;
  std::string run_id;
};

// Per-frame loop: reveal geometry, extend the graph, classify nodes, match
// correspondences, solve, deform, record metrics.
SimResult run_slam_sim(const SimOptions& opts);

struct BenchOptions {
  std::string config_path;
  std::string out_dir = ".";
  int repeat = 5;
  bool write_outputs = true;
};

struct BenchRow {
  int total_nodes = 0;
  int pr_nodes = 0;
  Strategy solver = Strategy::batch;
  double assembly_ms = 0.0;
  double linear_ms = 0.0;
  double level1_ms = 0.0;
  double level2_ms = 0.0;
  double total_ms = 0.0;
};

// Growth-schedule timing benchmark: medians over `repeat` runs of each
// solver at each size point.
std::vector<BenchRow> run_bench(const BenchOptions& opts);

void write_metrics_csv(const std::string& path,
                       const std::string& run_id,
                       std::span<const FrameMetrics> rows);
void write_bench_csv(const std::string& path, std::span<const BenchRow> rows);

int run_check_grad(std::uint64_t seed, CorruptTerm corrupt = CorruptTerm::none);

}  // namespace edopt
