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

#include <random>

#include "edopt/ed_graph.hpp"
#include "edopt/energy.hpp"

namespace edopt {

// Randomized problem instances for gradient checks, equivalence tests, and
// property tests. Deterministic for a fixed rng state.
struct RandomInstanceOptions {
  int min_nodes = 8;
  int max_nodes = 24;
  int min_vertices = 20;
  int max_vertices = 80;
  double state_scale = 0.3;   // deviation of A from I and |t|
  double pose_scale = 0.4;    // global rotation angle / translation
  double visible_fraction = 0.5;
};

struct RandomInstance {
  EDGraph graph;
  BindingTable binding;
  std::vector<Vec3> vertices;
  std::vector<Vec3> targets;
  std::vector<PointPair> pairs;
  std::vector<int> visible;  // ascending vertex ids; pairs draw from these
  DeformState state;
};

RandomInstance make_random_instance(std::mt19937_64& rng,
                                    const RandomInstanceOptions& opts = {});

DeformState random_state(std::mt19937_64& rng, int node_count,
                         double state_scale, double pose_scale);

Mat3 random_rotation(std::mt19937_64& rng);

// Encodes a rigid motion v -> R v + t per node: A_j = R,
// t_j = R g_j + t - g_j, identity global pose.
DeformState encode_rigid_motion(const EDGraph& graph, const Mat3& rotation,
                                const Vec3& translation);

}  // namespace edopt
