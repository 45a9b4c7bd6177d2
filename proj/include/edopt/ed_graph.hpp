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

#include <span>
#include <vector>

#include "edopt/geometry.hpp"

namespace edopt {

// Deformation graph: node positions plus directed nearest-neighbor edge
// lists. Nodes are pairwise at distance >= sampling_radius.
struct EDGraph {
  std::vector<Vec3> nodes;
  std::vector<std::vector<int>> edges;  // N(j), ascending (distance, index)
  double sampling_radius = 0.0;
  int edge_k = 4;

  int node_count() const { return static_cast<int>(nodes.size()); }
};

// One vertex bound to its nearest nodes. `count` is 4 whenever the graph has
// at least 5 nodes; with 2..4 nodes the vertex binds to all of them.
struct VertexBinding {
  std::array<int, 4> nodes{{-1, -1, -1, -1}};
  std::array<double, 4> weights{{0.0, 0.0, 0.0, 0.0}};
  int count = 0;
};

struct BindingTable {
  std::vector<VertexBinding> rows;

  int vertex_count() const { return static_cast<int>(rows.size()); }
};

// PR/PI split of node indices. A node is PR iff it appears in the binding
// row of at least one visible vertex. `permutation[j]` is the position of
// node j in the reordered state vector, PR block first.
struct Partition {
  std::vector<int> pr_nodes;  // sorted
  std::vector<int> pi_nodes;  // sorted
  std::vector<int> permutation;
};

// Greedy uniform downsampling in input order: a point becomes a node iff it
// is >= radius away from every previously accepted node.
EDGraph sample_nodes(std::span<const Vec3> points, double radius);

// Fills N(j) with the k nearest other nodes (fewer if the graph is smaller),
// ties broken by lower node index. Edges are directed.
void build_node_edges(EDGraph& graph, int k = 4);

// Binds each vertex to its 4 nearest nodes with weights
// w_j = 1 - |v - g_j| / d_max normalized to sum 1, where d_max is the
// distance to the 5th nearest node. With 2..4 total nodes the vertex binds
// to all of them and d_max = 1.1 x the largest bound distance.
BindingTable bind_vertices(std::span<const Vec3> vertices,
                           const EDGraph& graph);

Partition classify_nodes(const BindingTable& binding,
                         std::span<const int> visible_vertices,
                         int node_count);

// Grows the graph with nodes greedily sampled from new_points (same radius
// rule against the existing node set), rebuilds edge lists, and appends
// binding rows for the new points. Existing rows are left untouched.
void extend_graph(EDGraph& graph, BindingTable& binding,
                  std::span<const Vec3> new_points);

}  // namespace edopt
