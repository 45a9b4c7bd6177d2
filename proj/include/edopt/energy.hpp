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

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <span>
#include <vector>

#include "edopt/ed_graph.hpp"
#include "edopt/geometry.hpp"

namespace edopt {

Mat3 hat(const Vec3& w);
Mat3 exp_so3(const Vec3& w);
// Nearest rotation matrix (quaternion projection); input must be close to
// orthonormal already.
Mat3 reorthonormalize(const Mat3& r);

// Optimization unknowns: one affine transform per node plus a global rigid
// pose. The global rotation is updated through a 3-parameter increment
// composed on the left and re-orthonormalized, so it stays a rotation.
struct DeformState {
  std::vector<Mat3> affine;
  std::vector<Vec3> translation;
  Mat3 global_rotation = Mat3::Identity();
  Vec3 global_translation = Vec3::Zero();

  static DeformState identity(int node_count);
  int node_count() const { return static_cast<int>(affine.size()); }
};

struct EnergyWeights {
  double rot = 1.0;
  double reg = 10.0;
  double data = 100.0;
};

// Maps state blocks to columns of a residual Jacobian. The vector layout is
// 6 global parameters (rotation increment, translation) followed by 12 per
// node (9 affine column-major, 3 translation). A base of -1 marks a frozen
// block: its residual contribution is kept but its columns are dropped.
struct ColumnLayout {
  int global_base = -1;
  std::vector<int> node_base;
  int cols = 0;

  // Canonical order: global first, node j at 6 + 12*j.
  static ColumnLayout full(int node_count, bool with_global = true);
  // All nodes free, node j placed at position perm[j] (PR-first reordering).
  static ColumnLayout permuted(std::span<const int> perm, bool with_global);
  // Only `free_nodes` are free, packed in the given order.
  static ColumnLayout subset(int node_count, std::span<const int> free_nodes,
                             bool with_global);
};

// Applies a step in the layout's coordinates. Frozen blocks are untouched.
void apply_increment(DeformState& state, const ColumnLayout& layout,
                     const Eigen::VectorXd& delta);

// Expands a delta expressed in `layout` to the canonical full layout
// (6 + 12*node_count), zero on frozen blocks.
Eigen::VectorXd canonical_delta(const ColumnLayout& layout,
                                const Eigen::VectorXd& delta, int node_count);

enum class EnergyTerm { rot, reg, data };

struct ResidualBlock {
  EnergyTerm term = EnergyTerm::data;
  Eigen::VectorXd residuals;
  Eigen::SparseMatrix<double> jacobian;  // residuals.size() x layout.cols

  double squared_norm() const { return residuals.squaredNorm(); }
};

struct GraphEdge {
  int j = 0;
  int k = 0;
};

struct PointPair {
  int vertex = 0;
  int target = 0;
};

// Column-sparse design of the data term: M holds w_j * (v_i - g_j) blocks
// (3 rows per node), C holds the weights. Columns follow the binding table,
// so each M column has 12 nonzeros and each C column 4 (fewer only in the
// small-graph fallback), and C columns sum to 1.
struct SparseDesign {
  Eigen::SparseMatrix<double> M;  // 3*node_count x vertex_count
  Eigen::SparseMatrix<double> C;  // node_count x vertex_count

  int node_count() const { return static_cast<int>(C.rows()); }
  int vertex_count() const { return static_cast<int>(C.cols()); }
  // Stacked design Pi = [M^T C^T], vertex_count x 4*node_count.
  Eigen::SparseMatrix<double> stacked() const;
};

SparseDesign build_design(const EDGraph& graph, const BindingTable& binding,
                          std::span<const Vec3> vertices);

// Direct per-vertex deformation:
//   v~ = R_c * sum_j w_j [A_j (v - g_j) + g_j + t_j] + T_c.
Vec3 deform_vertex(const DeformState& state, const EDGraph& graph,
                   const VertexBinding& binding, const Vec3& vertex);
std::vector<Vec3> apply_deformation(const DeformState& state,
                                    const EDGraph& graph,
                                    const BindingTable& binding,
                                    std::span<const Vec3> vertices);

// Matrix-form deformation of all design columns through the stacked design:
// columns of the result are R_c * (Pi Phi)^T + T_c. Agrees with
// apply_deformation to floating-point roundoff.
Eigen::Matrix3Xd eval_design(const SparseDesign& design, const EDGraph& graph,
                             const DeformState& state);

// Rotation softness: 6 residuals per listed node,
//   (c1.c2, c1.c3, c2.c3, c1.c1-1, c2.c2-1, c3.c3-1)
// over the columns of A_j. The Jacobian is block-diagonal per node.
ResidualBlock e_rot(const DeformState& state, const ColumnLayout& layout,
                    std::span<const int> nodes);
ResidualBlock e_rot(const DeformState& state);

// As-rigid-as-possible consistency: 3 residuals per directed edge (j,k),
//   sqrt(alpha) * (A_j (g_k - g_j) + g_j + t_j - g_k - t_k).
// Touches node j's 12 parameters and node k's translation.
ResidualBlock e_reg(const DeformState& state, const EDGraph& graph,
                    double alpha, const ColumnLayout& layout,
                    std::span<const GraphEdge> edges);
ResidualBlock e_reg(const DeformState& state, const EDGraph& graph,
                    double alpha = 1.0);

// Point-pair data term: 3 residuals per pair, v~_i - target. Jacobian
// columns are nonzero only for the bound nodes of the paired vertex and the
// global pose.
ResidualBlock e_data(const DeformState& state, const EDGraph& graph,
                     const SparseDesign& design,
                     std::span<const Vec3> targets,
                     std::span<const PointPair> pairs,
                     const ColumnLayout& layout);

std::vector<GraphEdge> all_edges(const EDGraph& graph);

// Weighted stack of residual blocks: rows scaled by sqrt(w) so that
// |residuals|^2 equals the weighted energy.
struct StackedSystem {
  Eigen::VectorXd residuals;
  Eigen::SparseMatrix<double> jacobian;
  double total = 0.0;  // w_rot*E_rot + w_reg*E_reg + w_data*E_data
  double rot = 0.0;    // raw term energies of the included rows
  double reg = 0.0;
  double data = 0.0;
};

StackedSystem total_energy(std::span<const ResidualBlock> blocks,
                           const EnergyWeights& weights);

}  // namespace edopt
