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

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edopt/energy.hpp"

namespace edopt {

enum class Strategy { batch, marginalized, decoupled };

enum class LinearSolverKind { automatic, direct_dense, pcg };

struct SolveOptions {
  int max_outer_iterations = 25;
  double gradient_tolerance = 1e-8;  // on |J^T r|_inf
  double step_tolerance = 1e-12;     // on |delta|
  double initial_damping = 1e-4;
  double damping_up = 10.0;
  double damping_down = 0.1;
  double min_damping = 1e-12;
  int max_retries = 12;
  LinearSolverKind linear_solver = LinearSolverKind::automatic;
  int dense_threshold = 200;  // automatic: direct below, PCG at or above
  double pcg_tolerance = 1e-8;
  int pcg_max_iterations = 1000;
  int level_cycles = 1;  // decoupled: Level I/II passes per solve

  void validate() const;  // throws std::invalid_argument
};

// One registration problem: model vertices bound to a graph, target points,
// and the (vertex, target) pairs feeding the data term. `design` is derived
// from (graph, binding, vertices) by make_problem.
struct Problem {
  const EDGraph* graph = nullptr;
  const BindingTable* binding = nullptr;
  std::span<const Vec3> vertices;
  std::span<const Vec3> targets;
  std::vector<PointPair> pairs;
  EnergyWeights weights;
  double reg_alpha = 1.0;
  bool optimize_global_pose = true;

  SparseDesign design;
  std::vector<GraphEdge> edges;
};

Problem make_problem(const EDGraph& graph, const BindingTable& binding,
                     std::span<const Vec3> vertices,
                     std::span<const Vec3> targets,
                     std::vector<PointPair> pairs,
                     const EnergyWeights& weights = {}, double reg_alpha = 1.0,
                     bool optimize_global_pose = true);

// Row and column selection for one damped Gauss-Newton solve.
struct Objective {
  std::vector<int> rot_nodes;
  std::vector<GraphEdge> reg_edges;
  bool include_data = true;
  ColumnLayout layout;
  // >= 0 switches the linear solve to the Schur path with x_c = the first
  // marg_c_dim columns (global pose + PR block) and x_f = the rest.
  int marg_c_dim = -1;
};

Objective batch_objective(const Problem& problem);
Objective marginalized_objective(const Problem& problem,
                                 const Partition& partition);
Objective level1_objective(const Problem& problem,
                           const Partition& partition);
Objective level2_objective(const Problem& problem,
                           const Partition& partition);

StackedSystem evaluate_objective(const Problem& problem,
                                 const DeformState& state,
                                 const Objective& objective);

// Partitioned damped normal matrix, PR-first order (damping included).
struct BlockHessian {
  Eigen::MatrixXd lambda_cc;
  Eigen::MatrixXd lambda_cf;
  Eigen::SparseMatrix<double> lambda_ff;
  Eigen::VectorXd y_c;
  Eigen::VectorXd y_f;
};

// H = J^T J + mu I and y = -J^T r, split at c_dim.
BlockHessian build_block_hessian(const StackedSystem& system, int c_dim,
                                 double mu);

struct SolveReport {
  double energy_rot = 0.0;
  double energy_reg = 0.0;
  double energy_data = 0.0;
  double energy_total = 0.0;  // weighted
  int outer_iterations = 0;
  int accepted_steps = 0;
  bool converged = false;
  bool linear_failure = false;
  double assembly_ms = 0.0;
  double linear_ms = 0.0;
  double level1_ms = 0.0;
  double level2_ms = 0.0;
  double total_ms = 0.0;
  int level1_dim = 0;  // unknowns of the primary solved system
  std::vector<double> energy_history;  // objective value at each acceptance
};

struct PcgResult {
  Eigen::VectorXd x;
  int iterations = 0;
  double relative_residual = 0.0;
  bool converged = false;
};

// Preconditioned conjugate gradients on an SPD operator with a Jacobi
// (diagonal) preconditioner. Stops when |Ax - b| <= tol * |b|.
PcgResult pcg(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& apply_a,
              const Eigen::VectorXd& b, const Eigen::VectorXd& diag,
              double tol, int max_iter);

// Damped Gauss-Newton loop over one objective. Accepts steps only when the
// objective decreases; damping goes up on rejection and down on acceptance.
std::pair<DeformState, SolveReport> lm_driver(const Problem& problem,
                                              const Objective& objective,
                                              DeformState state,
                                              const SolveOptions& opts);

std::pair<DeformState, SolveReport> solve_batch(const Problem& problem,
                                                const DeformState& state0,
                                                const SolveOptions& opts);

// Exact Schur-complement marginalization of the PI block; every step equals
// the batch step up to linear-solver roundoff.
std::pair<DeformState, SolveReport> solve_marginalized(
    const Problem& problem, const Partition& partition,
    const DeformState& state0, const SolveOptions& opts);

// Lossy two-level solve: Level I fits global pose + PR nodes against the
// data term plus the curtailed rot/reg rows, Level II relaxes PI nodes
// against rot/reg with Level I frozen.
std::pair<DeformState, SolveReport> solve_decoupled(const Problem& problem,
                                                    const Partition& partition,
                                                    const DeformState& state0,
                                                    const SolveOptions& opts);

// Single damped steps in canonical full-layout coordinates, used by the
// equivalence checks.
Eigen::VectorXd batch_step(const Problem& problem, const DeformState& state,
                           double mu);
Eigen::VectorXd marginalized_step(const Problem& problem,
                                  const Partition& partition,
                                  const DeformState& state, double mu);

const char* to_string(Strategy strategy);
Strategy strategy_from_string(const std::string& name);

}  // namespace edopt
