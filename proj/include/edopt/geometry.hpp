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

#include <array>
#include <vector>

namespace edopt {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Triangle mesh with optional connectivity. Geometry is kept in double
// precision end to end; the solver equivalence checks depend on it.
struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;

  double bbox_diagonal() const;
};

// Unstructured scan. Normals, when present, are unit length and parallel to
// `points` (one per point).
struct PointSet {
  std::vector<Vec3> points;
  std::vector<Vec3> normals;
};

double bbox_diagonal(const std::vector<Vec3>& points);

}  // namespace edopt
