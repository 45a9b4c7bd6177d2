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
#include <iosfwd>

#include "edopt/energy.hpp"

namespace edopt {

// Central finite-difference comparison of an analytic Jacobian. Entries with
// magnitude below `absolute_floor` are compared absolutely, everything else
// relatively.
struct FdCheck {
  double max_relative_error = 0.0;
  double max_absolute_error = 0.0;
  bool pass(double tol) const { return max_relative_error <= tol; }
};

using BlockEvaluator =
    std::function<ResidualBlock(const DeformState&)>;

FdCheck fd_check_block(const BlockEvaluator& eval, const DeformState& state,
                       const ColumnLayout& layout, double h = 1e-6,
                       double absolute_floor = 1e-8);

enum class CorruptTerm { none, rot, reg, data };

struct GradCheckReport {
  double rot = 0.0;   // max relative error per term over all instances
  double reg = 0.0;
  double data = 0.0;
  int instances = 0;
  bool passed = false;
  CorruptTerm failed_term = CorruptTerm::none;
};

// Runs the finite-difference suite over `instances` randomized problems.
// `corrupt` perturbs one Jacobian entry of the named term (negative
// control). Prints one line per term to `out` when non-null.
GradCheckReport run_gradient_checks(std::uint64_t seed, int instances,
                                    double tolerance = 1e-5,
                                    CorruptTerm corrupt = CorruptTerm::none,
                                    std::ostream* out = nullptr);

const char* to_string(CorruptTerm term);

}  // namespace edopt
