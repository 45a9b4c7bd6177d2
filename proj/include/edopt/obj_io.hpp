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

#include <string>

#include "edopt/geometry.hpp"

namespace edopt {

// ASCII OBJ reader/writer. Supported records: `v x y z` and `f i j k ...`
// (1-based indices, negative indices count from the end, polygons are
// fan-triangulated). Comments and unknown record types are skipped.
// Malformed records and out-of-range face indices throw std::runtime_error
// with the offending line number.
Mesh load_obj(const std::string& path);

// Vertices are written with enough digits to round-trip exactly.
void save_obj(const Mesh& mesh, const std::string& path);

}  // namespace edopt
