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
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace edopt {

// Line-oriented `key = value` configuration. `#` starts a comment, repeated
// keys accumulate in file order (used for multi-valued keys such as `bump`).
class ConfigMap {
 public:
  static ConfigMap load(const std::string& path);
  static ConfigMap parse(const std::string& text,
                         const std::string& origin = "<string>");

  bool has(const std::string& key) const;
  // All values recorded for `key`, in file order. Empty if absent.
  std::vector<std::string> values(const std::string& key) const;

  std::string get_string(const std::string& key,
                         const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  // Last value for `key`, split on whitespace and parsed as doubles.
  std::vector<double> get_numbers(const std::string& key) const;

  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  std::map<std::string, std::vector<std::string>> by_key_;
};

// Parses a whitespace-separated list of doubles; throws on trailing junk.
std::vector<double> split_numbers(const std::string& text);

}  // namespace edopt
