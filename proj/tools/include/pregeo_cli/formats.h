// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Plain-text matroid and group files.
//
//   pregeometry v1          group v1
//   ground 7                order 4
//   kind explicit           table
//   flats                   0 1 2 3
//   -                       1 2 3 0
//   0 1 2                   ...
//   end                     end
//
// Blank lines and lines starting with '#' are ignored. In a flat list "-"
// stands for the empty flat.

#ifndef PREGEO_CLI_FORMATS_H_
#define PREGEO_CLI_FORMATS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pregeo/closure.h"
#include "pregeo/element_set.h"
#include "pregeo/finite_group.h"

namespace pregeo::cli {

enum class MatroidKind { kExplicit, kLinear, kAffine, kTrivial, kSubgroup };

struct MatroidFile {
  std::size_t ground = 0;
  MatroidKind kind = MatroidKind::kExplicit;
  std::uint32_t q = 0;  // linear, affine
  std::uint32_t d = 0;
  ElementSet loops;                  // trivial
  std::string group_path;            // subgroup, as written
  std::vector<ElementSet> flats;     // explicit
};

// ParseError (with line number) on malformed input or out-of-range indices.
MatroidFile ParseMatroidFile(std::string_view text);
// Canonical form: flats deduplicated and sorted.
std::string SerializeMatroidFile(const MatroidFile& file);

FiniteGroup ParseGroupFile(std::string_view text);
std::string SerializeGroupFile(const FiniteGroup& group);

// Builds the closure table. Subgroup paths resolve against `base_dir`.
ClosureTable BuildTable(const MatroidFile& file,
                        const std::filesystem::path& base_dir = {});

// File helpers; InputError when unreadable.
std::string ReadFile(const std::filesystem::path& path);
ClosureTable LoadMatroid(const std::filesystem::path& path);
FiniteGroup LoadGroup(const std::filesystem::path& path);

}  // namespace pregeo::cli

#endif  // PREGEO_CLI_FORMATS_H_
