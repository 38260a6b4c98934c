// Copyright 2026 The dworkgeom Authors.
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

#ifndef DWORKGEOM_NAMED_GROUPS_H_
#define DWORKGEOM_NAMED_GROUPS_H_

#include <optional>
#include <string>
#include <vector>

#include "dworkgeom/group.h"

namespace dworkgeom {

struct NamedGroup {
  std::string name;
  std::string description;
  std::vector<GroupElement> generators;
};

// Generators of H_n: h_(1,0,..,-1,..,0) with the -1 in slots 2..n.
std::vector<GroupElement> h_generators(int n);

// Aliases such as A5, A5xH4, G1, Z10. Most are defined for n = 4 only.
std::optional<NamedGroup> named_group(int n, const std::string& name);
std::vector<std::string> named_group_names();

// Comma separated generators. Each generator is a product of factors, where a
// factor is cycle notation "(12)(34)", a diagonal "h(1,4,0,0,0)", or a full
// literal "(1 2)(3 4);0,0,0,0,0". Factors may be joined by '*' or juxtaposed.
std::vector<GroupElement> parse_group_spec(int n, const std::string& spec);

// Named alias or generator list.
NamedGroup resolve_group(int n, const std::string& spec);

}  // namespace dworkgeom

#endif  // DWORKGEOM_NAMED_GROUPS_H_
