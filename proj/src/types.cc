// Copyright 2026 The dynmatch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dynmatch/types.h"

namespace dynmatch {

EdgeKey EdgeKey::Of(VertexId a, VertexId b) {
  if (a == b) {
    throw GraphError("self-loop on vertex " + std::to_string(a));
  }
  return a < b ? EdgeKey(a, b) : EdgeKey(b, a);
}

std::string ToString(EdgeKey key) {
  return "(" + std::to_string(key.lo()) + "," + std::to_string(key.hi()) + ")";
}

}  // namespace dynmatch
