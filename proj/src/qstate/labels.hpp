// Copyright 2026 The jwm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "jwm/qstate.hpp"

namespace jwm::detail {

void check_labels(const Labels &labels);

/// perm[i] = position in `from` of to[i].
std::vector<std::size_t> permutation_to(const Labels &from, const Labels &to);

/// Maps an index over `to` ordering to the matching index over `from` ordering.
std::size_t permute_index(std::size_t index, std::size_t n, const std::vector<std::size_t> &perm);

}  // namespace jwm::detail
