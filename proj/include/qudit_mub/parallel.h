// Copyright 2026 The qudit-mub Authors
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

#ifndef QUDIT_MUB_PARALLEL_H
#define QUDIT_MUB_PARALLEL_H

#include <cstddef>
#include <functional>

namespace qmub {

/// Worker count: hardware concurrency, capped by the QUDIT_MUB_THREADS environment
/// variable when it holds a positive integer.
size_t worker_count();

/// Calls body(i) for every i in [0, n). Iterations must only write state owned by
/// their own index; callers combine results afterwards in index order.
void parallel_for(size_t n, const std::function<void(size_t)> &body);

}  // namespace qmub

#endif
