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

#ifndef TROPLAB_PARALLEL_HPP_
#define TROPLAB_PARALLEL_HPP_

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>

namespace troplab {

// Kernels that fan out over independent work items accept an Execution
// flag. Serial is the reference implementation; Parallel uses OpenMP and
// must produce identical results.
enum class Execution { Serial, Parallel };

// Runs body(i) for i in [0, count). Exceptions thrown inside the parallel
// region are captured and the first one (lowest index) is rethrown.
void for_each_index(std::size_t count, Execution exec,
                    const std::function<void(std::size_t)>& body);

}  // namespace troplab

#endif  // TROPLAB_PARALLEL_HPP_
