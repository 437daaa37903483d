// Copyright 2026 The tamerel Authors
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

#pragma once

#include <exception>
#include <vector>

namespace tamerel::detail {

/// out[i] = f(keys[i]) for every i, spread over OpenMP threads. The first
/// exception thrown by any iteration is rethrown on the calling thread.
template <class Key, class Out, class F>
std::vector<Out> parallel_map(const std::vector<Key>& keys, const Out& init, F&& f) {
  std::vector<Out> out(keys.size(), init);
  std::exception_ptr error;
  const long n = static_cast<long>(keys.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(keys[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(tamerel_parallel_map_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace tamerel::detail
