// Copyright 2026 The Stampsy Authors.
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

#include "stampsy/corpus/split.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include "stampsy/common/error.hpp"
#include "stampsy/common/hash.hpp"

namespace stampsy::corpus {

CorpusSplit split_indices(std::size_t n, const SplitFractions& f, std::uint64_t seed) {
  if (f.train < 0 || f.dev < 0 || f.test < 0 || std::abs(f.train + f.dev + f.test - 1.0) > 1e-9) {
    throw Error(ErrorCode::invalid_argument, "split fractions must be non-negative and sum to 1");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::uint64_t state = seed;
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(splitmix64(state) % i);
    std::swap(order[i - 1], order[j]);
  }
  const auto n_test = static_cast<std::size_t>(std::llround(f.test * static_cast<double>(n)));
  const auto n_dev = std::min(n - n_test,
                              static_cast<std::size_t>(std::llround(f.dev * static_cast<double>(n))));
  CorpusSplit out;
  out.test.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_test));
  out.dev.assign(order.begin() + static_cast<std::ptrdiff_t>(n_test),
                 order.begin() + static_cast<std::ptrdiff_t>(n_test + n_dev));
  out.train.assign(order.begin() + static_cast<std::ptrdiff_t>(n_test + n_dev), order.end());
  return out;
}

}  // namespace stampsy::corpus
