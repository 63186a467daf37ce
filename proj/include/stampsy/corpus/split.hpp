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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace stampsy::corpus {

struct SplitFractions {
  double train = 0.8;
  double dev = 0.1;
  double test = 0.1;
};

struct CorpusSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> dev;
  std::vector<std::size_t> test;
};

// Seeded shuffle of 0..n-1, cut into three parts. dev and test sizes are
// rounded from their fractions and train takes the rest, so every index lands
// in exactly one part. The permutation comes from splitmix64, not from the
// standard library, so a seed gives the same split on every platform.
CorpusSplit split_indices(std::size_t n, const SplitFractions& fractions, std::uint64_t seed);

}  // namespace stampsy::corpus
