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


#include "stampsy/eval/kappa.hpp"

#include <map>
#include <vector>

#include "stampsy/common/error.hpp"

namespace stampsy::eval {

namespace {

template <typename T>
double kappa_impl(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::length_mismatch, "raters labelled different numbers of items");
  }
  if (a.empty()) throw Error(ErrorCode::invalid_argument, "kappa needs at least one item");
  std::map<T, std::pair<std::size_t, std::size_t>> marginals;
  std::size_t agree = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ++marginals[a[i]].first;
    ++marginals[b[i]].second;
    if (a[i] == b[i]) ++agree;
  }
  const double n = static_cast<double>(a.size());
  const double p_o = static_cast<double>(agree) / n;
  double p_e = 0.0;
  for (const auto& [label, counts] : marginals) {
    p_e += (static_cast<double>(counts.first) / n) * (static_cast<double>(counts.second) / n);
  }
  if (p_e >= 1.0) return 1.0;
  return (p_o - p_e) / (1.0 - p_e);
}

}  // namespace

double cohen_kappa(std::span<const int> a, std::span<const int> b) { return kappa_impl(a, b); }

double cohen_kappa(std::span<const std::string> a, std::span<const std::string> b) {
  return kappa_impl(a, b);
}

}  // namespace stampsy::eval
