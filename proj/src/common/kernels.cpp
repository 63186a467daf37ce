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

#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>

#include "kernels_internal.hpp"
#include "stampsy/common/error.hpp"

namespace stampsy::kernels {

#if !defined(__aarch64__)
namespace detail {
const KernelTable* neon_table_unchecked() { return nullptr; }
}  // namespace detail
#endif

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "scalar";
}

const KernelTable* avx2_table() {
#if defined(__x86_64__) || defined(_M_X64)
  static const KernelTable* table = [] () -> const KernelTable* {
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
      return detail::avx2_table_unchecked();
    }
    return nullptr;
  }();
  return table;
#else
  return nullptr;
#endif
}

const KernelTable* neon_table() { return detail::neon_table_unchecked(); }

const KernelTable& active_table() {
  static const KernelTable* table = [] {
    const char* force = std::getenv("STAMPSY_FORCE_SCALAR");
    if (force != nullptr && std::string_view(force) == "1") return &scalar_table();
    if (const KernelTable* t = avx2_table()) return t;
    if (const KernelTable* t = neon_table()) return t;
    return &scalar_table();
  }();
  return *table;
}

namespace {

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::length_mismatch, "vector lengths differ: " + std::to_string(a) +
                                                " vs " + std::to_string(b));
  }
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_length(a.size(), b.size());
  return active_table().dot(a.data(), b.data(), a.size());
}

double squared_norm(std::span<const double> x) {
  return active_table().squared_norm(x.data(), x.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  require_same_length(x.size(), y.size());
  active_table().axpy(alpha, x.data(), y.data(), x.size());
}

void scale(double alpha, std::span<double> y) {
  active_table().scale(alpha, y.data(), y.size());
}

double normalize(std::span<double> x) {
  const double norm = std::sqrt(squared_norm(x));
  if (norm > 0.0) scale(1.0 / norm, x);
  return norm;
}

double cosine(std::span<const double> a, std::span<const double> b) {
  require_same_length(a.size(), b.size());
  const double na = squared_norm(a);
  const double nb = squared_norm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot(a, b) / std::sqrt(na * nb);
}

}  // namespace stampsy::kernels
