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
#include <span>
#include <string_view>

// Dense vector kernels behind embedding similarity and the mock embedder.
//
// Each kernel has a scalar reference implementation and, where the host
// supports it, a SIMD variant (AVX2+FMA on x86-64, NEON on aarch64). The
// variant is picked once at first use from the CPU's reported features. The
// SIMD variants reassociate the sums, so results agree with the scalar
// reference to rounding, not bit for bit.
namespace stampsy::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa);

struct KernelTable {
  Isa isa;
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*squared_norm)(const double* x, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // y *= alpha
  void (*scale)(double alpha, double* y, std::size_t n);
};

const KernelTable& scalar_table();
// nullptr when the variant was not compiled in or the CPU lacks it.
const KernelTable* avx2_table();
const KernelTable* neon_table();
// Best table for this host; STAMPSY_FORCE_SCALAR=1 in the environment pins
// the scalar path.
const KernelTable& active_table();

// Span front-ends over active_table(). Mismatched lengths throw.
double dot(std::span<const double> a, std::span<const double> b);
double squared_norm(std::span<const double> x);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void scale(double alpha, std::span<double> y);

// Scales x to unit L2 norm; returns the original norm (0 leaves x untouched).
double normalize(std::span<double> x);
// Cosine similarity; 0 when either vector is zero.
double cosine(std::span<const double> a, std::span<const double> b);

}  // namespace stampsy::kernels
