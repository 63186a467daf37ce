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

#include <span>
#include <string>

namespace stampsy::eval {

// Cohen's kappa for two raters over the same items. When chance agreement is
// 1 (both raters used one and the same label throughout) the result is 1.
// Throws length_mismatch on unequal lengths and invalid_argument when empty.
double cohen_kappa(std::span<const int> a, std::span<const int> b);
double cohen_kappa(std::span<const std::string> a, std::span<const std::string> b);

}  // namespace stampsy::eval
