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

#ifndef GENKB_KB_QUANT_LABEL_H_
#define GENKB_KB_QUANT_LABEL_H_

#include <cstdint>
#include <optional>
#include <string_view>

namespace genkb {

// Categorical truth value of a generics triple: "q s r (some) t".
// The enumerator order gives All > Some > None.
enum class QuantLabel : std::uint8_t { kNone = 0, kSome = 1, kAll = 2 };

// Case-insensitive parse of "all" / "some" / "none".
std::optional<QuantLabel> ParseQuantLabel(std::string_view text);

std::string_view ToString(QuantLabel label);

// Class index used by the three-way loss: All -> 1, Some -> 2, None -> 3.
int ClassIndex(QuantLabel label);

// Binary target: All and Some -> +1, None -> -1.
int BinaryTarget(QuantLabel label);

inline bool IsPositive(QuantLabel label) { return label != QuantLabel::kNone; }

}  // namespace genkb

#endif  // GENKB_KB_QUANT_LABEL_H_
