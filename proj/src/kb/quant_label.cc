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

#include "genkb/kb/quant_label.h"

#include <algorithm>
#include <cctype>
#include <string>

namespace genkb {

std::optional<QuantLabel> ParseQuantLabel(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "all") return QuantLabel::kAll;
  if (lower == "some") return QuantLabel::kSome;
  if (lower == "none") return QuantLabel::kNone;
  return std::nullopt;
}

std::string_view ToString(QuantLabel label) {
  switch (label) {
    case QuantLabel::kAll:
      return "all";
    case QuantLabel::kSome:
      return "some";
    case QuantLabel::kNone:
      return "none";
  }
  return "none";
}

int ClassIndex(QuantLabel label) {
  switch (label) {
    case QuantLabel::kAll:
      return 1;
    case QuantLabel::kSome:
      return 2;
    case QuantLabel::kNone:
      return 3;
  }
  return 3;
}

int BinaryTarget(QuantLabel label) { return IsPositive(label) ? 1 : -1; }

}  // namespace genkb
