// Copyright 2026 The lrc-shorten Authors
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

#include "lrc/error.hpp"

namespace lrc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotAPrimePower: return "NotAPrimePower";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::InvalidElement: return "InvalidElement";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DuplicateAbscissa: return "DuplicateAbscissa";
    case Errc::NoSubgroup: return "NoSubgroup";
    case Errc::TooManyBlocks: return "TooManyBlocks";
    case Errc::NotConstantOnBlocks: return "NotConstantOnBlocks";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::SEqualsOne: return "SEqualsOne";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::RateBoundViolated: return "RateBoundViolated";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InconsistentWord: return "InconsistentWord";
    case Errc::Unrecoverable: return "Unrecoverable";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InvalidSpecFile: return "InvalidSpecFile";
    case Errc::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace lrc
