//
// polygraph - graph products of left LCM monoids and their inverse hulls
// Copyright (C) 2026 The polygraph authors
//
// This program is free software: you can redistribute it and/or modify
// it under the terms of the GNU General Public License as published by
// the Free Software Foundation, either version 3 of the License, or
// (at your option) any later version.
//
// This program is distributed in the hope that it will be useful,
// but WITHOUT ANY WARRANTY; without even the implied warranty of
// MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
// GNU General Public License for more details.
//
// You should have received a copy of the GNU General Public License
// along with this program.  If not, see <http://www.gnu.org/licenses/>.
//

#include "polygraph/error.hpp"

namespace polygraph {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::syntax:
        return "Syntax";
      case ErrorCode::duplicate_name:
        return "DuplicateName";
      case ErrorCode::self_loop:
        return "SelfLoop";
      case ErrorCode::undeclared_vertex:
        return "UndeclaredVertex";
      case ErrorCode::empty_letter_list:
        return "EmptyLetterList";
      case ErrorCode::unknown_letter:
        return "UnknownLetter";
      case ErrorCode::bad_exponent:
        return "BadExponent";
      case ErrorCode::invalid_payload:
        return "InvalidPayload";
      case ErrorCode::mismatched_graph:
        return "MismatchedGraph";
      case ErrorCode::zero_input:
        return "ZeroInput";
      case ErrorCode::not_reduced:
        return "NotReduced";
      case ErrorCode::bound_exceeded:
        return "BoundExceeded";
      case ErrorCode::free_component_unsupported:
        return "FreeComponentUnsupported";
    }
    return "Unknown";
  }

  Error::Error(ErrorCode code, std::string const& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        _code(code) {}

}  // namespace polygraph
