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

#ifndef POLYGRAPH_ERROR_HPP_
#define POLYGRAPH_ERROR_HPP_

#include <stdexcept>    // for runtime_error
#include <string>       // for string
#include <string_view>  // for string_view

namespace polygraph {

  // Every failure the library can report.  NotDivisible and NoCommonMultiple
  // are not here: they are ordinary outcomes and come back as empty optionals.
  enum class ErrorCode {
    syntax,
    duplicate_name,
    self_loop,
    undeclared_vertex,
    empty_letter_list,
    unknown_letter,
    bad_exponent,
    invalid_payload,
    mismatched_graph,
    zero_input,
    not_reduced,
    bound_exceeded,
    free_component_unsupported
  };

  std::string_view to_string(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& detail);

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace polygraph

#endif  // POLYGRAPH_ERROR_HPP_
