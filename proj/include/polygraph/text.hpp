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

#ifndef POLYGRAPH_TEXT_HPP_
#define POLYGRAPH_TEXT_HPP_

#include <cstdint>      // for int64_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "polygraph/graph.hpp"  // for GraphProduct, letter_type

namespace polygraph {

  // One whitespace-separated token "x", "x^k" or (signed) "x^-k".
  struct Token {
    letter_type  letter;
    std::int64_t exponent;

    friend bool operator==(Token const&, Token const&) = default;
  };

  // Tokens of a word such as "x1 x2^3 p q".  A lone "1" denotes the empty
  // word.  Negative exponents are rejected unless allow_inverse is set.
  // Throws Error(unknown_letter | bad_exponent | syntax).
  [[nodiscard]] std::vector<Token> parse_tokens(GraphProduct const& product,
                                                std::string_view    text,
                                                bool                allow_inverse);

  // "x", "x^k", "x^-1"; used by every printer so output stays uniform.
  [[nodiscard]] std::string format_token(GraphProduct const& product, Token const& t);

  [[nodiscard]] std::string format_tokens(GraphProduct const& product, std::vector<Token> const& ts);

}  // namespace polygraph

#endif  // POLYGRAPH_TEXT_HPP_
