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

#include "polygraph/text.hpp"

#include <charconv>  // for from_chars
#include <sstream>   // for istringstream

#include "polygraph/error.hpp"  // for Error

namespace polygraph {

  std::vector<Token> parse_tokens(GraphProduct const& product,
                                  std::string_view    text,
                                  bool                allow_inverse) {
    std::vector<Token> result;
    std::istringstream in{std::string(text)};
    for (std::string tok; in >> tok;) {
      if (tok == "1") {
        continue;
      }
      auto const  caret = tok.find('^');
      std::string name  = tok.substr(0, caret);
      std::int64_t exponent = 1;
      if (caret != std::string::npos) {
        std::string_view digits(tok);
        digits.remove_prefix(caret + 1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
        if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
          throw Error(ErrorCode::syntax, "malformed exponent in \"" + tok + "\"");
        }
        if (exponent == 0 || (exponent < 0 && !allow_inverse)) {
          throw Error(ErrorCode::bad_exponent, "\"" + tok + "\"");
        }
      }
      result.push_back(Token{product.letter_index(name), exponent});
    }
    return result;
  }

  std::string format_token(GraphProduct const& product, Token const& t) {
    std::string out = product.letter(t.letter).name;
    if (t.exponent != 1) {
      out += '^';
      out += std::to_string(t.exponent);
    }
    return out;
  }

  std::string format_tokens(GraphProduct const& product, std::vector<Token> const& ts) {
    if (ts.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& t : ts) {
      if (!out.empty()) {
        out += ' ';
      }
      out += format_token(product, t);
    }
    return out;
  }

}  // namespace polygraph
