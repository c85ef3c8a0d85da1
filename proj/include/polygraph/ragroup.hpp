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

#ifndef POLYGRAPH_RAGROUP_HPP_
#define POLYGRAPH_RAGROUP_HPP_

#include <optional>     // for optional
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "polygraph/graph.hpp"  // for GraphProduct, vertex_type
#include "polygraph/ihull.hpp"  // for IHElement

namespace polygraph {

  // x_v or x_v⁻¹ in the graph group G(Γ).
  struct SignedLetter {
    vertex_type vertex;
    bool        inverse;

    friend bool operator==(SignedLetter const&, SignedLetter const&) = default;
  };

  // Order of letters in canonical group words: by vertex, x before x⁻¹.
  [[nodiscard]] inline bool signed_less(SignedLetter const& x, SignedLetter const& y) noexcept {
    return x.vertex != y.vertex ? x.vertex < y.vertex : (!x.inverse && y.inverse);
  }

  // A reduced word in lexicographically least form among its shuffles;
  // only meaningful for all-monogenic graph products.
  class GroupWord {
   public:
    GroupWord() = default;

    [[nodiscard]] std::vector<SignedLetter> const& letters() const noexcept {
      return _letters;
    }

    [[nodiscard]] bool is_identity() const noexcept {
      return _letters.empty();
    }

    friend bool operator==(GroupWord const&, GroupWord const&) = default;

   private:
    friend GroupWord group_reduce(GraphProduct const&, std::span<SignedLetter const>);

    explicit GroupWord(std::vector<SignedLetter> letters) : _letters(std::move(letters)) {}

    std::vector<SignedLetter> _letters;
  };

  // An element of G(Γ)⁰; nullopt is the adjoined zero.
  using GroupOrZero = std::optional<GroupWord>;

  // Deletes x^e ... x^-e pairs separated only by letters commuting with x
  // (leftmost pair first) until none remain, then orders the result
  // greedily by signed_less.  Throws Error(free_component_unsupported).
  [[nodiscard]] GroupWord group_reduce(GraphProduct const& product, std::span<SignedLetter const> word);

  [[nodiscard]] GroupWord group_multiply(GraphProduct const& product, GroupWord const& g, GroupWord const& h);

  [[nodiscard]] GroupWord group_inverse(GraphProduct const& product, GroupWord const& g);

  // 0 ↦ 0 and (a, b) ↦ a⁻¹ b.  Throws Error(free_component_unsupported).
  [[nodiscard]] GroupOrZero eta(IHElement const& s);

  // Signed-word text "x1 x2^-1" ("1" is the empty word); exponents ±k
  // expand to k letters.  Throws Error(free_component_unsupported) and the
  // word errors.
  [[nodiscard]] std::vector<SignedLetter> parse_signed_word(GraphProduct const& product,
                                                            std::string_view    text);

  [[nodiscard]] std::string to_string(GraphProduct const& product, GroupWord const& g);
  [[nodiscard]] std::string to_string(GraphProduct const& product, GroupOrZero const& g);

}  // namespace polygraph

#endif  // POLYGRAPH_RAGROUP_HPP_
