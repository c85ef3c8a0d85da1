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

#ifndef POLYGRAPH_IHULL_HPP_
#define POLYGRAPH_IHULL_HPP_

#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "polygraph/gproduct.hpp"  // for Element
#include "polygraph/graph.hpp"     // for GraphProduct
#include "polygraph/text.hpp"      // for Token

namespace polygraph {

  // An element of IH⁰(C): the empty map, or the pair (a, b) standing for
  // ρ_a⁻¹ ρ_b : xa ↦ xb.  All supported components have trivial units, so
  // pairs are equal iff their entries are.
  class IHElement {
   public:
    static IHElement zero(GraphProduct product) {
      return IHElement(std::move(product));
    }

    static IHElement identity(GraphProduct const& product) {
      return IHElement(Element(product), Element(product));
    }

    // Throws Error(mismatched_graph).
    IHElement(Element a, Element b);

    [[nodiscard]] bool is_zero() const noexcept {
      return !_pair.has_value();
    }

    [[nodiscard]] GraphProduct const& product() const noexcept {
      return _product;
    }

    // The a of (a, b).  Precondition: nonzero.
    [[nodiscard]] Element const& left() const {
      return _pair->first;
    }

    // The b of (a, b).  Precondition: nonzero.
    [[nodiscard]] Element const& right() const {
      return _pair->second;
    }

    friend bool operator==(IHElement const& s, IHElement const& t) noexcept {
      return s._product == t._product && s._pair == t._pair;
    }

   private:
    explicit IHElement(GraphProduct product) : _product(std::move(product)) {}

    GraphProduct                          _product;
    std::optional<std::pair<Element, Element>> _pair;
  };

  // (a,b)(c,d) = (sa, td) when Cb ∩ Cc = Csb = Ctc, else 0.
  // Throws Error(mismatched_graph).
  [[nodiscard]] IHElement ih_multiply(IHElement const& s, IHElement const& t);

  inline IHElement operator*(IHElement const& s, IHElement const& t) {
    return ih_multiply(s, t);
  }

  [[nodiscard]] IHElement ih_inverse(IHElement const& s);

  [[nodiscard]] bool is_idempotent(IHElement const& s) noexcept;

  // (a,b) <= (c,d) iff a = xc and b = xd for some x; the only candidate is
  // x = a / c.
  [[nodiscard]] bool natural_le(IHElement const& s, IHElement const& t);

  // The unique maximal element above s: (c, d) where a = xc, b = xd and
  // x = hclf(a, b).  Throws Error(zero_input).
  [[nodiscard]] IHElement max_above(IHElement const& s);

  [[nodiscard]] bool green_L(IHElement const& s, IHElement const& t);
  [[nodiscard]] bool green_R(IHElement const& s, IHElement const& t);
  [[nodiscard]] bool green_H(IHElement const& s, IHElement const& t);

  ////////////////////////////////////////////////////////////////////////
  // Words over X ∪ X⁻¹ and the presentation
  ////////////////////////////////////////////////////////////////////////

  // Tokens with signed exponents; g^-k is k copies of g⁻¹.
  using PGWord = std::vector<Token>;

  // Throws Error(unknown_letter | bad_exponent | syntax).
  [[nodiscard]] PGWord parse_pgword(GraphProduct const& product, std::string_view text);

  // g ↦ (1, g), g⁻¹ ↦ (g, 1), folded with ih_multiply.
  [[nodiscard]] IHElement eval_word(GraphProduct const& product, std::span<Token const> word);
  [[nodiscard]] IHElement eval_word(GraphProduct const& product, std::string_view text);

  struct Relation {
    PGWord left;
    PGWord right;  // ignored when right_is_zero
    bool   right_is_zero = false;

    friend bool operator==(Relation const&, Relation const&) = default;
  };

  // R (per component), then N (distinct non-adjacent vertices), then Com
  // (adjacent vertices), each in vertex order and then letter order.
  [[nodiscard]] std::vector<Relation> generate_presentation(GraphProduct const& product);

  struct RelationViolation {
    Relation  relation;
    IHElement left;
    IHElement right;
  };

  struct RelationReport {
    std::size_t                    checked = 0;
    std::vector<RelationViolation> violations;

    [[nodiscard]] bool ok() const noexcept {
      return violations.empty();
    }
  };

  // Evaluates both sides of every generated relation.
  [[nodiscard]] RelationReport check_relations(GraphProduct const& product);

  ////////////////////////////////////////////////////////////////////////
  // Text forms
  ////////////////////////////////////////////////////////////////////////

  // "0" or "[a | b]", with "1" for the identity of C.
  [[nodiscard]] std::string to_string(IHElement const& s);

  // Accepts "0" and "[a | b]" (spaces optional).  Throws Error(syntax) and
  // the word errors.
  [[nodiscard]] IHElement parse_ih_element(GraphProduct const& product, std::string_view text);

  [[nodiscard]] std::string to_string(GraphProduct const& product, Relation const& r);

}  // namespace polygraph

#endif  // POLYGRAPH_IHULL_HPP_
