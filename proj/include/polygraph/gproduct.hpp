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

#ifndef POLYGRAPH_GPRODUCT_HPP_
#define POLYGRAPH_GPRODUCT_HPP_

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "polygraph/component.hpp"  // for ComponentElement
#include "polygraph/graph.hpp"      // for GraphProduct
#include "polygraph/text.hpp"       // for Token

namespace polygraph {

  // A (not necessarily reduced) sequence of component elements.
  using Expression = std::vector<ComponentElement>;

  // An element of the graph product, held as its canonical reduced
  // expression: the least-vertex-first lexicographic representative of its
  // shuffle class.  Two elements are equal iff their expressions are.
  class Element {
   public:
    // The identity of `product`.
    explicit Element(GraphProduct product) : _product(std::move(product)) {}

    // Canonicalises an arbitrary expression over `product`.
    static Element from_expression(GraphProduct product, std::span<ComponentElement const> expr);

    [[nodiscard]] GraphProduct const& product() const noexcept {
      return _product;
    }

    [[nodiscard]] Expression const& components() const noexcept {
      return _expr;
    }

    // Number of components of any reduced expression.
    [[nodiscard]] std::size_t length() const noexcept {
      return _expr.size();
    }

    // Number of generator occurrences; not an invariant the theory uses.
    [[nodiscard]] std::size_t letter_length() const noexcept;

    [[nodiscard]] bool is_identity() const noexcept {
      return _expr.empty();
    }

    friend bool operator==(Element const& x, Element const& y) noexcept {
      return x._product == y._product && x._expr == y._expr;
    }

    // Orders elements of one product by canonical expression.
    friend std::strong_ordering operator<=>(Element const& x, Element const& y) {
      return x._expr <=> y._expr;
    }

   private:
    Element(GraphProduct product, Expression canonical)
        : _product(std::move(product)), _expr(std::move(canonical)) {}

    GraphProduct _product;
    Expression   _expr;
  };

  // Final or initial v-component and the matching complement.
  struct ComponentSplit {
    ComponentElement component;  // identity when there is no such component
    Element          complement;
  };

  // m = s b = t c generates Cb ∩ Cc.
  struct LeftMultiple {
    Element s;
    Element t;
    Element m;
  };

  ////////////////////////////////////////////////////////////////////////
  // Reduced expressions
  ////////////////////////////////////////////////////////////////////////

  // Same-vertex components are separated by a component whose vertex is
  // not adjacent to theirs; identities are not allowed.
  [[nodiscard]] bool is_reduced(GraphProduct const& product, std::span<ComponentElement const> expr);

  // A reduced expression for the same element, obtained by appending one
  // component at a time and amalgamating it with the final component of its
  // vertex when there is one.  Identity components are dropped.
  [[nodiscard]] Expression reduce(GraphProduct const& product, std::span<ComponentElement const> expr);

  // Greedy least-vertex-first ordering of a reduced expression: repeatedly
  // emit, among the components that shuffle to the front, the one with the
  // least vertex.
  [[nodiscard]] Expression canonical_order(GraphProduct const&               product,
                                           std::span<ComponentElement const> reduced);

  [[nodiscard]] Element normal_form(GraphProduct const& product, std::span<ComponentElement const> expr);

  ////////////////////////////////////////////////////////////////////////
  // Construction and printing
  ////////////////////////////////////////////////////////////////////////

  // The image of a word under X* -> C.  Throws Error(unknown_letter |
  // bad_exponent).
  [[nodiscard]] Element make_element(GraphProduct const& product, std::span<Token const> tokens);
  [[nodiscard]] Element make_element(GraphProduct const& product, std::string_view word);

  // Throws Error(invalid_payload) for a payload not belonging to v.
  [[nodiscard]] Element component_embed(GraphProduct const& product, ComponentElement const& x);

  [[nodiscard]] std::vector<Token> to_tokens(GraphProduct const& product, ComponentElement const& x);
  [[nodiscard]] std::vector<Token> to_tokens(Element const& a);
  [[nodiscard]] std::string        to_string(GraphProduct const& product, ComponentElement const& x);
  [[nodiscard]] std::string        to_string(Element const& a);

  // Letter sequence of the canonical expression, monogenic powers expanded.
  [[nodiscard]] std::vector<letter_type> to_letters(Element const& a);

  ////////////////////////////////////////////////////////////////////////
  // Arithmetic
  ////////////////////////////////////////////////////////////////////////

  // Throws Error(mismatched_graph).
  [[nodiscard]] Element multiply(Element const& a, Element const& b);

  inline Element operator*(Element const& a, Element const& b) {
    return multiply(a, b);
  }

  // Scan from the right of a reduced expression for the last v-component,
  // skipping components adjacent to v.  Works on any member of the shuffle
  // class; the result does not depend on which.
  [[nodiscard]] ComponentSplit final_component(GraphProduct const&               product,
                                               std::span<ComponentElement const> reduced,
                                               vertex_type                       v);
  [[nodiscard]] ComponentSplit final_component(Element const& a, vertex_type v);

  [[nodiscard]] ComponentSplit initial_component(GraphProduct const&               product,
                                                 std::span<ComponentElement const> reduced,
                                                 vertex_type                       v);
  [[nodiscard]] ComponentSplit initial_component(Element const& a, vertex_type v);

  // b with a = b c, or nullopt.  Throws Error(mismatched_graph).
  [[nodiscard]] std::optional<Element> right_divide(Element const& a, Element const& c);

  // b with a = c b, or nullopt.  Throws Error(mismatched_graph).
  [[nodiscard]] std::optional<Element> left_divide(Element const& a, Element const& c);

  // Least common left multiple, or nullopt when Cb ∩ Cc is empty.  Rewrites
  // the mixed word ρ_b ρ_c⁻¹ into the form ρ_s⁻¹ ρ_t one positive/negative
  // component pair at a time.  Throws Error(mismatched_graph).
  [[nodiscard]] std::optional<LeftMultiple> lclm(Element const& b, Element const& c);

  // Highest common left factor.  Throws Error(mismatched_graph).
  [[nodiscard]] Element hclf(Element const& a, Element const& b);

}  // namespace polygraph

#endif  // POLYGRAPH_GPRODUCT_HPP_
