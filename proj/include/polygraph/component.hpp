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

#ifndef POLYGRAPH_COMPONENT_HPP_
#define POLYGRAPH_COMPONENT_HPP_

#include <compare>   // for strong_ordering
#include <cstddef>   // for size_t
#include <cstdint>   // for uint32_t, uint64_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "polygraph/graph.hpp"  // for vertex_type, ComponentKind

namespace polygraph {

  // An element of a single vertex monoid M_v, possibly its identity.
  // Monogenic payloads are exponents; free payloads are letter sequences
  // (indices into the vertex alphabet).  Reduced expressions only ever hold
  // nonidentity values.
  class ComponentElement {
   public:
    ComponentElement() = default;

    static ComponentElement identity(vertex_type v, ComponentKind kind) {
      ComponentElement x;
      x._vertex = v;
      x._kind   = kind;
      return x;
    }

    static ComponentElement power(vertex_type v, std::uint64_t exponent) {
      ComponentElement x;
      x._vertex   = v;
      x._kind     = ComponentKind::monogenic;
      x._exponent = exponent;
      return x;
    }

    static ComponentElement word(vertex_type v, std::vector<std::uint32_t> letters) {
      ComponentElement x;
      x._vertex  = v;
      x._kind    = ComponentKind::free;
      x._letters = std::move(letters);
      return x;
    }

    [[nodiscard]] vertex_type vertex() const noexcept {
      return _vertex;
    }

    [[nodiscard]] ComponentKind kind() const noexcept {
      return _kind;
    }

    [[nodiscard]] bool is_identity() const noexcept {
      return _kind == ComponentKind::monogenic ? _exponent == 0 : _letters.empty();
    }

    [[nodiscard]] std::uint64_t exponent() const noexcept {
      return _exponent;
    }

    [[nodiscard]] std::vector<std::uint32_t> const& letters() const noexcept {
      return _letters;
    }

    // Number of generator occurrences.
    [[nodiscard]] std::size_t letter_length() const noexcept {
      return _kind == ComponentKind::monogenic ? _exponent : _letters.size();
    }

    friend bool operator==(ComponentElement const&, ComponentElement const&) = default;
    friend auto operator<=>(ComponentElement const&, ComponentElement const&) = default;

   private:
    vertex_type                _vertex   = 0;
    ComponentKind              _kind     = ComponentKind::monogenic;
    std::uint64_t              _exponent = 0;
    std::vector<std::uint32_t> _letters;
  };

  // Arithmetic inside one vertex monoid.  Both arguments must belong to the
  // same vertex; this is a precondition, not checked.
  namespace component {

    struct Multiple {
      ComponentElement left_of_x;  // r with m = r x
      ComponentElement left_of_y;  // t with m = t y
      ComponentElement multiple;   // m
    };

    [[nodiscard]] ComponentElement multiply(ComponentElement const& x,
                                            ComponentElement const& y);

    // q with x = q y.
    [[nodiscard]] std::optional<ComponentElement> right_divide(ComponentElement const& x,
                                                               ComponentElement const& y);

    // q with x = y q.
    [[nodiscard]] std::optional<ComponentElement> left_divide(ComponentElement const& x,
                                                              ComponentElement const& y);

    // Generator of M_v x ∩ M_v y, or nullopt if the intersection is empty.
    // Monogenic: x^max(n, p).  Free: the longer word, when one is a suffix
    // of the other.
    [[nodiscard]] std::optional<Multiple> lclm(ComponentElement const& x,
                                               ComponentElement const& y);

    // Highest common left factor: x^min(n, p) or the longest common prefix.
    [[nodiscard]] ComponentElement hclf(ComponentElement const& x, ComponentElement const& y);

  }  // namespace component

}  // namespace polygraph

#endif  // POLYGRAPH_COMPONENT_HPP_
