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

#include "polygraph/component.hpp"

#include <algorithm>  // for equal, max, min, mismatch

namespace polygraph::component {

  namespace {
    bool is_prefix(std::vector<std::uint32_t> const& p, std::vector<std::uint32_t> const& w) {
      return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
    }

    bool is_suffix(std::vector<std::uint32_t> const& s, std::vector<std::uint32_t> const& w) {
      return s.size() <= w.size() && std::equal(s.begin(), s.end(), w.end() - s.size());
    }
  }  // namespace

  ComponentElement multiply(ComponentElement const& x, ComponentElement const& y) {
    if (x.kind() == ComponentKind::monogenic) {
      return ComponentElement::power(x.vertex(), x.exponent() + y.exponent());
    }
    auto letters = x.letters();
    letters.insert(letters.end(), y.letters().begin(), y.letters().end());
    return ComponentElement::word(x.vertex(), std::move(letters));
  }

  std::optional<ComponentElement> right_divide(ComponentElement const& x,
                                               ComponentElement const& y) {
    if (x.kind() == ComponentKind::monogenic) {
      if (y.exponent() > x.exponent()) {
        return std::nullopt;
      }
      return ComponentElement::power(x.vertex(), x.exponent() - y.exponent());
    }
    if (!is_suffix(y.letters(), x.letters())) {
      return std::nullopt;
    }
    return ComponentElement::word(
        x.vertex(), {x.letters().begin(), x.letters().end() - y.letters().size()});
  }

  std::optional<ComponentElement> left_divide(ComponentElement const& x,
                                              ComponentElement const& y) {
    if (x.kind() == ComponentKind::monogenic) {
      // free monogenic monoids are commutative
      return right_divide(x, y);
    }
    if (!is_prefix(y.letters(), x.letters())) {
      return std::nullopt;
    }
    return ComponentElement::word(
        x.vertex(), {x.letters().begin() + y.letters().size(), x.letters().end()});
  }

  std::optional<Multiple> lclm(ComponentElement const& x, ComponentElement const& y) {
    if (x.kind() == ComponentKind::monogenic) {
      auto const m = std::max(x.exponent(), y.exponent());
      return Multiple{ComponentElement::power(x.vertex(), m - x.exponent()),
                      ComponentElement::power(x.vertex(), m - y.exponent()),
                      ComponentElement::power(x.vertex(), m)};
    }
    auto const& longer = x.letters().size() >= y.letters().size() ? x : y;
    auto const& shorter = &longer == &x ? y : x;
    if (!is_suffix(shorter.letters(), longer.letters())) {
      return std::nullopt;
    }
    return Multiple{*right_divide(longer, x), *right_divide(longer, y), longer};
  }

  ComponentElement hclf(ComponentElement const& x, ComponentElement const& y) {
    if (x.kind() == ComponentKind::monogenic) {
      return ComponentElement::power(x.vertex(), std::min(x.exponent(), y.exponent()));
    }
    auto const& a = x.letters();
    auto const& b = y.letters();
    auto const  n = std::min(a.size(), b.size());
    auto        it = std::mismatch(a.begin(), a.begin() + n, b.begin()).first;
    return ComponentElement::word(x.vertex(), {a.begin(), it});
  }

}  // namespace polygraph::component
