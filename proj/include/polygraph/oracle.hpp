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

#ifndef POLYGRAPH_ORACLE_HPP_
#define POLYGRAPH_ORACLE_HPP_

// Brute-force reference computations.  Nothing here calls the fast paths in
// gproduct/ihull/ragroup: elements are handled as plain letter words and
// equality is decided either by exhaustive closure under swaps of commuting
// letters or by the projection criterion (two words are equal in a trace
// monoid iff their projections onto every pair of non-commuting letters
// agree).  The graph products supported here are exactly trace monoids on
// the union of the vertex alphabets, letters commuting iff their vertices
// are adjacent.
//
// Everything is exponential; each search takes a limit and throws
// Error(bound_exceeded) instead of truncating.

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <span>      // for span
#include <utility>   // for pair
#include <vector>    // for vector

#include "polygraph/gproduct.hpp"  // for Expression, Element
#include "polygraph/graph.hpp"     // for GraphProduct, letter_type

namespace polygraph::oracle {

  using Letters = std::vector<letter_type>;

  inline constexpr std::size_t default_limit = 1'000'000;

  ////////////////////////////////////////////////////////////////////////
  // Component level
  ////////////////////////////////////////////////////////////////////////

  // Every expression reachable by shuffles, sorted.  Throws
  // Error(not_reduced) if the input is not reduced.
  [[nodiscard]] std::vector<Expression> shuffle_class(GraphProduct const&               product,
                                                      std::span<ComponentElement const> reduced,
                                                      std::size_t limit = default_limit);

  // The reduced expressions reachable from an arbitrary expression by
  // shuffles and amalgamations, sorted.  Two expressions denote the same
  // element iff these sets coincide.
  [[nodiscard]] std::vector<Expression> reduced_forms(GraphProduct const&               product,
                                                      std::span<ComponentElement const> expr,
                                                      std::size_t limit = default_limit);

  ////////////////////////////////////////////////////////////////////////
  // Letter level
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] bool commute(GraphProduct const& product, letter_type x, letter_type y);

  [[nodiscard]] Letters letters_of(GraphProduct const& product, std::span<ComponentElement const> expr);

  [[nodiscard]] Letters letters_of(Element const& a);

  // All words equal to w, sorted.
  [[nodiscard]] std::vector<Letters> linearizations(GraphProduct const& product,
                                                    Letters const&      w,
                                                    std::size_t         limit = default_limit);

  // Least linearization: a canonical key computed by exhaustion.
  [[nodiscard]] Letters min_linearization(GraphProduct const& product,
                                          Letters const&      w,
                                          std::size_t         limit = default_limit);

  // Projections onto every pair {x, y} of non-commuting letters (x <= y);
  // a canonical key for the element in linear time.
  [[nodiscard]] std::vector<Letters> projection_key(GraphProduct const& product, Letters const& w);

  [[nodiscard]] bool equal(GraphProduct const& product, Letters const& u, Letters const& v);

  // q with m = q c: peel c's letters from the right of m, each one taken as
  // the last occurrence of that letter provided everything after it
  // commutes with it.
  [[nodiscard]] std::optional<Letters> right_quotient(GraphProduct const& product,
                                                      Letters             m,
                                                      Letters const&      c);

  // q with m = c q.
  [[nodiscard]] std::optional<Letters> left_quotient(GraphProduct const& product,
                                                     Letters             m,
                                                     Letters const&      c);

  // Every left factor of w, one minimal linearization per element, sorted:
  // the prefixes of every linearization.
  [[nodiscard]] std::vector<Letters> all_left_divisors(GraphProduct const& product,
                                                       Letters const&      w,
                                                       std::size_t         limit = default_limit);

  // Common left factors of u and v, as minimal linearizations.
  [[nodiscard]] std::vector<Letters> common_left_divisors(GraphProduct const& product,
                                                          Letters const&      u,
                                                          Letters const&      v,
                                                          std::size_t         limit = default_limit);

  enum class Verdict { none, principal, non_principal };

  struct LclmSearch {
    Verdict              verdict = Verdict::none;
    Letters              minimum;  // when principal
    std::vector<Letters> multiples;
  };

  // Searches common left multiples m = t c of b and c with |m| <= bound,
  // letting t range over every arrangement of a sub-multiset of b's letters.
  // That range is exhaustive for the least one: if w is any common left
  // multiple, b and c are right factors of w, i.e. final segments of its
  // dependency order; their union is again a final segment, hence a common
  // left multiple dividing w, with each letter occurring max(|b|_x, |c|_x)
  // times.
  [[nodiscard]] LclmSearch lclm_search(GraphProduct const& product,
                                       Letters const&      b,
                                       Letters const&      c,
                                       std::size_t         bound);

  // Convenience wrapper on elements: the minimal multiple, or nullopt when
  // none exists within the bound.  Throws Error(bound_exceeded) when the
  // common multiples found have no minimum.
  [[nodiscard]] std::optional<Letters> lclm_oracle(Element const& b, Element const& c, std::size_t bound);

  // The common left divisor that every other one left-divides, or nullopt
  // if there is none.
  [[nodiscard]] std::optional<Letters> hclf_oracle(GraphProduct const& product,
                                                   Letters const&      u,
                                                   Letters const&      v,
                                                   std::size_t         limit = default_limit);

  using Pair = std::pair<Letters, Letters>;

  // (p, q) <= (c, d) iff p = x c and q = x d for some x.
  [[nodiscard]] bool pair_le(GraphProduct const& product, Pair const& s, Pair const& t);

  // Every (a/x, b/x) over common left factors x of a and b: the elements
  // above (a, b) in the natural order.
  [[nodiscard]] std::vector<Pair> elements_above(GraphProduct const& product,
                                                 Pair const&         s,
                                                 std::size_t         limit = default_limit);

  // The element of elements_above(s) that lies above all the others, or
  // nullopt if there is none.
  [[nodiscard]] std::optional<Pair> maximum_above(GraphProduct const& product,
                                                  Pair const&         s,
                                                  std::size_t         limit = default_limit);

  // x ρ_a⁻¹ ρ_b = (x / a) b, undefined off Ca.
  [[nodiscard]] std::optional<Letters> act(GraphProduct const& product,
                                           Pair const&         s,
                                           Letters const&      x);

}  // namespace polygraph::oracle

#endif  // POLYGRAPH_ORACLE_HPP_
