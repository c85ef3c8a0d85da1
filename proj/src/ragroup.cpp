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

#include "polygraph/ragroup.hpp"

#include <algorithm>  // for reverse

#include "polygraph/error.hpp"     // for Error
#include "polygraph/gproduct.hpp"  // for Element
#include "polygraph/text.hpp"      // for parse_tokens

namespace polygraph {

  namespace {
    void require_monogenic(GraphProduct const& product) {
      if (!product.all_monogenic()) {
        throw Error(ErrorCode::free_component_unsupported,
                    "graph group arithmetic needs every component to be monogenic");
      }
    }

    // Index of the first j > i cancelling word[i], or npos.
    std::size_t partner(GraphProduct const&              product,
                        std::vector<SignedLetter> const& word,
                        std::size_t                      i) {
      for (std::size_t j = i + 1; j < word.size(); ++j) {
        if (word[j].vertex == word[i].vertex) {
          return word[j].inverse != word[i].inverse ? j : std::string::npos;
        }
        if (!product.adjacent(word[j].vertex, word[i].vertex)) {
          return std::string::npos;
        }
      }
      return std::string::npos;
    }

    std::vector<SignedLetter> positive_letters(Element const& a, bool inverse) {
      std::vector<SignedLetter> out;
      for (auto const& x : a.components()) {
        out.insert(out.end(), x.exponent(), SignedLetter{x.vertex(), inverse});
      }
      return out;
    }
  }  // namespace

  GroupWord group_reduce(GraphProduct const& product, std::span<SignedLetter const> input) {
    require_monogenic(product);
    std::vector<SignedLetter> word(input.begin(), input.end());
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < word.size(); ++i) {
        auto j = partner(product, word, i);
        if (j != std::string::npos) {
          word.erase(word.begin() + static_cast<std::ptrdiff_t>(j));
          word.erase(word.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
      }
    }

    auto const                n = word.size();
    std::vector<bool>         done(n, false);
    std::vector<SignedLetter> out;
    out.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) {
          continue;
        }
        bool movable = true;
        for (std::size_t j = 0; j < i && movable; ++j) {
          movable = done[j] || product.adjacent(word[j].vertex, word[i].vertex);
        }
        if (movable && (best == n || signed_less(word[i], word[best]))) {
          best = i;
        }
      }
      done[best] = true;
      out.push_back(word[best]);
    }
    return GroupWord(std::move(out));
  }

  GroupWord group_inverse(GraphProduct const& product, GroupWord const& g) {
    std::vector<SignedLetter> word(g.letters().rbegin(), g.letters().rend());
    for (auto& x : word) {
      x.inverse = !x.inverse;
    }
    // the reversal is reduced but not necessarily in canonical order
    return group_reduce(product, word);
  }

  GroupWord group_multiply(GraphProduct const& product, GroupWord const& g, GroupWord const& h) {
    std::vector<SignedLetter> word = g.letters();
    word.insert(word.end(), h.letters().begin(), h.letters().end());
    return group_reduce(product, word);
  }

  GroupOrZero eta(IHElement const& s) {
    require_monogenic(s.product());
    if (s.is_zero()) {
      return std::nullopt;
    }
    auto a = positive_letters(s.left(), true);
    std::reverse(a.begin(), a.end());
    auto b = positive_letters(s.right(), false);
    a.insert(a.end(), b.begin(), b.end());
    return group_reduce(s.product(), a);
  }

  std::vector<SignedLetter> parse_signed_word(GraphProduct const& product, std::string_view text) {
    require_monogenic(product);
    std::vector<SignedLetter> out;
    for (auto const& t : parse_tokens(product, text, true)) {
      auto const v = product.letter(t.letter).vertex;
      auto const k = t.exponent < 0 ? -t.exponent : t.exponent;
      out.insert(out.end(), static_cast<std::size_t>(k), SignedLetter{v, t.exponent < 0});
    }
    return out;
  }

  std::string to_string(GraphProduct const& product, GroupWord const& g) {
    std::vector<Token> tokens;
    for (auto const& x : g.letters()) {
      std::int64_t const e = x.inverse ? -1 : 1;
      auto const         l = product.letter_of(x.vertex, 0);
      if (!tokens.empty() && tokens.back().letter == l
          && (tokens.back().exponent < 0) == (e < 0)) {
        tokens.back().exponent += e;
      } else {
        tokens.push_back(Token{l, e});
      }
    }
    return format_tokens(product, tokens);
  }

  std::string to_string(GraphProduct const& product, GroupOrZero const& g) {
    return g ? to_string(product, *g) : std::string("0");
  }

}  // namespace polygraph
