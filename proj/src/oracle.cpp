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

#include "polygraph/oracle.hpp"

#include <algorithm>  // for sort, unique, all_of, find
#include <deque>      // for deque
#include <map>        // for map
#include <set>        // for set

#include "polygraph/error.hpp"  // for Error

namespace polygraph::oracle {

  namespace {
    void check_limit(std::size_t size, std::size_t limit, char const* what) {
      if (size > limit) {
        throw Error(ErrorCode::bound_exceeded,
                    std::string(what) + " exceeds " + std::to_string(limit) + " entries");
      }
    }

    // Reducedness, written out again here so the oracle does not lean on
    // gproduct.
    bool reduced_by_definition(GraphProduct const& product, Expression const& e) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i].is_identity()) {
          return false;
        }
        for (std::size_t j = i + 1; j < e.size(); ++j) {
          if (e[j].vertex() != e[i].vertex()) {
            continue;
          }
          bool separated = false;
          for (std::size_t k = i + 1; k < j; ++k) {
            if (!product.adjacent(e[i].vertex(), e[k].vertex())) {
              separated = true;
            }
          }
          if (!separated) {
            return false;
          }
        }
      }
      return true;
    }

    ComponentElement amalgamate(ComponentElement const& x, ComponentElement const& y) {
      if (x.kind() == ComponentKind::monogenic) {
        return ComponentElement::power(x.vertex(), x.exponent() + y.exponent());
      }
      auto w = x.letters();
      w.insert(w.end(), y.letters().begin(), y.letters().end());
      return ComponentElement::word(x.vertex(), std::move(w));
    }

    template <typename Word, typename Moves>
    std::set<Word> closure(Word const& start, std::size_t limit, char const* what, Moves&& moves) {
      std::set<Word>   seen{start};
      std::deque<Word> todo{start};
      while (!todo.empty()) {
        Word w = std::move(todo.front());
        todo.pop_front();
        moves(w, [&](Word next) {
          if (seen.insert(next).second) {
            check_limit(seen.size(), limit, what);
            todo.push_back(std::move(next));
          }
        });
      }
      return seen;
    }

    // Every arrangement of every sub-multiset of `pool` (as counts).
    void arrangements(std::map<letter_type, std::size_t>& pool,
                      Letters&                            prefix,
                      std::size_t                         max_length,
                      std::vector<Letters>&               out) {
      out.push_back(prefix);
      if (prefix.size() == max_length) {
        return;
      }
      for (auto& [x, count] : pool) {
        if (count == 0) {
          continue;
        }
        --count;
        prefix.push_back(x);
        arrangements(pool, prefix, max_length, out);
        prefix.pop_back();
        ++count;
      }
    }

    Letters concat(Letters a, Letters const& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Component level
  ////////////////////////////////////////////////////////////////////////

  std::vector<Expression> shuffle_class(GraphProduct const&               product,
                                        std::span<ComponentElement const> reduced,
                                        std::size_t                       limit) {
    Expression start(reduced.begin(), reduced.end());
    if (!reduced_by_definition(product, start)) {
      throw Error(ErrorCode::not_reduced, "shuffle classes are taken of reduced expressions");
    }
    auto all = closure(start, limit, "shuffle class", [&](Expression const& e, auto&& emit) {
      for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        if (product.adjacent(e[i].vertex(), e[i + 1].vertex())) {
          auto next = e;
          std::swap(next[i], next[i + 1]);
          emit(std::move(next));
        }
      }
    });
    return {all.begin(), all.end()};
  }

  std::vector<Expression> reduced_forms(GraphProduct const&               product,
                                        std::span<ComponentElement const> expr,
                                        std::size_t                       limit) {
    Expression start;
    for (auto const& x : expr) {
      if (!x.is_identity()) {
        start.push_back(x);
      }
    }
    auto all = closure(start, limit, "rewrite closure", [&](Expression const& e, auto&& emit) {
      for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        if (e[i].vertex() == e[i + 1].vertex()) {
          auto next = e;
          next[i]   = amalgamate(e[i], e[i + 1]);
          next.erase(next.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          emit(std::move(next));
        } else if (product.adjacent(e[i].vertex(), e[i + 1].vertex())) {
          auto next = e;
          std::swap(next[i], next[i + 1]);
          emit(std::move(next));
        }
      }
    });
    std::vector<Expression> out;
    for (auto const& e : all) {
      if (reduced_by_definition(product, e)) {
        out.push_back(e);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Letter level
  ////////////////////////////////////////////////////////////////////////

  bool commute(GraphProduct const& product, letter_type x, letter_type y) {
    return x == y || product.adjacent(product.letter(x).vertex, product.letter(y).vertex);
  }

  Letters letters_of(GraphProduct const& product, std::span<ComponentElement const> expr) {
    Letters out;
    for (auto const& x : expr) {
      if (x.kind() == ComponentKind::monogenic) {
        out.insert(out.end(), x.exponent(), product.letter_of(x.vertex(), 0));
      } else {
        for (auto l : x.letters()) {
          out.push_back(product.letter_of(x.vertex(), l));
        }
      }
    }
    return out;
  }

  Letters letters_of(Element const& a) {
    return letters_of(a.product(), a.components());
  }

  std::vector<Letters> linearizations(GraphProduct const& product, Letters const& w, std::size_t limit) {
    auto all = closure(w, limit, "linearization set", [&](Letters const& u, auto&& emit) {
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        if (u[i] != u[i + 1] && commute(product, u[i], u[i + 1])) {
          auto next = u;
          std::swap(next[i], next[i + 1]);
          emit(std::move(next));
        }
      }
    });
    return {all.begin(), all.end()};
  }

  Letters min_linearization(GraphProduct const& product, Letters const& w, std::size_t limit) {
    return linearizations(product, w, limit).front();
  }

  std::vector<Letters> projection_key(GraphProduct const& product, Letters const& w) {
    std::vector<Letters> key;
    auto const           n = static_cast<letter_type>(product.number_of_letters());
    for (letter_type x = 0; x < n; ++x) {
      for (letter_type y = x; y < n; ++y) {
        if (x != y && commute(product, x, y)) {
          continue;
        }
        Letters p;
        for (auto z : w) {
          if (z == x || z == y) {
            p.push_back(z);
          }
        }
        key.push_back(std::move(p));
      }
    }
    return key;
  }

  bool equal(GraphProduct const& product, Letters const& u, Letters const& v) {
    return u.size() == v.size() && projection_key(product, u) == projection_key(product, v);
  }

  std::optional<Letters> right_quotient(GraphProduct const& product, Letters m, Letters const& c) {
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      auto j = m.size();
      while (j-- > 0 && m[j] != *it) {
      }
      if (j == static_cast<std::size_t>(-1)) {
        return std::nullopt;
      }
      for (std::size_t k = j + 1; k < m.size(); ++k) {
        if (!commute(product, m[k], *it)) {
          return std::nullopt;
        }
      }
      m.erase(m.begin() + static_cast<std::ptrdiff_t>(j));
    }
    return m;
  }

  std::optional<Letters> left_quotient(GraphProduct const& product, Letters m, Letters const& c) {
    for (auto x : c) {
      auto it = std::find(m.begin(), m.end(), x);
      if (it == m.end()) {
        return std::nullopt;
      }
      if (!std::all_of(m.begin(), it, [&](letter_type y) { return commute(product, x, y); })) {
        return std::nullopt;
      }
      m.erase(it);
    }
    return m;
  }

  std::vector<Letters> all_left_divisors(GraphProduct const& product, Letters const& w, std::size_t limit) {
    std::map<std::vector<Letters>, Letters> by_key;
    for (auto const& u : linearizations(product, w, limit)) {
      for (std::size_t k = 0; k <= u.size(); ++k) {
        Letters prefix(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k));
        auto    key = projection_key(product, prefix);
        auto    it  = by_key.find(key);
        if (it == by_key.end()) {
          by_key.emplace(std::move(key), std::move(prefix));
        } else if (prefix < it->second) {
          it->second = std::move(prefix);
        }
      }
    }
    std::vector<Letters> out;
    for (auto& [key, u] : by_key) {
      out.push_back(std::move(u));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Letters> common_left_divisors(GraphProduct const& product,
                                            Letters const&      u,
                                            Letters const&      v,
                                            std::size_t         limit) {
    std::vector<Letters> out;
    for (auto& x : all_left_divisors(product, u, limit)) {
      if (left_quotient(product, v, x)) {
        out.push_back(std::move(x));
      }
    }
    return out;
  }

  LclmSearch lclm_search(GraphProduct const& product,
                         Letters const&      b,
                         Letters const&      c,
                         std::size_t         bound) {
    LclmSearch                         result;
    std::map<letter_type, std::size_t> pool;
    for (auto x : b) {
      ++pool[x];
    }
    std::vector<Letters> prefixes;
    Letters              scratch;
    auto const max_prefix = bound >= c.size() ? std::min(bound - c.size(), b.size()) : 0;
    if (bound >= c.size()) {
      arrangements(pool, scratch, max_prefix, prefixes);
    }

    std::set<std::vector<Letters>> seen;
    for (auto const& t : prefixes) {
      auto m = concat(t, c);
      if (!right_quotient(product, m, b)) {
        continue;
      }
      if (seen.insert(projection_key(product, m)).second) {
        result.multiples.push_back(std::move(m));
      }
    }
    if (result.multiples.empty()) {
      return result;
    }
    for (auto const& m : result.multiples) {
      bool divides_all = std::all_of(
          result.multiples.begin(), result.multiples.end(),
          [&](Letters const& other) { return right_quotient(product, other, m).has_value(); });
      if (divides_all) {
        result.verdict = Verdict::principal;
        result.minimum = m;
        return result;
      }
    }
    result.verdict = Verdict::non_principal;
    return result;
  }

  std::optional<Letters> lclm_oracle(Element const& b, Element const& c, std::size_t bound) {
    auto search = lclm_search(b.product(), letters_of(b), letters_of(c), bound);
    switch (search.verdict) {
      case Verdict::none:
        return std::nullopt;
      case Verdict::principal:
        return search.minimum;
      case Verdict::non_principal:
        break;
    }
    throw Error(ErrorCode::bound_exceeded, "common left multiples found have no least element");
  }

  std::optional<Letters> hclf_oracle(GraphProduct const& product,
                                     Letters const&      u,
                                     Letters const&      v,
                                     std::size_t         limit) {
    auto common = common_left_divisors(product, u, v, limit);
    for (auto const& x : common) {
      bool top = std::all_of(common.begin(), common.end(), [&](Letters const& y) {
        return left_quotient(product, x, y).has_value();
      });
      if (top) {
        return x;
      }
    }
    return std::nullopt;
  }

  bool pair_le(GraphProduct const& product, Pair const& s, Pair const& t) {
    auto x = right_quotient(product, s.first, t.first);
    return x && equal(product, concat(*x, t.second), s.second);
  }

  std::vector<Pair> elements_above(GraphProduct const& product, Pair const& s, std::size_t limit) {
    std::vector<Pair> out;
    for (auto const& x : common_left_divisors(product, s.first, s.second, limit)) {
      out.emplace_back(*left_quotient(product, s.first, x), *left_quotient(product, s.second, x));
    }
    return out;
  }

  std::optional<Pair> maximum_above(GraphProduct const& product, Pair const& s, std::size_t limit) {
    auto above = elements_above(product, s, limit);
    for (auto const& top : above) {
      bool is_max = std::all_of(above.begin(), above.end(),
                                [&](Pair const& u) { return pair_le(product, u, top); });
      if (is_max) {
        return top;
      }
    }
    return std::nullopt;
  }

  std::optional<Letters> act(GraphProduct const& product, Pair const& s, Letters const& x) {
    auto q = right_quotient(product, x, s.first);
    if (!q) {
      return std::nullopt;
    }
    return concat(std::move(*q), s.second);
  }

}  // namespace polygraph::oracle
