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

#include "polygraph/gproduct.hpp"

#include <algorithm>  // for reverse
#include <cassert>    // for assert
#include <numeric>  // for accumulate
#include <utility>  // for move

#include "polygraph/error.hpp"  // for Error

namespace polygraph {

  namespace {
    void check_same(GraphProduct const& x, GraphProduct const& y) {
      if (!(x == y)) {
        throw Error(ErrorCode::mismatched_graph, "operands belong to different graph products");
      }
    }

    Expression without(std::span<ComponentElement const> expr, std::size_t j) {
      Expression out(expr.begin(), expr.end());
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
      return out;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Reduced expressions
  ////////////////////////////////////////////////////////////////////////

  bool is_reduced(GraphProduct const& product, std::span<ComponentElement const> expr) {
    for (std::size_t i = 0; i < expr.size(); ++i) {
      if (expr[i].is_identity()) {
        return false;
      }
      auto const v = expr[i].vertex();
      for (std::size_t j = i + 1; j < expr.size(); ++j) {
        auto const u = expr[j].vertex();
        if (u == v) {
          return false;
        }
        if (!product.adjacent(u, v)) {
          break;
        }
      }
    }
    return true;
  }

  Expression reduce(GraphProduct const& product, std::span<ComponentElement const> expr) {
    Expression out;
    out.reserve(expr.size());
    for (auto const& c : expr) {
      if (c.is_identity()) {
        continue;
      }
      auto j = out.size();
      bool merged = false;
      while (j-- > 0) {
        if (out[j].vertex() == c.vertex()) {
          out[j] = component::multiply(out[j], c);
          // No nonidentity product is 1 in these components.
          assert(!out[j].is_identity());
          merged = true;
          break;
        }
        if (!product.adjacent(out[j].vertex(), c.vertex())) {
          break;
        }
      }
      if (!merged) {
        out.push_back(c);
      }
    }
    return out;
  }

  Expression canonical_order(GraphProduct const& product, std::span<ComponentElement const> reduced) {
    auto const n = reduced.size();
    // blockers[i] = number of earlier, still pending components that do not
    // commute with component i.
    std::vector<std::size_t> blockers(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (!product.adjacent(reduced[j].vertex(), reduced[i].vertex())) {
          ++blockers[i];
        }
      }
    }
    std::vector<bool> done(n, false);
    Expression        out;
    out.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (!done[i] && blockers[i] == 0
            && (best == n || reduced[i].vertex() < reduced[best].vertex())) {
          best = i;
        }
      }
      assert(best != n);
      done[best] = true;
      out.push_back(reduced[best]);
      for (std::size_t k = best + 1; k < n; ++k) {
        if (!done[k] && !product.adjacent(reduced[best].vertex(), reduced[k].vertex())) {
          --blockers[k];
        }
      }
    }
    return out;
  }

  Element normal_form(GraphProduct const& product, std::span<ComponentElement const> expr) {
    return Element::from_expression(product, expr);
  }

  Element Element::from_expression(GraphProduct product, std::span<ComponentElement const> expr) {
    auto reduced = reduce(product, expr);
    auto canon   = canonical_order(product, reduced);
    return Element(std::move(product), std::move(canon));
  }

  std::size_t Element::letter_length() const noexcept {
    return std::accumulate(_expr.begin(), _expr.end(), std::size_t{0},
                           [](std::size_t n, auto const& x) { return n + x.letter_length(); });
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction and printing
  ////////////////////////////////////////////////////////////////////////

  Element make_element(GraphProduct const& product, std::span<Token const> tokens) {
    Expression expr;
    for (auto const& t : tokens) {
      if (t.exponent < 1) {
        throw Error(ErrorCode::bad_exponent, "exponent " + std::to_string(t.exponent));
      }
      auto const& l = product.letter(t.letter);
      if (product.kind(l.vertex) == ComponentKind::monogenic) {
        expr.push_back(ComponentElement::power(l.vertex, static_cast<std::uint64_t>(t.exponent)));
      } else {
        expr.push_back(ComponentElement::word(
            l.vertex, std::vector<std::uint32_t>(static_cast<std::size_t>(t.exponent), l.local)));
      }
    }
    return normal_form(product, expr);
  }

  Element make_element(GraphProduct const& product, std::string_view word) {
    auto tokens = parse_tokens(product, word, false);
    return make_element(product, tokens);
  }

  Element component_embed(GraphProduct const& product, ComponentElement const& x) {
    if (x.vertex() >= product.number_of_vertices() || x.kind() != product.kind(x.vertex())) {
      throw Error(ErrorCode::invalid_payload, "payload does not belong to its vertex");
    }
    for (auto l : x.letters()) {
      if (l >= product.alphabet_size(x.vertex())) {
        throw Error(ErrorCode::invalid_payload, "letter outside the vertex alphabet");
      }
    }
    if (x.is_identity()) {
      return Element(product);
    }
    return Element::from_expression(product, std::span(&x, 1));
  }

  std::vector<Token> to_tokens(GraphProduct const& product, ComponentElement const& x) {
    std::vector<Token> out;
    if (x.kind() == ComponentKind::monogenic) {
      if (x.exponent() != 0) {
        out.push_back(Token{product.letter_of(x.vertex(), 0),
                            static_cast<std::int64_t>(x.exponent())});
      }
      return out;
    }
    for (auto l : x.letters()) {
      auto const letter = product.letter_of(x.vertex(), l);
      if (!out.empty() && out.back().letter == letter) {
        ++out.back().exponent;
      } else {
        out.push_back(Token{letter, 1});
      }
    }
    return out;
  }

  std::vector<Token> to_tokens(Element const& a) {
    std::vector<Token> out;
    for (auto const& x : a.components()) {
      auto ts = to_tokens(a.product(), x);
      out.insert(out.end(), ts.begin(), ts.end());
    }
    return out;
  }

  std::string to_string(GraphProduct const& product, ComponentElement const& x) {
    return format_tokens(product, to_tokens(product, x));
  }

  std::string to_string(Element const& a) {
    return format_tokens(a.product(), to_tokens(a));
  }

  std::vector<letter_type> to_letters(Element const& a) {
    std::vector<letter_type> out;
    for (auto const& x : a.components()) {
      if (x.kind() == ComponentKind::monogenic) {
        out.insert(out.end(), x.exponent(), a.product().letter_of(x.vertex(), 0));
      } else {
        for (auto l : x.letters()) {
          out.push_back(a.product().letter_of(x.vertex(), l));
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Arithmetic
  ////////////////////////////////////////////////////////////////////////

  Element multiply(Element const& a, Element const& b) {
    check_same(a.product(), b.product());
    if (a.is_identity()) {
      return b;
    }
    if (b.is_identity()) {
      return a;
    }
    Expression expr = a.components();
    expr.insert(expr.end(), b.components().begin(), b.components().end());
    return Element::from_expression(a.product(), expr);
  }

  ComponentSplit final_component(GraphProduct const&               product,
                                 std::span<ComponentElement const> reduced,
                                 vertex_type                       v) {
    auto j = reduced.size();
    while (j-- > 0) {
      auto const u = reduced[j].vertex();
      if (u == v) {
        return {reduced[j], Element::from_expression(product, without(reduced, j))};
      }
      if (!product.adjacent(u, v)) {
        break;
      }
    }
    return {ComponentElement::identity(v, product.kind(v)),
            Element::from_expression(product, reduced)};
  }

  ComponentSplit final_component(Element const& a, vertex_type v) {
    return final_component(a.product(), a.components(), v);
  }

  ComponentSplit initial_component(GraphProduct const&               product,
                                   std::span<ComponentElement const> reduced,
                                   vertex_type                       v) {
    for (std::size_t j = 0; j < reduced.size(); ++j) {
      auto const u = reduced[j].vertex();
      if (u == v) {
        return {reduced[j], Element::from_expression(product, without(reduced, j))};
      }
      if (!product.adjacent(u, v)) {
        break;
      }
    }
    return {ComponentElement::identity(v, product.kind(v)),
            Element::from_expression(product, reduced)};
  }

  ComponentSplit initial_component(Element const& a, vertex_type v) {
    return initial_component(a.product(), a.components(), v);
  }

  std::optional<Element> right_divide(Element const& a, Element const& c) {
    check_same(a.product(), c.product());
    auto const& product = a.product();
    Element     rest    = a;
    auto const& cs      = c.components();
    // Peel c's components from the right: if x is last in c, the final
    // v-component of rest must be d' x.
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
      auto [d, complement] = final_component(rest, it->vertex());
      if (d.is_identity()) {
        return std::nullopt;
      }
      auto quotient = component::right_divide(d, *it);
      if (!quotient) {
        return std::nullopt;
      }
      rest = quotient->is_identity()
                 ? std::move(complement)
                 : multiply(complement, Element::from_expression(product, std::span(&*quotient, 1)));
    }
    return rest;
  }

  std::optional<Element> left_divide(Element const& a, Element const& c) {
    check_same(a.product(), c.product());
    auto const& product = a.product();
    Element     rest    = a;
    for (auto const& x : c.components()) {
      auto [d, complement] = initial_component(rest, x.vertex());
      if (d.is_identity()) {
        return std::nullopt;
      }
      auto quotient = component::left_divide(d, x);
      if (!quotient) {
        return std::nullopt;
      }
      rest = quotient->is_identity()
                 ? std::move(complement)
                 : multiply(Element::from_expression(product, std::span(&*quotient, 1)), complement);
    }
    return rest;
  }

  namespace {
    // ρ_x (positive) or ρ_x⁻¹ (negative) for a single component x.
    struct Translation {
      ComponentElement value;
      bool             inverse;
    };
  }  // namespace

  std::optional<LeftMultiple> lclm(Element const& b, Element const& c) {
    check_same(b.product(), c.product());
    auto const& product = b.product();

    // ρ_b ρ_c⁻¹ = ρ_b1 ... ρ_bh ρ_ck⁻¹ ... ρ_c1⁻¹
    std::vector<Translation> word;
    for (auto const& x : b.components()) {
      word.push_back({x, false});
    }
    for (auto it = c.components().rbegin(); it != c.components().rend(); ++it) {
      word.push_back({*it, true});
    }

    // Each rewrite turns a positive/negative pair into negative/positive
    // (or fewer), so the number of such inversions strictly decreases.
    for (;;) {
      std::size_t i = 0;
      while (i + 1 < word.size() && !(!word[i].inverse && word[i + 1].inverse)) {
        ++i;
      }
      if (i + 1 >= word.size()) {
        break;
      }
      auto const& x = word[i].value;
      auto const& y = word[i + 1].value;
      std::vector<Translation> replacement;
      if (x.vertex() == y.vertex()) {
        // ρ_x ρ_y⁻¹ = ρ_r⁻¹ ρ_t where M_v x ∩ M_v y = M_v (r x) = M_v (t y).
        auto m = component::lclm(x, y);
        if (!m) {
          return std::nullopt;
        }
        if (!m->left_of_x.is_identity()) {
          replacement.push_back({m->left_of_x, true});
        }
        if (!m->left_of_y.is_identity()) {
          replacement.push_back({m->left_of_y, false});
        }
      } else if (product.adjacent(x.vertex(), y.vertex())) {
        // Cx ∩ Cy = Cxy, so ρ_x ρ_y⁻¹ = ρ_y⁻¹ ρ_x.
        replacement.push_back({y, true});
        replacement.push_back({x, false});
      } else {
        return std::nullopt;
      }
      word.erase(word.begin() + static_cast<std::ptrdiff_t>(i),
                 word.begin() + static_cast<std::ptrdiff_t>(i + 2));
      word.insert(word.begin() + static_cast<std::ptrdiff_t>(i), replacement.begin(),
                  replacement.end());
    }

    // Now ρ_n1⁻¹ ... ρ_np⁻¹ ρ_q1 ... ρ_qr = ρ_(np ... n1)⁻¹ ρ_(q1 ... qr).
    Expression s_expr, t_expr;
    for (auto const& tr : word) {
      (tr.inverse ? s_expr : t_expr).push_back(tr.value);
    }
    std::reverse(s_expr.begin(), s_expr.end());
    auto s = Element::from_expression(product, s_expr);
    auto t = Element::from_expression(product, t_expr);
    auto m = multiply(s, b);
    assert(m == multiply(t, c));
    return LeftMultiple{std::move(s), std::move(t), std::move(m)};
  }

  Element hclf(Element const& a, Element const& b) {
    check_same(a.product(), b.product());
    auto const& product = a.product();
    Expression  factor;
    Element     ra = a, rb = b;
    bool        progress = true;
    while (progress) {
      progress = false;
      for (vertex_type v = 0; v < product.number_of_vertices(); ++v) {
        auto sa = initial_component(ra, v);
        if (sa.component.is_identity()) {
          continue;
        }
        auto sb = initial_component(rb, v);
        if (sb.component.is_identity()) {
          continue;
        }
        auto f = component::hclf(sa.component, sb.component);
        if (f.is_identity()) {
          continue;
        }
        auto strip = [&](ComponentSplit const& split) {
          auto q = *component::left_divide(split.component, f);
          return q.is_identity()
                     ? split.complement
                     : multiply(Element::from_expression(product, std::span(&q, 1)),
                                split.complement);
        };
        ra = strip(sa);
        rb = strip(sb);
        factor.push_back(std::move(f));
        progress = true;
        break;
      }
    }
    return Element::from_expression(product, factor);
  }

}  // namespace polygraph
