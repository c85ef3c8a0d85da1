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

#include "polygraph/ihull.hpp"

#include "polygraph/error.hpp"  // for Error

namespace polygraph {

  IHElement::IHElement(Element a, Element b) : _product(a.product()) {
    if (!(a.product() == b.product())) {
      throw Error(ErrorCode::mismatched_graph, "pair entries belong to different graph products");
    }
    _pair.emplace(std::move(a), std::move(b));
  }

  IHElement ih_multiply(IHElement const& s, IHElement const& t) {
    if (!(s.product() == t.product())) {
      throw Error(ErrorCode::mismatched_graph, "operands belong to different graph products");
    }
    if (s.is_zero() || t.is_zero()) {
      return IHElement::zero(s.product());
    }
    auto m = lclm(s.right(), t.left());
    if (!m) {
      return IHElement::zero(s.product());
    }
    return IHElement(m->s * s.left(), m->t * t.right());
  }

  IHElement ih_inverse(IHElement const& s) {
    if (s.is_zero()) {
      return s;
    }
    return IHElement(s.right(), s.left());
  }

  bool is_idempotent(IHElement const& s) noexcept {
    return s.is_zero() || s.left() == s.right();
  }

  bool natural_le(IHElement const& s, IHElement const& t) {
    if (s.is_zero()) {
      return true;
    }
    if (t.is_zero()) {
      return false;
    }
    auto x = right_divide(s.left(), t.left());
    return x && *x * t.right() == s.right();
  }

  IHElement max_above(IHElement const& s) {
    if (s.is_zero()) {
      throw Error(ErrorCode::zero_input, "the zero lies under no maximal element");
    }
    auto x = hclf(s.left(), s.right());
    return IHElement(*left_divide(s.left(), x), *left_divide(s.right(), x));
  }

  bool green_L(IHElement const& s, IHElement const& t) {
    if (s.is_zero() || t.is_zero()) {
      return s.is_zero() && t.is_zero();
    }
    return s.right() == t.right();
  }

  bool green_R(IHElement const& s, IHElement const& t) {
    if (s.is_zero() || t.is_zero()) {
      return s.is_zero() && t.is_zero();
    }
    return s.left() == t.left();
  }

  bool green_H(IHElement const& s, IHElement const& t) {
    return green_L(s, t) && green_R(s, t);
  }

  ////////////////////////////////////////////////////////////////////////
  // Words and presentation
  ////////////////////////////////////////////////////////////////////////

  PGWord parse_pgword(GraphProduct const& product, std::string_view text) {
    return parse_tokens(product, text, true);
  }

  IHElement eval_word(GraphProduct const& product, std::span<Token const> word) {
    auto result = IHElement::identity(product);
    for (auto const& tok : word) {
      if (tok.exponent == 0) {
        throw Error(ErrorCode::bad_exponent, "exponent 0");
      }
      Token const positive{tok.letter, tok.exponent < 0 ? -tok.exponent : tok.exponent};
      auto        g = make_element(product, std::span(&positive, 1));
      auto        generator = tok.exponent > 0 ? IHElement(Element(product), std::move(g))
                                               : IHElement(std::move(g), Element(product));
      result = result * generator;
    }
    return result;
  }

  IHElement eval_word(GraphProduct const& product, std::string_view text) {
    auto word = parse_pgword(product, text);
    return eval_word(product, word);
  }

  std::vector<Relation> generate_presentation(GraphProduct const& product) {
    std::vector<Relation> out;
    auto const            n = static_cast<vertex_type>(product.number_of_vertices());
    auto letters_of = [&](vertex_type v) {
      std::vector<letter_type> ls;
      for (std::uint32_t i = 0; i < product.alphabet_size(v); ++i) {
        ls.push_back(product.letter_of(v, i));
      }
      return ls;
    };
    auto pos = [](letter_type x) { return Token{x, 1}; };
    auto neg = [](letter_type x) { return Token{x, -1}; };

    // R: bicyclic relation per monogenic vertex, polycyclic per free vertex.
    for (vertex_type v = 0; v < n; ++v) {
      auto ls = letters_of(v);
      for (auto x : ls) {
        for (auto y : ls) {
          if (x == y) {
            out.push_back({{pos(x), neg(x)}, {}, false});
          } else {
            out.push_back({{pos(x), neg(y)}, {}, true});
          }
        }
      }
    }
    // N: x y⁻¹ = 0 for distinct non-adjacent vertices.
    for (vertex_type u = 0; u < n; ++u) {
      for (vertex_type w = 0; w < n; ++w) {
        if (u == w || product.adjacent(u, w)) {
          continue;
        }
        for (auto x : letters_of(u)) {
          for (auto y : letters_of(w)) {
            out.push_back({{pos(x), neg(y)}, {}, true});
          }
        }
      }
    }
    // Com: for adjacent u < w, generators of both vertices commute in all
    // sign combinations.
    for (vertex_type u = 0; u < n; ++u) {
      for (vertex_type w = u + 1; w < n; ++w) {
        if (!product.adjacent(u, w)) {
          continue;
        }
        for (auto x : letters_of(u)) {
          for (auto y : letters_of(w)) {
            out.push_back({{pos(x), pos(y)}, {pos(y), pos(x)}, false});
            out.push_back({{pos(x), neg(y)}, {neg(y), pos(x)}, false});
            out.push_back({{pos(y), neg(x)}, {neg(x), pos(y)}, false});
            out.push_back({{neg(x), neg(y)}, {neg(y), neg(x)}, false});
          }
        }
      }
    }
    return out;
  }

  RelationReport check_relations(GraphProduct const& product) {
    RelationReport report;
    for (auto& r : generate_presentation(product)) {
      auto lhs = eval_word(product, r.left);
      auto rhs = r.right_is_zero ? IHElement::zero(product) : eval_word(product, r.right);
      ++report.checked;
      if (!(lhs == rhs)) {
        report.violations.push_back({std::move(r), std::move(lhs), std::move(rhs)});
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text forms
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(IHElement const& s) {
    if (s.is_zero()) {
      return "0";
    }
    return "[" + to_string(s.left()) + " | " + to_string(s.right()) + "]";
  }

  IHElement parse_ih_element(GraphProduct const& product, std::string_view text) {
    auto trim = [](std::string_view x) {
      auto const ws = " \t\r\n";
      auto       b  = x.find_first_not_of(ws);
      if (b == std::string_view::npos) {
        return std::string_view{};
      }
      return x.substr(b, x.find_last_not_of(ws) - b + 1);
    };
    auto body = trim(text);
    if (body == "0") {
      return IHElement::zero(product);
    }
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
      throw Error(ErrorCode::syntax, "expected \"0\" or \"[a | b]\", got \"" + std::string(text) + "\"");
    }
    body = body.substr(1, body.size() - 2);
    auto bar = body.find('|');
    if (bar == std::string_view::npos || body.find('|', bar + 1) != std::string_view::npos) {
      throw Error(ErrorCode::syntax, "expected exactly one '|' in \"" + std::string(text) + "\"");
    }
    return IHElement(make_element(product, body.substr(0, bar)),
                     make_element(product, body.substr(bar + 1)));
  }

  std::string to_string(GraphProduct const& product, Relation const& r) {
    return format_tokens(product, r.left) + " = "
           + (r.right_is_zero ? std::string("0") : format_tokens(product, r.right));
  }

}  // namespace polygraph
