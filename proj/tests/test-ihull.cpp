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

#include <algorithm>  // for find
#include <string>     // for string

#include "catch_amalgamated.hpp"  // for TEST_CASE, REQUIRE
#include "test-helpers.hpp"       // for path3, pr

#include "polygraph/error.hpp"  // for Error
#include "polygraph/ihull.hpp"  // for IHElement

namespace polygraph {

  using test::pr;

  namespace {
    std::string str(IHElement const& s) {
      return to_string(s);
    }

    std::vector<std::string> relations(GraphProduct const& p) {
      std::vector<std::string> out;
      for (auto const& r : generate_presentation(p)) {
        out.push_back(to_string(p, r));
      }
      return out;
    }

    bool contains(std::vector<std::string> const& v, std::string const& x) {
      return std::find(v.begin(), v.end(), x) != v.end();
    }
  }  // namespace

  TEST_CASE("ih_multiply", "[ihull]") {
    auto p    = test::path3();
    auto zero = IHElement::zero(p);
    REQUIRE((pr(p, "1", "x1") * pr(p, "x3", "1")).is_zero());
    REQUIRE(pr(p, "1", "x1") * pr(p, "x1", "1") == IHElement::identity(p));
    REQUIRE(str(pr(p, "1", "x1") * pr(p, "x2", "1")) == "[x2 | x1]");
    REQUIRE(str(pr(p, "x1", "1") * pr(p, "1", "x1")) == "[x1 | x1]");
    REQUIRE(zero * pr(p, "x1", "x2") == zero);
    REQUIRE(pr(p, "x1", "x2") * zero == zero);
    REQUIRE(IHElement::identity(p) * pr(p, "x3", "x2") == pr(p, "x3", "x2"));
    REQUIRE_THROWS_AS(pr(p, "x1", "1") * IHElement::identity(test::path3()), Error);
    REQUIRE_THROWS_AS(IHElement(test::el(p, "x1"), test::el(test::path3(), "x1")), Error);
  }

  TEST_CASE("ih_inverse", "[ihull]") {
    auto p = test::path3();
    REQUIRE(ih_inverse(pr(p, "x1", "x2")) == pr(p, "x2", "x1"));
    REQUIRE(ih_inverse(pr(p, "x3 x1", "x3 x1")) == pr(p, "x3 x1", "x3 x1"));
    REQUIRE(ih_inverse(IHElement::zero(p)).is_zero());
  }

  TEST_CASE("is_idempotent", "[ihull]") {
    auto p = test::path3();
    REQUIRE(is_idempotent(pr(p, "x1", "x1")));
    REQUIRE(!is_idempotent(pr(p, "x1", "x2")));
    REQUIRE(!(pr(p, "x1", "x2") * pr(p, "x1", "x2") == pr(p, "x1", "x2")));
    REQUIRE(is_idempotent(IHElement::zero(p)));
  }

  TEST_CASE("natural_le", "[ihull]") {
    auto p = test::path3();
    REQUIRE(natural_le(pr(p, "x2 x1", "x2 x3"), pr(p, "x1", "x3")));
    REQUIRE(!natural_le(pr(p, "x1", "x3"), pr(p, "x2 x1", "x2 x3")));
    auto s = pr(p, "x3 x1", "x2");
    REQUIRE(natural_le(s, s));
    REQUIRE(!natural_le(pr(p, "x1", "1"), pr(p, "x2", "1")));
    REQUIRE(natural_le(IHElement::zero(p), s));
    REQUIRE(!natural_le(s, IHElement::zero(p)));
  }

  TEST_CASE("max_above", "[ihull]") {
    auto p = test::path3();
    REQUIRE(max_above(pr(p, "x2 x1", "x2 x3")) == pr(p, "x1", "x3"));
    REQUIRE(max_above(pr(p, "x1", "x3")) == pr(p, "x1", "x3"));
    REQUIRE(max_above(pr(p, "x3 x1 x2", "x3 x1 x2")) == IHElement::identity(p));
    REQUIRE(max_above(pr(p, "x1 x2", "x2 x3")) == pr(p, "x1", "x3"));
    try {
      (void) max_above(IHElement::zero(p));
      FAIL("expected ZeroInput");
    } catch (Error const& e) {
      REQUIRE(e.code() == ErrorCode::zero_input);
    }
  }

  TEST_CASE("Green's relations", "[ihull]") {
    auto p    = test::path3();
    auto zero = IHElement::zero(p);
    REQUIRE(green_L(pr(p, "x1", "x2"), pr(p, "x3", "x2")));
    REQUIRE(!green_R(pr(p, "x1", "x2"), pr(p, "x3", "x2")));
    REQUIRE(green_R(pr(p, "x1", "x2"), pr(p, "x1", "x3")));
    REQUIRE(!green_L(pr(p, "x1", "x2"), pr(p, "x1", "x3")));
    REQUIRE(green_H(pr(p, "x1", "x2"), pr(p, "x1", "x2")));
    REQUIRE(!green_H(pr(p, "x1", "x2"), pr(p, "x1", "x3")));
    REQUIRE(green_L(zero, zero));
    REQUIRE(green_R(zero, zero));
    REQUIRE(!green_L(zero, pr(p, "1", "1")));
    REQUIRE(!green_R(pr(p, "1", "1"), zero));
  }

  TEST_CASE("eval_word", "[ihull]") {
    auto p = test::path3();
    REQUIRE(eval_word(p, "x1 x3^-1").is_zero());
    REQUIRE(eval_word(p, "x1 x1^-1") == IHElement::identity(p));
    REQUIRE(str(eval_word(p, "x1 x2^-1")) == "[x2 | x1]");
    REQUIRE(str(eval_word(p, "x1^-1 x1")) == "[x1 | x1]");
    REQUIRE(str(eval_word(p, "x1^-2 x2^3")) == "[x1^2 | x2^3]");
    REQUIRE(eval_word(p, "") == IHElement::identity(p));
    REQUIRE(eval_word(p, "1") == IHElement::identity(p));
    REQUIRE_THROWS_AS(eval_word(p, "x4"), Error);
    REQUIRE_THROWS_AS(eval_word(p, "x1^0"), Error);
  }

  TEST_CASE("eval_word on a free vertex", "[ihull]") {
    auto q = test::mixed();
    REQUIRE(eval_word(q, "p q^-1").is_zero());
    REQUIRE(eval_word(q, "q q^-1") == IHElement::identity(q));
    REQUIRE(str(eval_word(q, "p^-1 w")) == "[p | w]");
  }

  TEST_CASE("text form", "[ihull]") {
    auto p = test::path3();
    REQUIRE(parse_ih_element(p, "0").is_zero());
    REQUIRE(parse_ih_element(p, " [x2 x1|x3 ] ") == pr(p, "x1 x2", "x3"));
    REQUIRE(str(parse_ih_element(p, "[1|1]")) == "[1 | 1]");
    REQUIRE(str(IHElement::zero(p)) == "0");
    REQUIRE_THROWS_AS(parse_ih_element(p, "[x1]"), Error);
    REQUIRE_THROWS_AS(parse_ih_element(p, "x1 | x2"), Error);
    REQUIRE_THROWS_AS(parse_ih_element(p, "[x1 | x2 | x3]"), Error);
  }

  TEST_CASE("generate_presentation", "[ihull]") {
    auto e2 = test::edgeless(2);
    REQUIRE(contains(relations(e2), "x1 x2^-1 = 0"));
    REQUIRE(contains(relations(e2), "x2 x1^-1 = 0"));

    auto path = relations(test::path3());
    REQUIRE(contains(path, "x1 x2 = x2 x1"));
    REQUIRE(contains(path, "x1 x2^-1 = x2^-1 x1"));
    REQUIRE(contains(path, "x1^-1 x2^-1 = x2^-1 x1^-1"));
    REQUIRE(contains(path, "x1 x3^-1 = 0"));
    REQUIRE(!contains(path, "x1 x2^-1 = 0"));

    REQUIRE(relations(test::single()) == std::vector<std::string>{"x x^-1 = 1"});

    auto k3 = relations(test::complete3());
    REQUIRE(std::none_of(k3.begin(), k3.end(), [](auto const& r) {
      return r.ends_with("= 0");
    }));

    auto mixed = relations(test::mixed());
    REQUIRE(contains(mixed, "p p^-1 = 1"));
    REQUIRE(contains(mixed, "p q^-1 = 0"));
    REQUIRE(contains(mixed, "q p^-1 = 0"));
    REQUIRE(contains(mixed, "p y^-1 = 0"));
    REQUIRE(contains(mixed, "p w = w p"));

    REQUIRE(relations(test::path3()) == path);
  }

  TEST_CASE("check_relations", "[ihull]") {
    for (auto const& p : {test::path3(), test::edgeless(2), test::complete3(), test::mixed(),
                          test::single()}) {
      auto report = check_relations(p);
      REQUIRE(report.ok());
      REQUIRE(report.checked == generate_presentation(p).size());
    }
  }

}  // namespace polygraph
