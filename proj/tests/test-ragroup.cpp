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

#include <random>  // for mt19937_64

#include "catch_amalgamated.hpp"  // for TEST_CASE, REQUIRE
#include "test-helpers.hpp"       // for path3, pr

#include "polygraph/error.hpp"    // for Error
#include "polygraph/ragroup.hpp"  // for group_reduce

namespace polygraph {

  using test::pr;

  namespace {
    std::string reduce(GraphProduct const& p, std::string_view w) {
      return to_string(p, group_reduce(p, parse_signed_word(p, w)));
    }

    // Every word obtained from w by swapping adjacent commuting letters.
    std::vector<std::vector<SignedLetter>> swaps_of(GraphProduct const&              p,
                                                    std::vector<SignedLetter> const& w) {
      std::vector<std::vector<SignedLetter>> seen{w}, todo{w};
      while (!todo.empty()) {
        auto u = todo.back();
        todo.pop_back();
        for (std::size_t i = 0; i + 1 < u.size(); ++i) {
          if (p.adjacent(u[i].vertex, u[i + 1].vertex)) {
            auto v = u;
            std::swap(v[i], v[i + 1]);
            if (std::find(seen.begin(), seen.end(), v) == seen.end()) {
              seen.push_back(v);
              todo.push_back(v);
            }
          }
        }
      }
      return seen;
    }
  }  // namespace

  TEST_CASE("group_reduce", "[ragroup]") {
    auto p = test::path3();
    REQUIRE(reduce(p, "x1 x2 x1^-1") == "x2");
    REQUIRE(reduce(p, "x1 x3 x1^-1") == "x1 x3 x1^-1");
    REQUIRE(reduce(p, "x1 x1^-1") == "1");
    REQUIRE(reduce(p, "x2 x1") == "x1 x2");
    REQUIRE(reduce(p, "x2^-1 x1") == "x1 x2^-1");
    REQUIRE(reduce(p, "x1^2 x3 x1^-1") == "x1^2 x3 x1^-1");
    REQUIRE(reduce(p, "x1^-1 x2 x1") == "x2");
    REQUIRE(reduce(p, "x3 x1 x1^-1 x3^-1") == "1");
    REQUIRE(reduce(p, "") == "1");
    REQUIRE(to_string(p, GroupOrZero{}) == "0");
    REQUIRE_THROWS_AS(group_reduce(test::mixed(), {}), Error);
    REQUIRE_THROWS_AS(parse_signed_word(p, "x1^0"), Error);
    REQUIRE_THROWS_AS(parse_signed_word(p, "y"), Error);
  }

  TEST_CASE("group_reduce is constant on swap classes", "[ragroup]") {
    std::mt19937_64 rng(11);
    for (unsigned mask = 0; mask < 64; ++mask) {
      std::string text = "vertex x1 mono\nvertex x2 mono\nvertex x3 mono\nvertex x4 mono\n";
      int         bit  = 0;
      for (int i = 1; i <= 4; ++i) {
        for (int j = i + 1; j <= 4; ++j, ++bit) {
          if (mask & (1u << bit)) {
            text += "edge x" + std::to_string(i) + " x" + std::to_string(j) + "\n";
          }
        }
      }
      auto p = parse_graph(text);
      for (int i = 0; i < 40; ++i) {
        std::vector<SignedLetter> w;
        for (int j = std::uniform_int_distribution<int>(0, 6)(rng); j > 0; --j) {
          w.push_back({static_cast<vertex_type>(std::uniform_int_distribution<int>(0, 3)(rng)),
                       std::uniform_int_distribution<int>(0, 1)(rng) == 1});
        }
        auto g = group_reduce(p, w);
        REQUIRE(group_reduce(p, g.letters()) == g);
        for (auto const& v : swaps_of(p, w)) {
          REQUIRE(group_reduce(p, v) == g);
        }
        REQUIRE(group_multiply(p, g, group_inverse(p, g)).is_identity());
        // positive words: the group form is the monoid normal form
        std::vector<Token> positive;
        for (auto const& x : w) {
          positive.push_back({p.letter_of(x.vertex, 0), 1});
        }
        std::vector<SignedLetter> plus;
        for (auto const& x : w) {
          plus.push_back({x.vertex, false});
        }
        REQUIRE(to_string(p, group_reduce(p, plus)) == to_string(make_element(p, positive)));
      }
    }
  }

  TEST_CASE("group_reduce agrees with the monoid normal form on positive words", "[ragroup]") {
    auto p = test::path3();
    for (auto const* w : {"x2 x1", "x3 x2 x1 x2 x3", "x2 x3 x1 x2", "x1 x3 x1", "x3 x3 x2 x1"}) {
      REQUIRE(reduce(p, w) == test::nf(p, w));
    }
  }

  TEST_CASE("eta", "[ragroup]") {
    auto p = test::path3();
    REQUIRE(eta(pr(p, "x1", "x1"))->is_identity());
    REQUIRE(to_string(p, eta(pr(p, "x2", "x1"))) == "x1 x2^-1");
    REQUIRE(!eta(IHElement::zero(p)));
    REQUIRE(to_string(p, eta(pr(p, "x1", "x3"))) == "x1^-1 x3");
    REQUIRE_THROWS_AS(eta(IHElement::identity(test::mixed())), Error);
  }

}  // namespace polygraph
