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

#include <string>  // for string

#include "catch_amalgamated.hpp"  // for TEST_CASE, REQUIRE
#include "test-helpers.hpp"       // for path3

#include "polygraph/error.hpp"  // for Error
#include "polygraph/graph.hpp"  // for parse_graph

namespace polygraph {

  namespace {
    ErrorCode code_of(std::string const& text) {
      try {
        (void) parse_graph(text);
      } catch (Error const& e) {
        return e.code();
      }
      FAIL("no error for: " << text);
      return ErrorCode::syntax;
    }
  }  // namespace

  TEST_CASE("parse_graph: single edge", "[graph]") {
    auto p = parse_graph("vertex u mono\nvertex w mono\nedge u w");
    auto const& g = p.graph();
    REQUIRE(g.number_of_vertices() == 2);
    REQUIRE(g.vertex_names() == std::vector<std::string>{"u", "w"});
    REQUIRE(g.edges() == std::vector<Graph::edge_type>{{0, 1}});
    REQUIRE(g.adjacent("w", "u"));
  }

  TEST_CASE("parse_graph: free and monogenic components", "[graph]") {
    auto p = parse_graph("vertex u free p q\nvertex w mono");
    REQUIRE(p.kind(0) == ComponentKind::free);
    REQUIRE(p.components()[0].letters == std::vector<std::string>{"p", "q"});
    REQUIRE(p.kind(1) == ComponentKind::monogenic);
    REQUIRE(p.number_of_letters() == 3);
    REQUIRE(p.letter(p.letter_index("q")).vertex == 0);
    REQUIRE(p.letter(p.letter_index("q")).local == 1);
    REQUIRE(p.letter(p.letter_index("w")).vertex == 1);
    REQUIRE(!p.all_monogenic());
    REQUIRE(p.alphabet_size(0) == 2);
    REQUIRE(p.alphabet_size(1) == 1);
  }

  TEST_CASE("parse_graph: errors", "[graph]") {
    REQUIRE(code_of("vertex u mono\nedge u u") == ErrorCode::self_loop);
    REQUIRE(code_of("vertex u mono\nvertex u mono") == ErrorCode::duplicate_name);
    REQUIRE(code_of("vertex u free p\nvertex w free p") == ErrorCode::duplicate_name);
    REQUIRE(code_of("vertex u free w\nvertex w mono") == ErrorCode::duplicate_name);
    REQUIRE_NOTHROW(parse_graph("vertex u free u v\nvertex w mono"));
    REQUIRE(code_of("vertex u mono\nedge u w") == ErrorCode::undeclared_vertex);
    REQUIRE(code_of("vertex u free") == ErrorCode::empty_letter_list);
    REQUIRE(code_of("vertex u") == ErrorCode::syntax);
    REQUIRE(code_of("vertex u mono p") == ErrorCode::syntax);
    REQUIRE(code_of("vertex 1u mono") == ErrorCode::syntax);
    REQUIRE(code_of("vertex u stack") == ErrorCode::syntax);
    REQUIRE(code_of("node u") == ErrorCode::syntax);
    REQUIRE(code_of("vertex u mono\nedge u") == ErrorCode::syntax);
  }

  TEST_CASE("parse_graph: comments, blank lines and forward edges", "[graph]") {
    auto p = parse_graph("# header\n\nedge a b  # before the vertices\nvertex a mono\n"
                         "   vertex b mono # trailing\n");
    REQUIRE(p.graph().adjacent("a", "b"));
  }

  TEST_CASE("are_adjacent: path graph", "[graph]") {
    auto        p = test::path3();
    auto const& g = p.graph();
    REQUIRE(g.adjacent("x1", "x2"));
    REQUIRE(!g.adjacent("x1", "x3"));
    for (vertex_type u = 0; u < 3; ++u) {
      REQUIRE(!g.adjacent(u, u));
      for (vertex_type v = 0; v < 3; ++v) {
        REQUIRE(g.adjacent(u, v) == g.adjacent(v, u));
      }
    }
    REQUIRE_THROWS_AS(g.adjacent("x1", "x9"), Error);
  }

  TEST_CASE("Graph constructor validates", "[graph]") {
    REQUIRE_THROWS_AS(Graph({"a", "b"}, {{0, 0}}), Error);
    REQUIRE_THROWS_AS(Graph({"a", "b"}, {{0, 2}}), Error);
    REQUIRE_THROWS_AS(Graph({"a", "a"}, {}), Error);
    Graph g({"a", "b"}, {{1, 0}, {0, 1}});
    REQUIRE(g.edges() == std::vector<Graph::edge_type>{{0, 1}});
  }

  TEST_CASE("format_graph round trip", "[graph]") {
    for (auto const* text : {"vertex u mono\nvertex w mono\nedge u w",
                             "vertex u free p q\nvertex w mono\nvertex y mono\nedge y w\nedge w u",
                             "vertex x mono"}) {
      auto p = parse_graph(text);
      auto q = parse_graph(format_graph(p));
      REQUIRE(p.graph() == q.graph());
      REQUIRE(p.components() == q.components());
      REQUIRE(format_graph(q) == format_graph(p));
    }
  }

  TEST_CASE("names", "[graph]") {
    REQUIRE(is_valid_name("x1"));
    REQUIRE(is_valid_name("A_b9"));
    REQUIRE(!is_valid_name(""));
    REQUIRE(!is_valid_name("9a"));
    REQUIRE(!is_valid_name("_a"));
    REQUIRE(!is_valid_name("a-b"));
  }

  TEST_CASE("Error messages carry the code name", "[graph]") {
    try {
      (void) parse_graph("vertex u mono\nedge u u");
      FAIL("expected an error");
    } catch (Error const& e) {
      REQUIRE(std::string(e.what()).starts_with("SelfLoop"));
    }
    REQUIRE(to_string(ErrorCode::not_reduced) == "NotReduced");
  }

}  // namespace polygraph
