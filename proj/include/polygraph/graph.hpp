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

#ifndef POLYGRAPH_GRAPH_HPP_
#define POLYGRAPH_GRAPH_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t
#include <memory>       // for shared_ptr
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

namespace polygraph {

  using vertex_type = std::uint32_t;
  using letter_type = std::uint32_t;

  // The independence graph.  Vertices are indexed in declaration order and
  // that order is the only source of tie-breaking in every normal form.
  class Graph {
   public:
    using edge_type = std::pair<vertex_type, vertex_type>;

    Graph() = default;

    // Throws Error(duplicate_name | syntax | self_loop | undeclared_vertex).
    Graph(std::vector<std::string> vertices, std::vector<edge_type> const& edges);

    [[nodiscard]] std::size_t number_of_vertices() const noexcept {
      return _names.size();
    }

    [[nodiscard]] std::string const& vertex_name(vertex_type v) const {
      return _names.at(v);
    }

    [[nodiscard]] std::vector<std::string> const& vertex_names() const noexcept {
      return _names;
    }

    [[nodiscard]] std::optional<vertex_type> find_vertex(std::string_view name) const;

    // Throws Error(undeclared_vertex).
    [[nodiscard]] vertex_type vertex(std::string_view name) const;

    // Irreflexive and symmetric; false for u == v.
    [[nodiscard]] bool adjacent(vertex_type u, vertex_type v) const noexcept {
      return _adjacency[u * _names.size() + v];
    }

    [[nodiscard]] bool adjacent(std::string_view u, std::string_view v) const {
      return adjacent(vertex(u), vertex(v));
    }

    // Each edge once, as (u, v) with u < v, sorted.
    [[nodiscard]] std::vector<edge_type> edges() const;

    friend bool operator==(Graph const&, Graph const&) = default;

   private:
    std::vector<std::string> _names;
    std::vector<bool>        _adjacency;
  };

  enum class ComponentKind { monogenic, free };

  // The vertex monoid: either {x}* with x named after the vertex, or the free
  // monoid on an ordered nonempty list of letters.
  struct Component {
    ComponentKind            kind = ComponentKind::monogenic;
    std::vector<std::string> letters;

    friend bool operator==(Component const&, Component const&) = default;
  };

  class ComponentSpec {
   public:
    ComponentSpec() = default;
    explicit ComponentSpec(std::vector<Component> per_vertex)
        : _components(std::move(per_vertex)) {}

    [[nodiscard]] Component const& operator[](vertex_type v) const {
      return _components.at(v);
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _components.size();
    }

    [[nodiscard]] bool all_monogenic() const noexcept;

    friend bool operator==(ComponentSpec const&, ComponentSpec const&) = default;

   private:
    std::vector<Component> _components;
  };

  // Graph plus components: the monoid C.  Cheap to copy; copies share the
  // same immutable data, and two handles are the same monoid iff they share
  // it.
  class GraphProduct {
   public:
    struct Letter {
      std::string name;
      vertex_type vertex;
      std::uint32_t local;  // index within the vertex alphabet
    };

    // Validates that components match the vertices and that all letter
    // tokens are distinct (Error(duplicate_name | empty_letter_list)).
    GraphProduct(Graph graph, ComponentSpec components);

    [[nodiscard]] Graph const& graph() const noexcept {
      return _data->graph;
    }

    [[nodiscard]] ComponentSpec const& components() const noexcept {
      return _data->components;
    }

    [[nodiscard]] std::size_t number_of_vertices() const noexcept {
      return _data->graph.number_of_vertices();
    }

    [[nodiscard]] ComponentKind kind(vertex_type v) const {
      return _data->components[v].kind;
    }

    [[nodiscard]] bool adjacent(vertex_type u, vertex_type v) const noexcept {
      return _data->graph.adjacent(u, v);
    }

    [[nodiscard]] std::size_t number_of_letters() const noexcept {
      return _data->letters.size();
    }

    [[nodiscard]] Letter const& letter(letter_type x) const {
      return _data->letters.at(x);
    }

    // Global index of the i-th letter of vertex v.
    [[nodiscard]] letter_type letter_of(vertex_type v, std::uint32_t i) const {
      return _data->first_letter.at(v) + i;
    }

    [[nodiscard]] std::size_t alphabet_size(vertex_type v) const {
      return _data->components[v].kind == ComponentKind::monogenic
                 ? 1
                 : _data->components[v].letters.size();
    }

    [[nodiscard]] std::optional<letter_type> find_letter(std::string_view name) const;

    // Throws Error(unknown_letter).
    [[nodiscard]] letter_type letter_index(std::string_view name) const;

    [[nodiscard]] bool all_monogenic() const noexcept {
      return _data->components.all_monogenic();
    }

    friend bool operator==(GraphProduct const& x, GraphProduct const& y) noexcept {
      return x._data == y._data;
    }

   private:
    struct Data {
      Graph                      graph;
      ComponentSpec              components;
      std::vector<Letter>        letters;
      std::vector<letter_type>   first_letter;
    };
    std::shared_ptr<Data const> _data;
  };

  // Line-oriented description:
  //   vertex <name> mono
  //   vertex <name> free <letter> [<letter> ...]
  //   edge <name> <name>
  // '#' starts a comment.  Vertex order is declaration order; edges may name
  // vertices declared later in the file.
  [[nodiscard]] GraphProduct parse_graph(std::string_view text);

  [[nodiscard]] std::string format_graph(GraphProduct const& product);

  [[nodiscard]] bool is_valid_name(std::string_view name) noexcept;

}  // namespace polygraph

#endif  // POLYGRAPH_GRAPH_HPP_
