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

#include "polygraph/graph.hpp"

#include <algorithm>      // for all_of, find
#include <cctype>         // for isalpha, isalnum
#include <sstream>        // for istringstream, ostringstream
#include <unordered_set>  // for unordered_set

#include "polygraph/error.hpp"  // for Error

namespace polygraph {

  bool is_valid_name(std::string_view name) noexcept {
    if (name.empty() || std::isalpha(static_cast<unsigned char>(name[0])) == 0) {
      return false;
    }
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Graph
  ////////////////////////////////////////////////////////////////////////

  Graph::Graph(std::vector<std::string> vertices, std::vector<edge_type> const& edges)
      : _names(std::move(vertices)), _adjacency(_names.size() * _names.size(), false) {
    std::unordered_set<std::string_view> seen;
    for (auto const& name : _names) {
      if (!is_valid_name(name)) {
        throw Error(ErrorCode::syntax, "invalid vertex name \"" + name + "\"");
      }
      if (!seen.insert(name).second) {
        throw Error(ErrorCode::duplicate_name, "vertex \"" + name + "\" declared twice");
      }
    }
    size_t const n = _names.size();
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) {
        throw Error(ErrorCode::undeclared_vertex, "edge endpoint out of range");
      }
      if (u == v) {
        throw Error(ErrorCode::self_loop, "edge " + _names[u] + " " + _names[v]);
      }
      _adjacency[u * n + v] = true;
      _adjacency[v * n + u] = true;
    }
  }

  std::optional<vertex_type> Graph::find_vertex(std::string_view name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      return std::nullopt;
    }
    return static_cast<vertex_type>(it - _names.begin());
  }

  vertex_type Graph::vertex(std::string_view name) const {
    auto v = find_vertex(name);
    if (!v) {
      throw Error(ErrorCode::undeclared_vertex, std::string(name));
    }
    return *v;
  }

  std::vector<Graph::edge_type> Graph::edges() const {
    std::vector<edge_type> result;
    auto const             n = static_cast<vertex_type>(_names.size());
    for (vertex_type u = 0; u < n; ++u) {
      for (vertex_type v = u + 1; v < n; ++v) {
        if (adjacent(u, v)) {
          result.emplace_back(u, v);
        }
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // ComponentSpec / GraphProduct
  ////////////////////////////////////////////////////////////////////////

  bool ComponentSpec::all_monogenic() const noexcept {
    return std::all_of(_components.begin(), _components.end(), [](auto const& c) {
      return c.kind == ComponentKind::monogenic;
    });
  }

  GraphProduct::GraphProduct(Graph graph, ComponentSpec components) {
    if (components.size() != graph.number_of_vertices()) {
      throw Error(ErrorCode::undeclared_vertex,
                  "component count does not match vertex count");
    }
    auto data = std::make_shared<Data>();
    std::unordered_set<std::string> seen;
    for (vertex_type v = 0; v < graph.number_of_vertices(); ++v) {
      auto const& c = components[v];
      data->first_letter.push_back(static_cast<letter_type>(data->letters.size()));
      std::vector<std::string> tokens;
      if (c.kind == ComponentKind::monogenic) {
        tokens.push_back(graph.vertex_name(v));
      } else {
        if (c.letters.empty()) {
          throw Error(ErrorCode::empty_letter_list, graph.vertex_name(v));
        }
        tokens = c.letters;
      }
      for (std::uint32_t i = 0; i < tokens.size(); ++i) {
        if (!is_valid_name(tokens[i])) {
          throw Error(ErrorCode::syntax, "invalid letter \"" + tokens[i] + "\"");
        }
        if (!seen.insert(tokens[i]).second) {
          throw Error(ErrorCode::duplicate_name, "letter \"" + tokens[i] + "\" declared twice");
        }
        data->letters.push_back(Letter{tokens[i], v, i});
      }
    }
    data->graph      = std::move(graph);
    data->components = std::move(components);
    _data            = std::move(data);
  }

  std::optional<letter_type> GraphProduct::find_letter(std::string_view name) const {
    auto const& ls = _data->letters;
    auto it = std::find_if(ls.begin(), ls.end(), [&](auto const& l) { return l.name == name; });
    if (it == ls.end()) {
      return std::nullopt;
    }
    return static_cast<letter_type>(it - ls.begin());
  }

  letter_type GraphProduct::letter_index(std::string_view name) const {
    auto x = find_letter(name);
    if (!x) {
      throw Error(ErrorCode::unknown_letter, std::string(name));
    }
    return *x;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string where(size_t line_number) {
      return "line " + std::to_string(line_number) + ": ";
    }

    void check_name(std::string const& name, size_t line_number) {
      if (!is_valid_name(name)) {
        throw Error(ErrorCode::syntax, where(line_number) + "invalid name \"" + name + "\"");
      }
    }
  }  // namespace

  GraphProduct parse_graph(std::string_view text) {
    std::vector<std::string> names;
    std::vector<Component>   components;
    struct PendingEdge {
      std::string u, v;
      size_t      line_number;
    };
    std::vector<PendingEdge> pending;

    std::istringstream in{std::string(text)};
    std::string        line;
    size_t             line_number = 0;
    while (std::getline(in, line)) {
      ++line_number;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream       words(line);
      std::vector<std::string> tok;
      for (std::string w; words >> w;) {
        tok.push_back(std::move(w));
      }
      if (tok.empty()) {
        continue;
      }
      if (tok[0] == "vertex") {
        if (tok.size() < 3) {
          throw Error(ErrorCode::syntax, where(line_number) + "expected vertex <name> mono|free ...");
        }
        check_name(tok[1], line_number);
        if (std::find(names.begin(), names.end(), tok[1]) != names.end()) {
          throw Error(ErrorCode::duplicate_name,
                      where(line_number) + "vertex \"" + tok[1] + "\" declared twice");
        }
        Component c;
        if (tok[2] == "mono") {
          if (tok.size() != 3) {
            throw Error(ErrorCode::syntax, where(line_number) + "mono takes no letters");
          }
          c.kind = ComponentKind::monogenic;
        } else if (tok[2] == "free") {
          c.kind = ComponentKind::free;
          if (tok.size() == 3) {
            throw Error(ErrorCode::empty_letter_list, where(line_number) + tok[1]);
          }
          for (size_t i = 3; i < tok.size(); ++i) {
            check_name(tok[i], line_number);
            c.letters.push_back(tok[i]);
          }
        } else {
          throw Error(ErrorCode::syntax, where(line_number) + "unknown component kind \"" + tok[2] + "\"");
        }
        names.push_back(tok[1]);
        components.push_back(std::move(c));
      } else if (tok[0] == "edge") {
        if (tok.size() != 3) {
          throw Error(ErrorCode::syntax, where(line_number) + "expected edge <name> <name>");
        }
        check_name(tok[1], line_number);
        check_name(tok[2], line_number);
        pending.push_back({tok[1], tok[2], line_number});
      } else {
        throw Error(ErrorCode::syntax, where(line_number) + "unknown directive \"" + tok[0] + "\"");
      }
    }

    std::vector<Graph::edge_type> edges;
    for (auto const& e : pending) {
      auto index = [&](std::string const& name) {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) {
          throw Error(ErrorCode::undeclared_vertex, where(e.line_number) + name);
        }
        return static_cast<vertex_type>(it - names.begin());
      };
      auto u = index(e.u);
      auto v = index(e.v);
      if (u == v) {
        throw Error(ErrorCode::self_loop, where(e.line_number) + e.u + " " + e.v);
      }
      edges.emplace_back(u, v);
    }
    return GraphProduct(Graph(std::move(names), edges), ComponentSpec(std::move(components)));
  }

  std::string format_graph(GraphProduct const& product) {
    std::ostringstream out;
    auto const&        g = product.graph();
    for (vertex_type v = 0; v < g.number_of_vertices(); ++v) {
      out << "vertex " << g.vertex_name(v);
      auto const& c = product.components()[v];
      if (c.kind == ComponentKind::monogenic) {
        out << " mono";
      } else {
        out << " free";
        for (auto const& l : c.letters) {
          out << ' ' << l;
        }
      }
      out << '\n';
    }
    for (auto [u, v] : g.edges()) {
      out << "edge " << g.vertex_name(u) << ' ' << g.vertex_name(v) << '\n';
    }
    return out.str();
  }

}  // namespace polygraph
