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

#ifndef POLYGRAPH_TOOLS_CHECK_HPP_
#define POLYGRAPH_TOOLS_CHECK_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <string>   // for string
#include <vector>   // for vector

#include "polygraph/graph.hpp"  // for GraphProduct

namespace polygraph::check {

  struct Options {
    std::uint64_t seed         = 20260101;
    std::size_t   max_len      = 4;  // letters per random word
    std::size_t   max_vertices = 4;  // random words use the first V vertices
    std::size_t   cases        = 200;
  };

  struct SuiteResult {
    std::string name;
    std::size_t cases  = 0;
    std::size_t failed = 0;
    std::string first_failure;

    [[nodiscard]] bool passed() const noexcept {
      return failed == 0;
    }
  };

  // Randomised property suites for one graph product, each cross-checked
  // against the brute-force oracle.  Deterministic for a fixed seed.
  [[nodiscard]] std::vector<SuiteResult> run_all(GraphProduct const& product, Options const& opts);

}  // namespace polygraph::check

#endif  // POLYGRAPH_TOOLS_CHECK_HPP_
