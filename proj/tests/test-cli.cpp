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

#include <sstream>  // for ostringstream
#include <string>   // for string
#include <vector>   // for vector

#include "catch_amalgamated.hpp"  // for TEST_CASE, REQUIRE
#include "cli.hpp"                // for run
#include "json.hpp"               // for json

namespace polygraph {

  namespace {
    struct Result {
      int         status;
      std::string out;
      std::string err;
    };

    Result run(std::string const& graph, std::vector<std::string> args) {
      args.insert(args.begin(), {"--graph", std::string(POLYGRAPH_GRAPHS) + "/" + graph + ".graph"});
      std::ostringstream out, err;
      int                status = cli::run(args, out, err);
      return {status, out.str(), err.str()};
    }

    std::string line(std::string const& graph, std::vector<std::string> args) {
      auto r = run(graph, std::move(args));
      REQUIRE(r.status == 0);
      return r.out;
    }
  }  // namespace

  TEST_CASE("cli: word commands", "[cli]") {
    REQUIRE(line("path3", {"nf", "x2 x1"}) == "x1 x2\n");
    REQUIRE(line("path3", {"eq", "x2 x1", "x1 x2"}) == "true\n");
    REQUIRE(line("path3", {"eq", "x3 x1", "x1 x3"}) == "false\n");
    REQUIRE(line("path3", {"mul", "x1", "x2", "x1"}) == "x1^2 x2\n");
    REQUIRE(line("path3", {"divide", "x1 x2", "x2"}) == "x1\n");
    REQUIRE(line("path3", {"final", "x1", "x3 x1"}) == "x1 | x3\n");
    REQUIRE(line("path3", {"initial", "x1", "x3 x1"}) == "1 | x3 x1\n");
    REQUIRE(line("path3", {"lclm", "x1", "x2"}) == "x2 | x1 | x1 x2\n");
    REQUIRE(line("path3", {"hclf", "x2 x1", "x2 x3"}) == "x2\n");
    REQUIRE(line("mixed", {"nf", "w p q w"}) == "p q w^2\n");
  }

  TEST_CASE("cli: none exits 1", "[cli]") {
    auto r = run("path3", {"divide", "x1 x3", "x1"});
    REQUIRE(r.status == 1);
    REQUIRE(r.out == "none\n");
    r = run("path3", {"lclm", "x1", "x3"});
    REQUIRE(r.status == 1);
    REQUIRE(r.out == "none\n");
  }

  TEST_CASE("cli: inverse hull commands", "[cli]") {
    REQUIRE(line("path3", {"ih", "mul", "[1|x1]", "[x3|1]"}) == "0\n");
    REQUIRE(line("path3", {"ih", "mul", "[1|x1]", "[x2|1]"}) == "[x2 | x1]\n");
    REQUIRE(line("path3", {"ih", "inv", "[x1 | x2]"}) == "[x2 | x1]\n");
    REQUIRE(line("path3", {"ih", "le", "[x2 x1 | x2 x3]", "[x1 | x3]"}) == "true\n");
    REQUIRE(line("path3", {"ih", "max", "[x2 x1 | x2 x3]"}) == "[x1 | x3]\n");
    REQUIRE(line("path3", {"ih", "idem", "[x1 | x1]"}) == "true\n");
    REQUIRE(line("path3", {"ih", "green", "[x1 | x2]", "[x3 | x2]"})
            == "L=true R=false H=false D=true\n");
    REQUIRE(line("path3", {"eval", "x1 x2^-1"}) == "[x2 | x1]\n");
    auto r = run("path3", {"ih", "max", "0"});
    REQUIRE(r.status == 1);
    REQUIRE(r.err.find("ZeroInput") != std::string::npos);
  }

  TEST_CASE("cli: group commands", "[cli]") {
    REQUIRE(line("path3", {"group", "nf", "x1 x2 x1^-1"}) == "x2\n");
    REQUIRE(line("path3", {"group", "eta", "[x2 | x1]"}) == "x1 x2^-1\n");
    REQUIRE(line("path3", {"group", "eta", "0"}) == "0\n");
    auto r = run("mixed", {"group", "nf", "w"});
    REQUIRE(r.status == 1);
  }

  TEST_CASE("cli: present and graph", "[cli]") {
    REQUIRE(line("single", {"present"}) == "x x^-1 = 1\n");
    auto g = line("path3", {"graph"});
    REQUIRE(g.find("edge x1 x2") != std::string::npos);
  }

  TEST_CASE("cli: check is deterministic", "[cli]") {
    auto a = run("path3", {"check", "--seed", "5", "--max-len", "3"});
    auto b = run("path3", {"check", "--seed", "5", "--max-len", "3"});
    REQUIRE(a.status == 0);
    REQUIRE(a.out == b.out);
    REQUIRE(a.out.ends_with("all suites passed\n"));
  }

  TEST_CASE("cli: json envelope", "[cli]") {
    auto r = run("path3", {"--format", "json", "lclm", "x1", "x2"});
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["result"] == "x2 | x1 | x1 x2");
    REQUIRE(j["status"] == "ok");
    r = run("path3", {"--format", "json", "lclm", "x1", "x3"});
    REQUIRE(r.status == 1);
    REQUIRE(nlohmann::json::parse(r.out)["status"] == "none");
    r = run("path3", {"--format", "json", "nf", "x9"});
    REQUIRE(r.status == 2);
    j = nlohmann::json::parse(r.out);
    REQUIRE(j["status"] == "error");
    REQUIRE(j["result"].is_null());
  }

  TEST_CASE("cli: usage errors exit 2", "[cli]") {
    REQUIRE(run("path3", {"nf", "x1^0"}).status == 2);
    REQUIRE(run("path3", {"frobnicate"}).status == 2);
    REQUIRE(run("path3", {}).status == 2);
    REQUIRE(run("path3", {"ih", "mul", "[x1"}).status == 2);
    REQUIRE(run("nonexistent", {"nf", "x1"}).status == 2);
    std::ostringstream out, err;
    REQUIRE(cli::run({"nf", "x1"}, out, err) == 2);
  }

}  // namespace polygraph
