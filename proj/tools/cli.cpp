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

#include "cli.hpp"

#include <fstream>     // for ifstream
#include <functional>  // for function
#include <optional>    // for optional
#include <ostream>     // for ostream
#include <sstream>     // for ostringstream
#include <string>      // for string
#include <vector>      // for vector

#include "CLI11.hpp"  // for App
#include "json.hpp"   // for json

#include "check.hpp"                // for run_all
#include "polygraph/error.hpp"      // for Error
#include "polygraph/gproduct.hpp"   // for Element
#include "polygraph/graph.hpp"      // for GraphProduct
#include "polygraph/ihull.hpp"      // for IHElement
#include "polygraph/ragroup.hpp"    // for group_reduce

namespace polygraph::cli {

  namespace {

    using json = nlohmann::json;

    struct Outcome {
      ExitStatus  status = ok;
      std::string text;
      json        result;
      std::string detail;
    };

    Outcome value(std::string s) {
      Outcome o;
      o.result = s;
      o.text   = std::move(s);
      return o;
    }

    Outcome boolean(bool b) {
      Outcome o;
      o.result = b;
      o.text   = b ? "true" : "false";
      return o;
    }

    Outcome none(std::string detail) {
      Outcome o;
      o.status = domain_error;
      o.text   = "none";
      o.result = "none";
      o.detail = std::move(detail);
      return o;
    }

    bool is_usage(ErrorCode c) {
      switch (c) {
        case ErrorCode::zero_input:
        case ErrorCode::not_reduced:
        case ErrorCode::bound_exceeded:
        case ErrorCode::free_component_unsupported:
          return false;
        default:
          return true;
      }
    }

    std::string split_text(GraphProduct const& p, ComponentSplit const& s) {
      return to_string(p, s.component) + " | " + to_string(s.complement);
    }

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw std::runtime_error("cannot read graph file '" + path + "'");
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    void emit(std::ostream& out, std::string const& format, Outcome const& o) {
      if (format == "json") {
        json env;
        env["result"] = o.result;
        env["status"] = o.status == ok ? "ok" : "none";
        env["detail"] = o.detail;
        out << env.dump() << '\n';
      } else {
        out << o.text << '\n';
      }
    }

    void emit_error(std::ostream& out,
                    std::ostream& err,
                    std::string const& format,
                    std::string const& message) {
      if (format == "json") {
        json env;
        env["result"] = nullptr;
        env["status"] = "error";
        env["detail"] = message;
        out << env.dump() << '\n';
      } else {
        err << "error: " << message << '\n';
      }
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    using Action = std::function<Outcome(GraphProduct const&)>;

    CLI::App app{"Graph products of left LCM monoids, their inverse hulls and graph groups",
                 "polygraph"};
    app.require_subcommand(1);
    std::string format = "text";
    std::string graph_path;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("-g,--graph", graph_path, "Graph file")->required();

    Action      action;
    std::string w1, w2;
    std::vector<std::string> many;

    auto two = [&](CLI::App* sub, char const* a, char const* b) {
      sub->add_option(a, w1)->required();
      sub->add_option(b, w2)->required();
    };

    auto* nf = app.add_subcommand("nf", "Normal form of a word");
    nf->add_option("word", w1)->required();
    nf->callback([&] {
      action = [&](GraphProduct const& p) { return value(to_string(make_element(p, w1))); };
    });

    auto* eq = app.add_subcommand("eq", "Equality of two words");
    two(eq, "w1", "w2");
    eq->callback([&] {
      action = [&](GraphProduct const& p) {
        return boolean(make_element(p, w1) == make_element(p, w2));
      };
    });

    auto* mul = app.add_subcommand("mul", "Product of words");
    mul->add_option("words", many)->required();
    mul->callback([&] {
      action = [&](GraphProduct const& p) {
        Element r(p);
        for (auto const& w : many) {
          r = r * make_element(p, w);
        }
        return value(to_string(r));
      };
    });

    auto* divide = app.add_subcommand("divide", "q with a = q c, or none");
    two(divide, "a", "c");
    divide->callback([&] {
      action = [&](GraphProduct const& p) {
        auto q = right_divide(make_element(p, w1), make_element(p, w2));
        return q ? value(to_string(*q)) : none("not right divisible");
      };
    });

    auto* final_ = app.add_subcommand("final", "Final v-component: 'd | complement'");
    two(final_, "vertex", "word");
    final_->callback([&] {
      action = [&](GraphProduct const& p) {
        auto v = p.graph().vertex(w1);
        return value(split_text(p, final_component(make_element(p, w2), v)));
      };
    });

    auto* initial = app.add_subcommand("initial", "Initial v-component: 'd | complement'");
    two(initial, "vertex", "word");
    initial->callback([&] {
      action = [&](GraphProduct const& p) {
        auto v = p.graph().vertex(w1);
        return value(split_text(p, initial_component(make_element(p, w2), v)));
      };
    });

    auto* lclm_ = app.add_subcommand("lclm", "Least common left multiple: 's | t | m', or none");
    two(lclm_, "b", "c");
    lclm_->callback([&] {
      action = [&](GraphProduct const& p) {
        auto r = lclm(make_element(p, w1), make_element(p, w2));
        if (!r) {
          return none("no common left multiple");
        }
        return value(to_string(r->s) + " | " + to_string(r->t) + " | " + to_string(r->m));
      };
    });

    auto* hclf_ = app.add_subcommand("hclf", "Highest common left factor");
    two(hclf_, "a", "b");
    hclf_->callback([&] {
      action = [&](GraphProduct const& p) {
        return value(to_string(hclf(make_element(p, w1), make_element(p, w2))));
      };
    });

    auto* ih = app.add_subcommand("ih", "Inverse hull arithmetic on elements '[a | b]' or '0'");
    ih->require_subcommand(1);

    auto* ih_mul = ih->add_subcommand("mul", "Product of elements");
    ih_mul->add_option("elements", many)->required();
    ih_mul->callback([&] {
      action = [&](GraphProduct const& p) {
        auto r = IHElement::identity(p);
        for (auto const& s : many) {
          r = r * parse_ih_element(p, s);
        }
        return value(to_string(r));
      };
    });

    auto* ih_inv = ih->add_subcommand("inv", "Inverse");
    ih_inv->add_option("element", w1)->required();
    ih_inv->callback([&] {
      action = [&](GraphProduct const& p) {
        return value(to_string(ih_inverse(parse_ih_element(p, w1))));
      };
    });

    auto* ih_le = ih->add_subcommand("le", "Natural partial order s <= t");
    two(ih_le, "s", "t");
    ih_le->callback([&] {
      action = [&](GraphProduct const& p) {
        return boolean(natural_le(parse_ih_element(p, w1), parse_ih_element(p, w2)));
      };
    });

    auto* ih_max = ih->add_subcommand("max", "Maximum element above a nonzero element");
    ih_max->add_option("element", w1)->required();
    ih_max->callback([&] {
      action = [&](GraphProduct const& p) {
        return value(to_string(max_above(parse_ih_element(p, w1))));
      };
    });

    auto* ih_idem = ih->add_subcommand("idem", "Idempotency test");
    ih_idem->add_option("element", w1)->required();
    ih_idem->callback([&] {
      action = [&](GraphProduct const& p) { return boolean(is_idempotent(parse_ih_element(p, w1))); };
    });

    auto* ih_green = ih->add_subcommand("green", "Green's relations between two elements");
    two(ih_green, "s", "t");
    ih_green->callback([&] {
      action = [&](GraphProduct const& p) {
        auto s = parse_ih_element(p, w1);
        auto t = parse_ih_element(p, w2);
        bool L = green_L(s, t), R = green_R(s, t), H = green_H(s, t);
        bool D = s.is_zero() == t.is_zero();
        Outcome o;
        o.result = {{"L", L}, {"R", R}, {"H", H}, {"D", D}};
        auto tf  = [](bool b) { return b ? "true" : "false"; };
        o.text   = std::string("L=") + tf(L) + " R=" + tf(R) + " H=" + tf(H) + " D=" + tf(D);
        return o;
      };
    });

    auto* eval = app.add_subcommand("eval", "Evaluate a word over x and x^-1");
    eval->add_option("word", w1)->required();
    eval->callback([&] {
      action = [&](GraphProduct const& p) { return value(to_string(eval_word(p, w1))); };
    });

    auto* group = app.add_subcommand("group", "Graph group");
    group->require_subcommand(1);
    auto* group_nf = group->add_subcommand("nf", "Reduced form of a signed word");
    group_nf->add_option("word", w1)->required();
    group_nf->callback([&] {
      action = [&](GraphProduct const& p) {
        return value(to_string(p, group_reduce(p, parse_signed_word(p, w1))));
      };
    });
    auto* group_eta = group->add_subcommand("eta", "Image of an inverse hull element");
    group_eta->add_option("element", w1)->required();
    group_eta->callback([&] {
      action = [&](GraphProduct const& p) {
        return value(to_string(p, eta(parse_ih_element(p, w1))));
      };
    });

    auto* present = app.add_subcommand("present", "Defining relations of the inverse hull");
    present->callback([&] {
      action = [&](GraphProduct const& p) {
        Outcome o;
        o.result = json::array();
        for (auto const& r : generate_presentation(p)) {
          auto line = to_string(p, r);
          o.result.push_back(line);
          o.text += (o.text.empty() ? "" : "\n") + line;
        }
        return o;
      };
    });

    auto* graph = app.add_subcommand("graph", "Print the graph in canonical form");
    graph->callback([&] {
      action = [&](GraphProduct const& p) {
        auto s = format_graph(p);
        while (!s.empty() && s.back() == '\n') {
          s.pop_back();
        }
        return value(s);
      };
    });

    check::Options opts;
    auto*          chk = app.add_subcommand("check", "Randomised property suites against the oracle");
    chk->add_option("--seed", opts.seed, "Random seed")->capture_default_str();
    chk->add_option("--max-len", opts.max_len, "Letters per random word")->capture_default_str();
    chk->add_option("--max-vertices", opts.max_vertices, "Vertices used by random words")
        ->capture_default_str();
    chk->add_option("--cases", opts.cases, "Cases per suite")->capture_default_str();
    chk->callback([&] {
      action = [&](GraphProduct const& p) {
        Outcome     o;
        std::size_t failed = 0;
        o.result           = json::array();
        std::ostringstream ss;
        for (auto const& s : check::run_all(p, opts)) {
          o.result.push_back({{"suite", s.name},
                              {"cases", s.cases},
                              {"failed", s.failed},
                              {"first_failure", s.first_failure}});
          if (s.passed()) {
            ss << "PASS " << s.name << " (" << s.cases << " checks)\n";
          } else {
            ++failed;
            ss << "FAIL " << s.name << " (" << s.failed << " of " << s.cases
               << " checks failed): " << s.first_failure << '\n';
          }
        }
        ss << (failed == 0 ? "all suites passed" : std::to_string(failed) + " suite(s) failed");
        o.text = ss.str();
        if (failed != 0) {
          o.status = domain_error;
          o.detail = std::to_string(failed) + " suite(s) failed";
        }
        return o;
      };
    });

    try {
      // CLI11 reads "[...]" as a list literal; a leading space disarms that
      // and is trimmed again by the element parser.
      std::vector<std::string> reversed;
      for (auto it = args.rbegin(); it != args.rend(); ++it) {
        reversed.push_back(!it->empty() && it->front() == '[' ? " " + *it : *it);
      }
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return usage_error;
    }

    std::optional<GraphProduct> product;
    try {
      product = parse_graph(read_file(graph_path));
    } catch (Error const& e) {
      emit_error(out, err, format, graph_path + ": " + e.what());
      return usage_error;
    } catch (std::runtime_error const& e) {
      emit_error(out, err, format, e.what());
      return usage_error;
    }

    try {
      auto o = action(*product);
      emit(out, format, o);
      return o.status;
    } catch (Error const& e) {
      emit_error(out, err, format, e.what());
      return is_usage(e.code()) ? usage_error : domain_error;
    }
  }

}  // namespace polygraph::cli
