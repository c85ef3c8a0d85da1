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

#include "check.hpp"

#include <algorithm>  // for min, find
#include <functional> // for function
#include <random>     // for mt19937_64, uniform_int_distribution

#include "polygraph/gproduct.hpp"  // for Element
#include "polygraph/ihull.hpp"     // for IHElement
#include "polygraph/oracle.hpp"    // for oracle
#include "polygraph/ragroup.hpp"   // for eta

namespace polygraph::check {

  namespace {

    class Sampler {
     public:
      Sampler(GraphProduct const& product, Options const& opts)
          : _product(product), _rng(opts.seed), _max_len(std::max<std::size_t>(opts.max_len, 1)) {
        auto const vs = std::min(opts.max_vertices, product.number_of_vertices());
        for (letter_type x = 0; x < product.number_of_letters(); ++x) {
          if (product.letter(x).vertex < vs) {
            _letters.push_back(x);
          }
        }
      }

      std::size_t uniform(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(_rng);
      }

      std::vector<Token> word(std::size_t min_len = 0) {
        std::vector<Token> w;
        if (_letters.empty()) {
          return w;
        }
        auto const n = uniform(min_len, _max_len);
        for (std::size_t i = 0; i < n; ++i) {
          w.push_back(Token{_letters[uniform(0, _letters.size() - 1)], 1});
        }
        return w;
      }

      Element element(std::size_t min_len = 0) {
        auto w = word(min_len);
        return make_element(_product, w);
      }

      IHElement pair() {
        return IHElement(element(), element());
      }

     private:
      GraphProduct             _product;
      std::mt19937_64          _rng;
      std::size_t              _max_len;
      std::vector<letter_type> _letters;
    };

    struct Recorder {
      explicit Recorder(std::string name) {
        result.name = std::move(name);
      }

      SuiteResult result;

      void expect(bool ok, std::function<std::string()> const& describe) {
        ++result.cases;
        if (!ok) {
          if (result.failed++ == 0) {
            result.first_failure = describe();
          }
        }
      }
    };

    oracle::Letters letters(Element const& a) {
      return oracle::letters_of(a);
    }

    SuiteResult normal_form_suite(GraphProduct const& product, Options const& opts) {
      Recorder r("normal-form");
      Sampler  sample(product, opts);
      for (std::size_t i = 0; i < opts.cases; ++i) {
        auto       w = sample.word();
        Expression raw;
        for (auto const& t : w) {
          auto const& l = product.letter(t.letter);
          raw.push_back(product.kind(l.vertex) == ComponentKind::monogenic
                            ? ComponentElement::power(l.vertex, 1)
                            : ComponentElement::word(l.vertex, {l.local}));
        }
        auto a     = normal_form(product, raw);
        auto again = normal_form(product, a.components());
        r.expect(a == again, [&] { return "not idempotent on " + to_string(a); });
        auto forms = oracle::reduced_forms(product, raw);
        r.expect(std::find(forms.begin(), forms.end(), a.components()) != forms.end(),
                 [&] { return "normal form outside the rewrite closure: " + to_string(a); });

        auto b          = sample.element();
        auto forms_b    = oracle::reduced_forms(product, b.components());
        bool same_class = forms == forms_b;
        r.expect(same_class == (a == b),
                 [&] { return "equality mismatch: " + to_string(a) + " vs " + to_string(b); });
      }
      return r.result;
    }

    SuiteResult cancellation_suite(GraphProduct const& product, Options const& opts) {
      Recorder r("cancellation");
      Sampler  sample(product, opts);
      for (std::size_t i = 0; i < opts.cases; ++i) {
        auto a = sample.element();
        auto c = sample.element();
        auto q = right_divide(a * c, c);
        r.expect(q && *q == a, [&] { return "right: a=" + to_string(a) + " c=" + to_string(c); });
        auto p = left_divide(c * a, c);
        r.expect(p && *p == a, [&] { return "left: a=" + to_string(a) + " c=" + to_string(c); });
        auto d = right_divide(a, c);
        bool oracle_divides = oracle::right_quotient(product, letters(a), letters(c)).has_value();
        r.expect(d.has_value() == oracle_divides,
                 [&] { return "divisibility: a=" + to_string(a) + " c=" + to_string(c); });
      }
      return r.result;
    }

    SuiteResult final_component_suite(GraphProduct const& product, Options const& opts) {
      Recorder r("final-component");
      Sampler  sample(product, opts);
      for (std::size_t i = 0; i < opts.cases; ++i) {
        auto a = sample.element();
        auto v = static_cast<vertex_type>(sample.uniform(0, product.number_of_vertices() - 1));
        auto expected = final_component(a, v);
        for (auto const& e : oracle::shuffle_class(product, a.components())) {
          auto got = final_component(product, e, v);
          r.expect(got.component == expected.component && got.complement == expected.complement,
                   [&] { return "depends on the shuffle: " + to_string(a); });
        }
        r.expect(
            (expected.component.is_identity() ? expected.complement
                                              : expected.complement
                                                    * component_embed(product, expected.component))
                == a,
            [&] { return "a != a' d for " + to_string(a); });
        auto const x = product.kind(v) == ComponentKind::monogenic
                           ? ComponentElement::power(v, sample.uniform(1, 3))
                           : ComponentElement::word(v, {static_cast<std::uint32_t>(sample.uniform(
                                                           0, product.alphabet_size(v) - 1))});
        auto ext = final_component(a * component_embed(product, x), v);
        auto dx  = component::multiply(expected.component, x);
        r.expect(ext.component == dx && ext.complement == expected.complement,
                 [&] { return "d x law fails for " + to_string(a); });
      }
      return r.result;
    }

    SuiteResult lclm_suite(GraphProduct const& product, Options const& opts) {
      Recorder r("lclm");
      Sampler  sample(product, opts);
      for (std::size_t i = 0; i < opts.cases; ++i) {
        auto b      = sample.element();
        auto c      = sample.element();
        auto fast   = lclm(b, c);
        auto search = oracle::lclm_search(product, letters(b), letters(c),
                                          b.letter_length() + c.letter_length());
        auto describe = [&] { return "b=" + to_string(b) + " c=" + to_string(c); };
        r.expect(fast.has_value() == (search.verdict == oracle::Verdict::principal), describe);
        if (fast) {
          r.expect(fast->m == fast->s * b && fast->m == fast->t * c, describe);
          for (auto const& m : search.multiples) {
            r.expect(oracle::right_quotient(product, m, letters(fast->m)).has_value(), describe);
          }
        }
      }
      return r.result;
    }

    SuiteResult hclf_suite(GraphProduct const& product, Options const& opts) {
      Recorder r("hclf");
      Sampler  sample(product, opts);
      for (std::size_t i = 0; i < opts.cases; ++i) {
        auto prefix = sample.element();
        auto a      = prefix * sample.element();
        auto b      = prefix * sample.element();
        auto x      = hclf(a, b);
        auto o      = oracle::hclf_oracle(product, letters(a), letters(b));
        r.expect(o && oracle::equal(product, *o, letters(x)),
                 [&] { return "a=" + to_string(a) + " b=" + to_string(b); });
      }
      return r.result;
    }

    SuiteResult inverse_hull_suite(GraphProduct const& product, Options const& opts) {
      Recorder r("inverse-hull");
      Sampler  sample(product, opts);
      auto     zero = IHElement::zero(product);
      for (std::size_t i = 0; i < opts.cases; ++i) {
        auto s        = sample.pair();
        auto t        = sample.pair();
        auto si       = ih_inverse(s);
        auto ti       = ih_inverse(t);
        auto describe = [&] { return "s=" + to_string(s) + " t=" + to_string(t); };
        r.expect(s * si * s == s, describe);
        r.expect(ih_inverse(si) == s, describe);
        r.expect(ih_inverse(s * t) == ti * si, describe);
        auto e = s * si;
        auto f = t * ti;
        r.expect(e * f == f * e, describe);
        r.expect(is_idempotent(s) == (s * s == s), describe);
        r.expect(natural_le(s, t) == (s == e * t), describe);
        r.expect(green_L(s, t) == (si * s == ti * t), describe);
        r.expect(green_R(s, t) == (e == f), describe);
        auto st = s * t;
        if (!(st == zero)) {
          auto m = max_above(st);
          auto o = oracle::maximum_above(product, {letters(st.left()), letters(st.right())});
          r.expect(o && oracle::equal(product, o->first, letters(m.left()))
                       && oracle::equal(product, o->second, letters(m.right())),
                   describe);
          r.expect(natural_le(st, m), describe);
        }
      }
      return r.result;
    }

    SuiteResult presentation_suite(GraphProduct const& product, Options const&) {
      Recorder r("presentation");
      auto     report = check_relations(product);
      for (auto const& rel : generate_presentation(product)) {
        (void) rel;
        ++r.result.cases;
      }
      if (!report.ok()) {
        r.result.failed        = report.violations.size();
        auto const& v          = report.violations.front();
        r.result.first_failure = to_string(product, v.relation) + " evaluates to "
                                 + to_string(v.left) + " vs " + to_string(v.right);
      }
      return r.result;
    }

    SuiteResult eta_suite(GraphProduct const& product, Options const& opts) {
      Recorder r("eta");
      Sampler  sample(product, opts);
      r.expect(!eta(IHElement::zero(product)).has_value(), [] { return "eta(0) != 0"; });
      for (std::size_t i = 0; i < opts.cases; ++i) {
        auto s        = sample.pair();
        auto t        = sample.pair();
        auto describe = [&] { return "s=" + to_string(s) + " t=" + to_string(t); };
        auto es       = eta(s);
        r.expect(es.has_value() && (es->is_identity() == is_idempotent(s)), describe);
        auto st = s * t;
        if (!st.is_zero()) {
          auto lhs = eta(st);
          auto rhs = group_multiply(product, *eta(s), *eta(t));
          r.expect(lhs.has_value() && *lhs == rhs, describe);
        }
        // w w⁻¹ reduces to the identity
        std::vector<SignedLetter> w;
        for (auto const& tok : sample.word()) {
          w.push_back({product.letter(tok.letter).vertex, sample.uniform(0, 1) == 1});
        }
        auto g = group_reduce(product, w);
        r.expect(group_multiply(product, g, group_inverse(product, g)).is_identity(), describe);
        r.expect(group_reduce(product, g.letters()) == g, describe);
      }
      return r.result;
    }

  }  // namespace

  std::vector<SuiteResult> run_all(GraphProduct const& product, Options const& opts) {
    using Suite = SuiteResult (*)(GraphProduct const&, Options const&);
    std::vector<Suite> suites{normal_form_suite, cancellation_suite, final_component_suite,
                              lclm_suite,        hclf_suite,         inverse_hull_suite,
                              presentation_suite};
    if (product.all_monogenic()) {
      suites.push_back(eta_suite);
    }
    std::vector<SuiteResult> results;
    for (std::size_t i = 0; i < suites.size(); ++i) {
      // Each suite gets its own stream so adding a suite does not perturb
      // the others.
      Options o = opts;
      o.seed    = opts.seed + i;
      results.push_back(suites[i](product, o));
    }
    return results;
  }

}  // namespace polygraph::check
