/* Copyright 2026 The hornalg Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <random>

#include "doctest.h"
#include "generators.h"
#include "horn/algebra.h"
#include "horn/compose.h"
#include "horn/decomposition.h"
#include "horn/error.h"
#include "oracles.h"
#include "relations.h"
#include "test_util.h"

namespace horn {
namespace {

using testing::atom;
using testing::fixture;
using testing::interp;
using testing::prog;

std::set<Atom> atoms(std::initializer_list<const char*> texts) {
  std::set<Atom> out;
  for (const char* t : texts) out.insert(atom(t));
  return out;
}

ReductionCertificate cert(const Program& target, const Program& base,
                          const Program& prefix, const Program& suffix) {
  return {target, base, prefix, suffix};
}

TEST_CASE("verify: lists and numerals reduce to each other") {
  CHECK(verify(cert(fixture("append.lp"), fixture("plus.lp"),
                    fixture("append_via_plus_prefix.lp"),
                    fixture("append_via_plus_suffix.lp")))
            .valid);
  CHECK(verify(cert(fixture("plus.lp"), fixture("append.lp"),
                    fixture("plus_via_append_prefix.lp"),
                    fixture("plus_via_append_suffix.lp")))
            .valid);
}

TEST_CASE("verify: the unlinked prefix loses the shared list element") {
  VerifyResult r = verify(cert(fixture("append.lp"), fixture("plus.lp"),
                               fixture("append_via_plus_prefix_unlinked.lp"),
                               fixture("append_via_plus_suffix.lp")));
  CHECK_FALSE(r.valid);
  CHECK(r.extra == prog("append([U|X],Y,[V|Z]) :- append(X,Y,Z)."));
  CHECK(r.missing == prog("append([U|X],Y,[U|Z]) :- append(X,Y,Z)."));
}

TEST_CASE("verify: membership through append") {
  CHECK(verify(cert(fixture("member.lp"), fixture("append.lp"),
                    fixture("member_via_append_prefix.lp"),
                    fixture("member_via_append_suffix.lp")))
            .valid);
}

TEST_CASE("verify: propositional swap examples") {
  Program p = fixture("prop_p.lp");
  Program pi = fixture("pi_ab.lp");
  std::set<Atom> hb = atoms({"a", "b", "c"});
  Program prefix = program_union(unit_restricted(atoms({"a", "b"})), prog("c."));
  Program suffix = program_difference(body_plus(interp("c."), hb),
                                      unit_restricted(atoms({"c"})));
  CHECK(suffix == prog("a :- a, c. b :- b, c."));
  CHECK(verify(cert(p, pi, prefix, suffix)).valid);

  Program r = fixture("r_ab.lp");
  CHECK(compose(pi, r) == r);
  CHECK(verify(cert(r, pi, unit_restricted(atoms({"a", "b"})), r)).valid);
}

TEST_CASE("verify: diagnostics") {
  VerifyResult r = verify(cert(fixture("append.lp"), fixture("plus.lp"),
                               fixture("append_via_plus_prefix.lp"),
                               Program{}));
  CHECK_FALSE(r.valid);
  CHECK(r.computed == prog("append([],Y,Y)."));
  CHECK(r.extra.empty());
  CHECK(r.missing == prog("append([U|X],Y,[U|Z]) :- append(X,Y,Z)."));
  std::string text = r.diagnostic();
  CHECK(text.find("missing") != std::string::npos);
  CHECK(text.find("append([V1|V2],V3,[V1|V4]) :- append(V2,V3,V4)") !=
        std::string::npos);
}

TEST_CASE("width_blocks") {
  CHECK(width_blocks(fixture("append.lp"), fixture("member.lp")));
  CHECK_FALSE(width_blocks(fixture("member.lp"), fixture("append.lp")));
  CHECK_FALSE(width_blocks(fixture("plus.lp"), fixture("plus.lp")));
}

TEST_CASE("width can grow under composition and reduction") {
  Program p = prog("p(X,Y) :- q(X), q(Y).");
  Program r = prog("q(Z) :- r(Z).");
  CHECK(width(compose(p, r)) == 2);
  CHECK(width(r) == 1);

  Program target = prog("p(X,Y) :- r(X), r(Y).");
  CHECK(verify(cert(target, r, p, prog("r(Z) :- r(Z)."))).valid);
  CHECK(width_blocks(target, r));

  // Function symbols add bound variables as well.
  CHECK(width(compose(prog("p(X) :- q(X)."), prog("q(f(Y,Z)) :- r(Y,Z)."))) ==
        2);
}

TEST_CASE("search: both directions for the swap example") {
  Program p = fixture("prop_p.lp");
  Program pi = fixture("pi_ab.lp");
  SearchResult forward = search_reduction(p, pi);
  REQUIRE(forward.status == SearchStatus::kFound);
  CHECK(verify(*forward.certificate).valid);
  SearchResult backward = search_reduction(pi, p);
  REQUIRE(backward.status == SearchStatus::kFound);
  CHECK(verify(*backward.certificate).valid);
}

TEST_CASE("search: the swap does not reduce to a one-sided program") {
  Program pi = fixture("pi_ab.lp");
  Program r = fixture("r_ab.lp");
  SearchResult no = search_reduction(pi, r);
  CHECK(no.status == SearchStatus::kNotFound);
  CHECK(no.exhaustive);
  SearchResult yes = search_reduction(r, pi);
  CHECK(yes.status == SearchStatus::kFound);

  SimilarityResult s = similar(pi, r);
  CHECK(s.verdict == Similarity::kAbove);
  CHECK(std::string(similarity_name(s.verdict)) == "R<P");
}

TEST_CASE("search: tight bounds are not exhaustive") {
  SearchBounds bounds;
  bounds.max_body = 1;
  SearchResult r = search_reduction(fixture("prop_p.lp"), fixture("pi_ab.lp"),
                                    bounds);
  CHECK(r.status == SearchStatus::kNotFound);
  CHECK_FALSE(r.exhaustive);
}

TEST_CASE("search: reflexivity and determinism") {
  testing::PropositionalGenerator g(3);
  for (int i = 0; i < 50; ++i) {
    Program p = g.program();
    SearchResult r = search_reduction(p, p);
    REQUIRE(r.status == SearchStatus::kFound);
    CHECK(verify(*r.certificate).valid);
    SearchResult again = search_reduction(p, p);
    CHECK(again.certificate == r.certificate);
  }
  Program p = fixture("prop_p.lp");
  Program unit = unit_restricted(atoms_of(p));
  CHECK(verify(cert(p, p, unit, unit)).valid);
}

TEST_CASE("search: first-order input is rejected") {
  CHECK_THROWS_AS(search_reduction(fixture("plus.lp"), fixture("append.lp")),
                  DomainError);
}

TEST_CASE("search: time budget") {
  // Twelve atoms and no reduction; the search has to walk a large tree.
  testing::PropositionalGenerator g(5, 6, {6, 3});
  Program p;
  Program r;
  for (int i = 0; i < 6; ++i) {
    p.insert(g.any_rule());
    r.insert(g.any_rule());
  }
  SearchBounds bounds;
  bounds.time_budget = std::chrono::milliseconds(0);
  SearchResult res = search_reduction(p, r, bounds);
  CHECK((res.status == SearchStatus::kTimeExceeded ||
         res.exhaustive || res.status == SearchStatus::kFound));
  if (res.status == SearchStatus::kTimeExceeded) CHECK_FALSE(res.exhaustive);
  CHECK(std::string(search_status_name(SearchStatus::kTimeExceeded)) ==
        "time-exceeded");
}

TEST_CASE("similar: similarity without logical equivalence") {
  Program p = fixture("facts_ab.lp");
  Program r = fixture("facts_ab_wide.lp");
  SimilarityResult s = similar(p, r);
  CHECK(s.verdict == Similarity::kSimilar);
  CHECK(verify(*s.forward.certificate).valid);
  CHECK(verify(*s.backward.certificate).valid);
  std::set<Atom> hb = atoms({"a", "b"});
  CHECK(compose(r, body_minus(interp("b."), hb)) == p);
  CHECK(compose(p, body_plus(interp("b."), hb)) == r);
}

TEST_CASE("similar: logical equivalence without similarity") {
  Program loop = fixture("loop_a.lp");
  SearchResult r = search_reduction(loop, Program{});
  CHECK(r.status == SearchStatus::kNotFound);
  CHECK(r.exhaustive);
  CHECK(search_reduction(Program{}, loop).status == SearchStatus::kFound);
  CHECK(similar(loop, Program{}).verdict == Similarity::kAbove);
}

TEST_CASE("similar: interpretations") {
  testing::PropositionalGenerator g(23);
  for (int i = 0; i < 50; ++i) {
    Program a = g.interpretation().to_program();
    Program b = g.interpretation().to_program();
    CHECK(similar(a, b).verdict == Similarity::kSimilar);
  }
}

TEST_CASE("adding body atoms cannot always be undone") {
  // The suffix has to keep b for the first rule and drop it for the second.
  std::set<Atom> hb = atoms({"a", "b", "c", "d"});
  Program p = prog("a :- b. c :- d.");
  Program plus = compose(p, body_plus(interp("b."), hb));
  CHECK(plus == prog("a :- b. c :- b, d."));
  SearchResult r = search_reduction(p, plus);
  CHECK(r.status == SearchStatus::kNotFound);
  CHECK(r.exhaustive);
  CHECK(search_reduction(plus, p).status == SearchStatus::kFound);
}

TEST_CASE("removing body atoms can keep the facts and still lose rules") {
  Program p = prog("a. a :- b.");
  Program minus = compose(p, body_minus(interp("b."), atoms({"a", "b"})));
  CHECK(minus == prog("a."));
  CHECK(facts(minus) == facts(p));
  SearchResult r = search_reduction(p, minus);
  CHECK(r.status == SearchStatus::kNotFound);
  CHECK(r.exhaustive);
}

TEST_CASE("property: P ≈ I exactly when P is an interpretation") {
  // Every program over two atoms with bodies of size at most two.
  std::vector<Rule> rules;
  for (const char* head : {"a", "b"}) {
    for (const char* body : {"", "a", "b", "a, b"}) {
      std::string text = std::string(head) + (*body ? " :- " : "") + body + ".";
      rules.push_back(testing::rule(text));
    }
  }
  std::vector<Program> interpretations = {prog(""), prog("a."), prog("b."),
                                          prog("a. b.")};
  for (unsigned mask = 0; mask < (1u << rules.size()); ++mask) {
    Program p;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (mask >> i & 1) p.insert(rules[i]);
    }
    bool is_interpretation = facts(p) == p;
    for (const Program& i : interpretations) {
      SimilarityResult s = similar(p, i);
      CHECK(s.forward.exhaustive == (s.forward.status == SearchStatus::kNotFound));
      CHECK((s.verdict == Similarity::kSimilar) == is_interpretation);
    }
  }
}

TEST_CASE("property: search agrees with enumerating every prefix and suffix") {
  const char* names[] = {"a", "b"};
  auto to_program = [&](const testing::BitClauses& clauses) {
    std::string text;
    for (const auto& [head, body] : clauses) {
      text += names[head];
      std::string b;
      for (unsigned a = 0; a < 2; ++a) {
        if (body >> a & 1) b += (b.empty() ? " :- " : ", ") + std::string(names[a]);
      }
      text += b + ". ";
    }
    return prog(text);
  };
  auto random_clauses = [](std::mt19937& rng) {
    testing::BitClauses out;
    for (unsigned h = 0; h < 2; ++h) {
      for (unsigned b = 0; b < 4; ++b) {
        if (rng() % 3 == 0) out.insert({h, b});
      }
    }
    return out;
  };
  std::mt19937 rng(113);
  int agreed_found = 0;
  for (int i = 0; i < 400; ++i) {
    testing::BitClauses p = random_clauses(rng);
    testing::BitClauses r = random_clauses(rng);
    bool expected = testing::reduces_by_enumeration(p, r, 2);
    SearchResult res = search_reduction(to_program(p), to_program(r));
    INFO("P = ", to_program(p), " R = ", to_program(r));
    CHECK((res.status == SearchStatus::kFound) == expected);
    if (!expected) CHECK(res.exhaustive);
    agreed_found += expected;
  }
  CHECK(agreed_found >= 20);
}

TEST_CASE("property: relation certificates") {
  for (const testing::NamedCheck& c : testing::relation_suite()) {
    testing::PropertyReport report = c.run(77, 100);
    INFO(c.name, ": ", report.counterexample);
    CHECK(report.ok());
  }
}

TEST_CASE("property: searched certificates verify") {
  testing::PropositionalGenerator g(41, 3);
  int found = 0;
  for (int i = 0; i < 400; ++i) {
    Program p = g.program();
    Program r = g.program();
    SearchResult res = search_reduction(p, r);
    CHECK(res.status != SearchStatus::kTimeExceeded);
    if (res.status == SearchStatus::kFound) {
      ++found;
      CHECK(verify(*res.certificate).valid);
      CHECK(width(p) <= width(r));
    } else {
      CHECK(res.exhaustive);
    }
  }
  CHECK(found > 0);
}

TEST_CASE("certificate text") {
  ReductionCertificate c = cert(fixture("append.lp"), fixture("plus.lp"),
                                fixture("append_via_plus_prefix.lp"),
                                fixture("append_via_plus_suffix.lp"));
  std::string text = to_string(c);
  CHECK(text.rfind("%% TARGET\n", 0) == 0);
  CHECK(parse_certificate(text) == c);
  CHECK_THROWS_AS(parse_certificate("%% TARGET\na.\n%% BASE\n%% PREFIX\n"),
                  SyntaxError);
  CHECK_THROWS_AS(
      parse_certificate("%% TARGET\n%% TARGET\n%% BASE\n%% PREFIX\n%% SUFFIX\n"),
      SyntaxError);
  try {
    parse_certificate("%% TARGET\na.\n%% BASE\nb(.\n%% PREFIX\n%% SUFFIX\n");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 4);
  }
}

}  // namespace
}  // namespace horn
