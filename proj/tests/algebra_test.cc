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

#include "doctest.h"
#include "horn/algebra.h"
#include "horn/compose.h"
#include "horn/error.h"
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

TEST_CASE("facts, proper, head and body") {
  Program nat = fixture("nat.lp");
  CHECK(facts(nat) == prog("nat(0)."));
  CHECK(proper(nat) == fixture("nat_step.lp"));
  CHECK(head_of(Program{}).empty());
  CHECK(body_of(prog("a :- b, c.")) == atoms({"b", "c"}));
  CHECK(head_of(nat) == atoms({"nat(0)", "nat(s(V1))"}));
}

TEST_CASE("dual") {
  CHECK(dual(prog("a :- b, c.")) == prog("b :- a. c :- a."));
  Program i = prog("a. b.");
  CHECK(dual(i) == i);
  CHECK(dual(fixture("append_via_plus_prefix.lp")) ==
        fixture("plus_via_append_prefix.lp"));
  CHECK(dual(fixture("append_via_plus_suffix.lp")) ==
        fixture("plus_via_append_suffix.lp"));
  Program singletons = prog("a :- b. c. d :- a.");
  CHECK(dual(dual(singletons)) == singletons);
  // Not an involution once a body has two atoms.
  CHECK(dual(dual(prog("a :- b, c."))) == prog("a :- b. a :- c."));
}

TEST_CASE("width") {
  CHECK(width(fixture("member.lp")) == 2);
  CHECK(width(fixture("append.lp")) == 3);
  CHECK(width(prog("p(a) :- q(a,b).")) == 0);
  CHECK(width(Program{}) == 0);
  CHECK(width(prog("p(X,Y).")) == 0);
  CHECK(width(prog("p(X,Y) :- p(X,Z).")) == 1);
}

TEST_CASE("herbrand base") {
  Signature nat = Signature::of(fixture("nat.lp"));
  CHECK(herbrand_base(nat, 0) == atoms({"nat(0)"}));
  CHECK(herbrand_base(nat, 2) == atoms({"nat(0)", "nat(s(0))", "nat(s(s(0)))"}));
  Signature flat = Signature::of(prog("p(a,b)."));
  CHECK(herbrand_base(flat, 0) == herbrand_base(flat, 5));
  CHECK(herbrand_base(flat, 0).size() == 4);
  Signature no_constants = Signature::of(prog("p(f(X)) :- p(X)."));
  CHECK_THROWS_AS(herbrand_base(no_constants, 1), DomainError);
}

TEST_CASE("herbrand base is monotone in depth") {
  Signature sig = Signature::of(fixture("plus.lp"));
  std::set<Atom> previous;
  for (std::size_t d = 0; d < 3; ++d) {
    std::set<Atom> hb = herbrand_base(sig, d);
    CHECK(std::includes(hb.begin(), hb.end(), previous.begin(), previous.end()));
    CHECK(hb.size() > previous.size());
    previous = hb;
  }
}

TEST_CASE("gnd") {
  Signature sig;
  sig.add(Term::constant("a"));
  sig.add(Term::constant("b"));
  CHECK(gnd(prog("p(X) :- q(X)."), sig, 0) ==
        prog("p(a) :- q(a). p(b) :- q(b)."));
  Program ground = prog("a :- b. b.");
  CHECK(gnd(ground, Signature::of(ground), 3) == ground);

  Program nat = fixture("nat.lp");
  // Oracle: instantiate X over the terms of depth <= 1 and keep instances
  // whose atoms stay within depth 2.
  Program expected = prog("nat(0). nat(s(0)) :- nat(0). nat(s(s(0))) :- nat(s(0)).");
  CHECK(gnd(nat, Signature::of(nat), 2) == expected);
}

TEST_CASE("unit programs") {
  CHECK(unit_program(Signature::of(prog("p(a)."))) == prog("p(X) :- p(X)."));
  CHECK(unit_program(Signature{}).empty());
  CHECK(unit_restricted(atoms({"a", "b"})) == prog("a :- a. b :- b."));
  CHECK(unit_restricted(Interpretation{}).empty());
  Program p = prog("a :- b. c :- d. a.");
  Interpretation i = interp("a.");
  CHECK(compose(unit_restricted(i), p) == left_reduct(p, i));
}

TEST_CASE("body editing programs") {
  std::set<Atom> hb = atoms({"a", "b", "c"});
  CHECK(body_minus(interp("b."), hb) == prog("a :- a. c :- c. b."));
  CHECK(body_plus(interp("b."), hb) ==
        prog("a :- a, b. b :- b. c :- c, b."));
  CHECK(compose(prog("a. b :- a, b."), body_minus(interp("b."), hb)) ==
        prog("a. b :- a."));
  CHECK(compose(prog("a. b :- a."), body_plus(interp("b."), hb)) ==
        prog("a. b :- a, b."));
  Program p = prog("a :- b, c. c.");
  CHECK(compose(p, body_minus(Interpretation{}, hb)) == p);
  CHECK(compose(p, body_plus(Interpretation{}, hb)) == p);
  CHECK_THROWS_AS(body_minus(interp("d."), hb), DomainError);
  CHECK_THROWS_AS(body_plus(interp("d."), hb), DomainError);
}

TEST_CASE("removing added atoms restores the program only for fresh atoms") {
  std::set<Atom> hb = atoms({"a", "b", "c"});
  Interpretation c = interp("c.");
  Program p = prog("a. b :- a.");
  CHECK(compose(compose(p, body_plus(c, hb)), body_minus(c, hb)) == p);
  // b already occurs in a body, so adding and then removing it loses it.
  Interpretation b = interp("b.");
  Program q = prog("a :- b.");
  CHECK(compose(compose(q, body_plus(b, hb)), body_minus(b, hb)) ==
        prog("a."));
}

TEST_CASE("pi example built from the unit") {
  Program p = fixture("prop_p.lp");
  std::set<Atom> hb = atoms({"a", "b", "c"});
  Program unit_ab = unit_restricted(atoms({"a", "b"}));
  CHECK(compose(compose(unit_ab, p), body_minus(interp("c."), hb)) ==
        fixture("pi_ab.lp"));
}

TEST_CASE("reducts") {
  Program p = prog("a :- b. c :- d.");
  CHECK(left_reduct(p, interp("a.")) == prog("a :- b."));
  CHECK(right_reduct(p, interp("b.")) == prog("a :- b."));
  CHECK(right_reduct(prog("a. b :- c."), Interpretation{}) == prog("a."));
  CHECK_THROWS_AS(left_reduct(prog("p(X) :- q(X)."), interp("a.")),
                  NotGroundError);
}

}  // namespace
}  // namespace horn
