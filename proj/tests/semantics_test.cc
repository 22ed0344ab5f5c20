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
#include "generators.h"
#include "horn/compose.h"
#include "horn/error.h"
#include "horn/semantics.h"
#include "oracles.h"
#include "test_util.h"

namespace horn {
namespace {

using testing::atom;
using testing::interp;
using testing::prog;
using testing::rule;

TEST_CASE("entails") {
  CHECK(entails(interp("a."), atom("a")));
  CHECK_FALSE(entails(interp("b."), rule("a :- b.")));
  CHECK(entails(interp("a. b."), rule("a :- b.")));
  CHECK(entails(Interpretation{}, prog("a :- b. b :- c, a.")));
  CHECK_FALSE(entails(Interpretation{}, prog("a.")));
  CHECK(entails(interp("a."), std::set<Atom>{}));
  CHECK_THROWS_AS(entails(interp("a."), atom("p(X)")), NotGroundError);
}

TEST_CASE("tp") {
  CHECK(tp(prog("a. b :- a."), Interpretation{}) == interp("a."));
  CHECK(tp(Program{}, interp("a.")).empty());
  CHECK(tp(prog("a. b :- a."), interp("a.")) == interp("a. b."));
  CHECK_THROWS_AS(tp(prog("p(X)."), Interpretation{}), NotGroundError);
}

TEST_CASE("least model") {
  CHECK(least_model(prog("a. b :- a. c :- d.")) == interp("a. b."));
  CHECK(least_model(Program{}).empty());
  CHECK(least_model(prog("a :- a.")).empty());
  CHECK(least_model(prog("p(s(0)) :- p(0). p(0).")) ==
        interp("p(0). p(s(0))."));
}

TEST_CASE("logical equivalence") {
  CHECK(logically_equivalent(Program{}, prog("a :- a.")));
  CHECK_FALSE(logically_equivalent(prog("a. b :- a."), prog("a. b :- a, b.")));
  Program p = prog("a. c :- a, b.");
  CHECK(logically_equivalent(p, p));
}

TEST_CASE("property: models are prefixed points of T_P") {
  testing::PropositionalGenerator g(31);
  for (int i = 0; i < 500; ++i) {
    Program p = g.program();
    Interpretation m = g.interpretation();
    CHECK(entails(m, p) == m.includes(tp(p, m)));
  }
}

TEST_CASE("property: least model agrees with model enumeration") {
  testing::PropositionalGenerator g(37);
  for (int i = 0; i < 500; ++i) {
    Program p = g.program();
    Interpretation lm = least_model(p);
    CHECK(lm.atoms() == testing::least_model_by_enumeration(p));
    CHECK(entails(lm, p));
  }
}

}  // namespace
}  // namespace horn
