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

#include "horn/program.h"

#include <algorithm>

#include "horn/error.h"

namespace horn {

Program::Program(std::initializer_list<Rule> rules) {
  for (const Rule& r : rules) insert(r);
}

Program::Program(const std::vector<Rule>& rules) {
  for (const Rule& r : rules) insert(r);
}

bool Program::insert(const Rule& r) {
  Rule c = canonicalize(r);
  if (!index_.insert(c).second) return false;
  rules_.push_back(std::move(c));
  return true;
}

void Program::insert_all(const Program& p) {
  for (const Rule& r : p.rules_) {
    if (index_.insert(r).second) rules_.push_back(r);
  }
}

bool Program::contains(const Rule& r) const {
  return index_.contains(canonicalize(r));
}

bool Program::is_ground() const {
  return std::all_of(rules_.begin(), rules_.end(),
                     [](const Rule& r) { return r.is_ground(); });
}

bool Program::is_propositional() const {
  auto prop = [](const Atom& a) { return a.is_propositional(); };
  return std::all_of(rules_.begin(), rules_.end(), [&](const Rule& r) {
    return prop(r.head()) && std::all_of(r.body().begin(), r.body().end(), prop);
  });
}

Program program_union(const Program& a, const Program& b) {
  Program out = a;
  out.insert_all(b);
  return out;
}

Program program_difference(const Program& a, const Program& b) {
  Program out;
  for (const Rule& r : a) {
    if (!b.sorted().contains(r)) out.insert(r);
  }
  return out;
}

bool is_subset(const Program& a, const Program& b) {
  return std::includes(b.sorted().begin(), b.sorted().end(),
                       a.sorted().begin(), a.sorted().end());
}

Interpretation::Interpretation(std::initializer_list<Atom> atoms) {
  for (const Atom& a : atoms) insert(a);
}

Interpretation::Interpretation(const std::set<Atom>& atoms) {
  for (const Atom& a : atoms) insert(a);
}

void Interpretation::insert(const Atom& a) {
  if (!a.is_ground()) {
    throw NotGroundError("interpretations contain ground atoms only");
  }
  atoms_.insert(a);
}

bool Interpretation::includes(const Interpretation& other) const {
  return std::includes(atoms_.begin(), atoms_.end(), other.atoms_.begin(),
                       other.atoms_.end());
}

Program Interpretation::to_program() const {
  Program p;
  for (const Atom& a : atoms_) p.insert(Rule(a));
  return p;
}

std::optional<Interpretation> as_interpretation(const Program& p) {
  Interpretation out;
  for (const Rule& r : p) {
    if (!r.is_fact() || !r.is_ground()) return std::nullopt;
    out.insert(r.head());
  }
  return out;
}

void Signature::add(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVariable:
      return;
    case Term::Kind::kConstant:
      constants.insert(t.name());
      return;
    case Term::Kind::kCompound:
      functions.emplace(t.name(), t.arity());
      for (const Term& a : t.args()) add(a);
      return;
  }
}

void Signature::add(const Atom& a) {
  predicates.emplace(a.predicate(), a.arity());
  for (const Term& t : a.args()) add(t);
}

void Signature::add(const Rule& r) {
  add(r.head());
  for (const Atom& a : r.body()) add(a);
}

void Signature::add(const Program& p) {
  for (const Rule& r : p) add(r);
}

void Signature::merge(const Signature& other) {
  predicates.insert(other.predicates.begin(), other.predicates.end());
  functions.insert(other.functions.begin(), other.functions.end());
  constants.insert(other.constants.begin(), other.constants.end());
}

Signature Signature::of(const Program& p) {
  Signature s;
  s.add(p);
  return s;
}

Signature Signature::of(std::initializer_list<const Program*> programs) {
  Signature s;
  for (const Program* p : programs) s.add(*p);
  return s;
}

}  // namespace horn
