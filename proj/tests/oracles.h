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

// Independent reference implementations used to derive expected values.
// None of them shares code with the library paths they check.

#ifndef HORN_TESTS_ORACLES_H_
#define HORN_TESTS_ORACLES_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "horn/program.h"

namespace horn::testing {

using Bindings = std::map<std::string, Term>;

inline Term substitute(const Term& t, const std::string& var, const Term& by) {
  if (t.is_variable()) return t.name() == var ? by : t;
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(substitute(a, var, by));
  return Term::compound(t.name(), std::move(args));
}

inline bool occurs_in(const std::string& var, const Term& t) {
  if (t.is_variable()) return t.name() == var;
  for (const Term& a : t.args()) {
    if (occurs_in(var, a)) return true;
  }
  return false;
}

// Martelli–Montanari: rewrite a set of equations to solved form with the
// delete, decompose, conflict, swap, eliminate and occurs-check rules.
inline std::optional<Bindings> martelli_montanari(
    std::vector<std::pair<Term, Term>> eqs) {
  Bindings solved;
  while (!eqs.empty()) {
    auto [s, t] = eqs.back();
    eqs.pop_back();
    if (s == t) continue;                                  // delete
    if (!s.is_variable() && t.is_variable()) std::swap(s, t);  // swap
    if (s.is_variable()) {
      if (occurs_in(s.name(), t)) return std::nullopt;     // occurs check
      for (auto& [l, r] : eqs) {                           // eliminate
        l = substitute(l, s.name(), t);
        r = substitute(r, s.name(), t);
      }
      for (auto& [v, value] : solved) value = substitute(value, s.name(), t);
      solved.insert_or_assign(s.name(), t);
      continue;
    }
    if (s.name() != t.name() || s.arity() != t.arity()) return std::nullopt;
    for (std::size_t i = 0; i < s.arity(); ++i) {          // decompose
      eqs.emplace_back(s.args()[i], t.args()[i]);
    }
  }
  return solved;
}

inline std::optional<Bindings> martelli_montanari_atoms(
    const std::vector<std::pair<Atom, Atom>>& pairs) {
  std::vector<std::pair<Term, Term>> eqs;
  for (const auto& [a, b] : pairs) {
    // Encode atoms as terms under a reserved functor so that predicate and
    // arity clashes surface as conflicts.
    eqs.emplace_back(Term::compound("#" + a.predicate(), a.args()),
                     Term::compound("#" + b.predicate(), b.args()));
    if (a.args().empty() || b.args().empty()) {
      if (a.predicate() != b.predicate() || a.arity() != b.arity()) {
        return std::nullopt;
      }
    }
  }
  return martelli_montanari(std::move(eqs));
}

// Ground composition straight from the definition: every sz(r)-element
// subset S of R with head(S) = body(r).
inline Program compose_by_subsets(const Program& p, const Program& r) {
  std::vector<Rule> rs(r.sorted().begin(), r.sorted().end());
  Program out;
  for (const Rule& rule : p) {
    if (rule.is_fact()) {
      out.insert(rule);
      continue;
    }
    std::size_t k = rule.size();
    std::set<Atom> body(rule.body().begin(), rule.body().end());
    // Enumerate k-subsets of rs by bitmask (rs is small in tests).
    std::size_t n = rs.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
      std::set<Atom> heads;
      std::vector<Atom> new_body;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(mask >> i & 1)) continue;
        heads.insert(rs[i].head());
        new_body.insert(new_body.end(), rs[i].body().begin(),
                        rs[i].body().end());
      }
      if (heads == body) out.insert(Rule(rule.head(), new_body));
    }
  }
  return out;
}

// Least model as the intersection of all models over the atoms of `p`.
inline std::set<Atom> least_model_by_enumeration(const Program& p) {
  std::set<Atom> all;
  for (const Rule& r : p) {
    all.insert(r.head());
    all.insert(r.body().begin(), r.body().end());
  }
  std::vector<Atom> atoms(all.begin(), all.end());
  std::set<Atom> least = all;
  for (std::size_t mask = 0; mask < (std::size_t{1} << atoms.size()); ++mask) {
    std::set<Atom> model;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (mask >> i & 1) model.insert(atoms[i]);
    }
    bool is_model = true;
    for (const Rule& r : p) {
      bool body_holds = true;
      for (const Atom& a : r.body()) body_holds = body_holds && model.contains(a);
      if (body_holds && !model.contains(r.head())) is_model = false;
    }
    if (!is_model) continue;
    std::set<Atom> meet;
    for (const Atom& a : least) {
      if (model.contains(a)) meet.insert(a);
    }
    least = std::move(meet);
  }
  return least;
}

// One-way matching: is `instance` equal to `pattern` under some binding of
// the pattern's variables?
inline bool match_term(const Term& pattern, const Term& instance, Bindings& b) {
  if (pattern.is_variable()) {
    auto [it, fresh] = b.emplace(pattern.name(), instance);
    return fresh || it->second == instance;
  }
  if (pattern.kind() != instance.kind() || pattern.name() != instance.name() ||
      pattern.arity() != instance.arity()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!match_term(pattern.args()[i], instance.args()[i], b)) return false;
  }
  return true;
}

inline bool is_instance(const Atom& pattern, const Atom& instance) {
  if (pattern.predicate() != instance.predicate() ||
      pattern.arity() != instance.arity()) {
    return false;
  }
  Bindings b;
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!match_term(pattern.args()[i], instance.args()[i], b)) return false;
  }
  return true;
}

// Propositional rules over atoms 0..n-1 as (head, body bit set).
using BitClause = std::pair<unsigned, unsigned>;
using BitClauses = std::set<BitClause>;

inline BitClauses compose_clauses(const BitClauses& p, const BitClauses& r) {
  BitClauses out;
  for (const auto& [head, body] : p) {
    std::vector<unsigned> partial = {0};
    for (unsigned a = 0; body >> a; ++a) {
      if (!(body >> a & 1)) continue;
      std::vector<unsigned> grown;
      for (unsigned acc : partial) {
        for (const auto& [h, b] : r) {
          if (h == a) grown.push_back(acc | b);
        }
      }
      partial = std::move(grown);
    }
    for (unsigned b : partial) out.insert({head, b});
  }
  return out;
}

// Whether P = (Q∘R)∘S for some Q and S over `atoms` atoms, by trying every
// pair of programs. Only practical for two atoms, where there are eight
// possible rules.
inline bool reduces_by_enumeration(const BitClauses& p, const BitClauses& r,
                                   unsigned atoms) {
  std::vector<BitClause> universe;
  for (unsigned h = 0; h < atoms; ++h) {
    for (unsigned b = 0; b < (1u << atoms); ++b) universe.push_back({h, b});
  }
  auto program = [&](unsigned long mask) {
    BitClauses out;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (mask >> i & 1) out.insert(universe[i]);
    }
    return out;
  };
  std::set<BitClauses> middles;
  for (unsigned long q = 0; q < (1ul << universe.size()); ++q) {
    middles.insert(compose_clauses(program(q), r));
  }
  for (const BitClauses& m : middles) {
    for (unsigned long s = 0; s < (1ul << universe.size()); ++s) {
      if (compose_clauses(m, program(s)) == p) return true;
    }
  }
  return false;
}

}  // namespace horn::testing

#endif  // HORN_TESTS_ORACLES_H_
