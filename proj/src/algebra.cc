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

#include "horn/algebra.h"

#include <algorithm>
#include <functional>
#include <string>

#include "horn/error.h"

namespace horn {

namespace {

constexpr std::size_t kMaxGroundAtoms = 1'000'000;
constexpr std::size_t kMaxInstancesPerRule = 10'000'000;

void require_ground(const Program& p, const char* what) {
  if (!p.is_ground()) {
    throw NotGroundError(std::string(what) + " requires a ground program");
  }
}

void require_subset(const Interpretation& i, const std::set<Atom>& hb) {
  for (const Atom& a : i) {
    if (!hb.contains(a)) {
      throw DomainError("interpretation is not a subset of the Herbrand base");
    }
  }
}

bool args_within_depth(const Atom& a, std::size_t depth) {
  return std::all_of(a.args().begin(), a.args().end(),
                     [depth](const Term& t) { return t.depth() <= depth; });
}

}  // namespace

std::set<Atom> head_of(const Program& p) {
  std::set<Atom> out;
  for (const Rule& r : p) out.insert(r.head());
  return out;
}

std::set<Atom> body_of(const Program& p) {
  std::set<Atom> out;
  for (const Rule& r : p) out.insert(r.body().begin(), r.body().end());
  return out;
}

std::set<Atom> atoms_of(const Program& p) {
  std::set<Atom> out = head_of(p);
  std::set<Atom> body = body_of(p);
  out.insert(body.begin(), body.end());
  return out;
}

Program facts(const Program& p) {
  Program out;
  for (const Rule& r : p) {
    if (r.is_fact()) out.insert(r);
  }
  return out;
}

Program proper(const Program& p) {
  Program out;
  for (const Rule& r : p) {
    if (r.is_proper()) out.insert(r);
  }
  return out;
}

Program as_facts(const std::set<Atom>& atoms) {
  Program out;
  for (const Atom& a : atoms) out.insert(Rule(a));
  return out;
}

Program dual(const Program& p) {
  Program out;
  for (const Rule& r : p) {
    if (r.is_fact()) {
      out.insert(r);
      continue;
    }
    for (const Atom& a : r.body()) out.insert(Rule(a, {r.head()}));
  }
  return out;
}

std::size_t width(const Program& p) {
  std::size_t w = 0;
  for (const Rule& r : p) w = std::max(w, r.width());
  return w;
}

std::vector<Term> ground_terms(const Signature& sig, std::size_t depth) {
  if (sig.constants.empty() && !sig.functions.empty()) {
    throw DomainError(
        "signature has function symbols but no constants; the ground term "
        "universe is empty");
  }
  std::set<Term> terms;
  for (const std::string& c : sig.constants) terms.insert(Term::constant(c));
  for (std::size_t level = 1; level <= depth; ++level) {
    std::vector<Term> previous(terms.begin(), terms.end());
    std::set<Term> next = terms;
    for (const auto& [functor, arity] : sig.functions) {
      std::vector<std::size_t> pick(arity, 0);
      for (;;) {
        std::vector<Term> args;
        args.reserve(arity);
        for (std::size_t k : pick) args.push_back(previous[k]);
        next.insert(Term::compound(functor, std::move(args)));
        if (next.size() > kMaxGroundAtoms) {
          throw ResourceLimitError("ground term universe exceeds " +
                                   std::to_string(kMaxGroundAtoms) + " terms");
        }
        std::size_t i = 0;
        for (; i < arity; ++i) {
          if (++pick[i] < previous.size()) break;
          pick[i] = 0;
        }
        if (i == arity) break;
      }
    }
    if (next.size() == terms.size()) break;
    terms = std::move(next);
  }
  return {terms.begin(), terms.end()};
}

std::set<Atom> herbrand_base(const Signature& sig, std::size_t depth) {
  std::vector<Term> universe = ground_terms(sig, depth);
  std::set<Atom> out;
  for (const auto& [pred, arity] : sig.predicates) {
    if (arity > 0 && universe.empty()) continue;
    std::vector<std::size_t> pick(arity, 0);
    for (;;) {
      std::vector<Term> args;
      args.reserve(arity);
      for (std::size_t k : pick) args.push_back(universe[k]);
      out.emplace(pred, std::move(args));
      if (out.size() > kMaxGroundAtoms) {
        throw ResourceLimitError("Herbrand base exceeds " +
                                 std::to_string(kMaxGroundAtoms) + " atoms");
      }
      std::size_t i = 0;
      for (; i < arity; ++i) {
        if (++pick[i] < universe.size()) break;
        pick[i] = 0;
      }
      if (i == arity) break;
    }
  }
  return out;
}

Program gnd(const Program& p, const Signature& sig, std::size_t depth) {
  std::vector<Term> universe = ground_terms(sig, depth);
  Program out;
  for (const Rule& r : p) {
    std::vector<std::string> vars = r.variables();
    if (vars.empty()) {
      if (args_within_depth(r.head(), depth) &&
          std::all_of(r.body().begin(), r.body().end(), [&](const Atom& a) {
            return args_within_depth(a, depth);
          })) {
        out.insert(r);
      }
      continue;
    }
    if (universe.empty()) continue;
    double instances = 1;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      instances *= static_cast<double>(universe.size());
    }
    if (instances > static_cast<double>(kMaxInstancesPerRule)) {
      throw ResourceLimitError("grounding a rule would enumerate more than " +
                               std::to_string(kMaxInstancesPerRule) +
                               " instances");
    }
    std::vector<std::size_t> pick(vars.size(), 0);
    for (;;) {
      Substitution s;
      for (std::size_t k = 0; k < vars.size(); ++k) {
        s.bind(vars[k], universe[pick[k]]);
      }
      Rule inst = apply(s, r);
      if (args_within_depth(inst.head(), depth) &&
          std::all_of(inst.body().begin(), inst.body().end(),
                      [&](const Atom& a) { return args_within_depth(a, depth); })) {
        out.insert(inst);
      }
      std::size_t i = 0;
      for (; i < vars.size(); ++i) {
        if (++pick[i] < universe.size()) break;
        pick[i] = 0;
      }
      if (i == vars.size()) break;
    }
  }
  return out;
}

Program unit_program(const Signature& sig) {
  Program out;
  for (const auto& [pred, arity] : sig.predicates) {
    std::vector<Term> args;
    for (std::size_t k = 1; k <= arity; ++k) {
      args.push_back(Term::variable("V" + std::to_string(k)));
    }
    Atom a(pred, std::move(args));
    out.insert(Rule(a, {a}));
  }
  return out;
}

Program unit_restricted(const std::set<Atom>& atoms) {
  Program out;
  for (const Atom& a : atoms) out.insert(Rule(a, {a}));
  return out;
}

Program unit_restricted(const Interpretation& i) {
  return unit_restricted(i.atoms());
}

Program body_minus(const Interpretation& i, const std::set<Atom>& hb) {
  require_subset(i, hb);
  Program out;
  for (const Atom& a : hb) {
    out.insert(i.contains(a) ? Rule(a) : Rule(a, {a}));
  }
  return out;
}

Program body_plus(const Interpretation& i, const std::set<Atom>& hb) {
  require_subset(i, hb);
  Program out;
  for (const Atom& a : hb) {
    std::vector<Atom> body(i.begin(), i.end());
    body.push_back(a);
    out.insert(Rule(a, std::move(body)));
  }
  return out;
}

Program left_reduct(const Program& p, const Interpretation& i) {
  require_ground(p, "left_reduct");
  Program out;
  for (const Rule& r : p) {
    if (i.contains(r.head())) out.insert(r);
  }
  return out;
}

Program right_reduct(const Program& p, const Interpretation& i) {
  require_ground(p, "right_reduct");
  Program out;
  for (const Rule& r : p) {
    if (std::all_of(r.body().begin(), r.body().end(),
                    [&](const Atom& a) { return i.contains(a); })) {
      out.insert(r);
    }
  }
  return out;
}

}  // namespace horn
