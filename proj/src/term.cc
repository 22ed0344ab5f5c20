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

#include "horn/term.h"

#include <algorithm>

namespace horn {

Term Term::variable(std::string name) {
  return Term(Kind::kVariable, std::move(name), {});
}

Term Term::constant(std::string name) {
  return Term(Kind::kConstant, std::move(name), {});
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  if (args.empty()) return constant(std::move(functor));
  return Term(Kind::kCompound, std::move(functor), std::move(args));
}

Term Term::nil() { return constant(std::string(kNilConstant)); }

Term Term::cons(Term head, Term tail) {
  std::vector<Term> args;
  args.reserve(2);
  args.push_back(std::move(head));
  args.push_back(std::move(tail));
  return Term(Kind::kCompound, std::string(kConsFunctor), std::move(args));
}

Term Term::list(std::vector<Term> items, Term tail) {
  Term result = std::move(tail);
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    result = cons(std::move(*it), std::move(result));
  }
  return result;
}

bool Term::is_ground() const {
  if (is_variable()) return false;
  return std::all_of(args_.begin(), args_.end(),
                     [](const Term& t) { return t.is_ground(); });
}

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (const Term& a : args_) d = std::max(d, a.depth() + 1);
  return d;
}

bool Term::occurs(std::string_view var) const {
  if (is_variable()) return name_ == var;
  return std::any_of(args_.begin(), args_.end(),
                     [var](const Term& t) { return t.occurs(var); });
}

bool operator==(const Term& a, const Term& b) {
  return a.kind_ == b.kind_ && a.name_ == b.name_ && a.args_ == b.args_;
}

std::strong_ordering compare_variable_names(std::string_view a,
                                            std::string_view b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return a.compare(b) <=> 0;
}

namespace {

template <typename Range, typename Cmp>
std::strong_ordering compare_ranges(const Range& a, const Range& b, Cmp cmp) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = cmp(a[i], b[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_terms(const Term& a, const Term& b,
                                   bool ignore_variables) {
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.is_variable()) {
    if (ignore_variables) return std::strong_ordering::equal;
    return compare_variable_names(a.name(), b.name());
  }
  if (auto c = a.name().compare(b.name()) <=> 0; c != 0) return c;
  return compare_ranges(a.args(), b.args(), [&](const Term& x, const Term& y) {
    return compare_terms(x, y, ignore_variables);
  });
}

std::strong_ordering compare_atoms(const Atom& a, const Atom& b,
                                   bool ignore_variables) {
  if (auto c = a.predicate().compare(b.predicate()) <=> 0; c != 0) return c;
  return compare_ranges(a.args(), b.args(), [&](const Term& x, const Term& y) {
    return compare_terms(x, y, ignore_variables);
  });
}

}  // namespace

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  return compare_terms(a, b, false);
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  return compare_atoms(a, b, false);
}

std::strong_ordering compare_ignoring_variables(const Term& a, const Term& b) {
  return compare_terms(a, b, true);
}

std::strong_ordering compare_ignoring_variables(const Atom& a, const Atom& b) {
  return compare_atoms(a, b, true);
}

bool Atom::is_ground() const {
  return std::all_of(args_.begin(), args_.end(),
                     [](const Term& t) { return t.is_ground(); });
}

bool Atom::occurs(std::string_view var) const {
  return std::any_of(args_.begin(), args_.end(),
                     [var](const Term& t) { return t.occurs(var); });
}

void collect_variables(const Term& t, std::vector<std::string>& out) {
  if (t.is_variable()) {
    if (std::find(out.begin(), out.end(), t.name()) == out.end()) {
      out.push_back(t.name());
    }
    return;
  }
  for (const Term& a : t.args()) collect_variables(a, out);
}

void collect_variables(const Atom& a, std::vector<std::string>& out) {
  for (const Term& t : a.args()) collect_variables(t, out);
}

std::set<std::string> variable_set(const Atom& a) {
  std::vector<std::string> vars;
  collect_variables(a, vars);
  return {vars.begin(), vars.end()};
}

const Term* Substitution::lookup(std::string_view var) const {
  auto it = bindings_.find(var);
  return it == bindings_.end() ? nullptr : &it->second;
}

Term Substitution::apply(const Term& t) const {
  if (bindings_.empty()) return t;
  if (t.is_variable()) {
    const Term* bound = lookup(t.name());
    return bound ? *bound : t;
  }
  if (t.is_constant()) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(apply(a));
  return Term::compound(t.name(), std::move(args));
}

Atom Substitution::apply(const Atom& a) const {
  if (bindings_.empty()) return a;
  std::vector<Term> args;
  args.reserve(a.arity());
  for (const Term& t : a.args()) args.push_back(apply(t));
  return Atom(a.predicate(), std::move(args));
}

bool Unifier::bind(const std::string& var, const Term& t) {
  if (t.occurs(var)) return false;
  Substitution single;
  single.bindings_.emplace(var, t);
  for (auto& [name, value] : subst_.bindings_) value = single.apply(value);
  subst_.bindings_.insert_or_assign(var, t);
  return true;
}

bool Unifier::unify(const Term& a, const Term& b) {
  std::vector<std::pair<Term, Term>> work;
  work.emplace_back(a, b);
  while (!work.empty()) {
    auto [x, y] = std::move(work.back());
    work.pop_back();
    x = subst_.apply(x);
    y = subst_.apply(y);
    if (x == y) continue;
    if (x.is_variable()) {
      if (!bind(x.name(), y)) return false;
    } else if (y.is_variable()) {
      if (!bind(y.name(), x)) return false;
    } else {
      if (x.kind() != y.kind() || x.name() != y.name() ||
          x.arity() != y.arity()) {
        return false;
      }
      for (std::size_t i = 0; i < x.arity(); ++i) {
        work.emplace_back(x.args()[i], y.args()[i]);
      }
    }
  }
  return true;
}

bool Unifier::unify(const Atom& a, const Atom& b) {
  if (a.predicate() != b.predicate() || a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!unify(a.args()[i], b.args()[i])) return false;
  }
  return true;
}

std::optional<Substitution> unify(const Atom& a, const Atom& b) {
  Unifier u;
  if (!u.unify(a, b)) return std::nullopt;
  return std::move(u).substitution();
}

std::optional<Substitution> unify(const Term& a, const Term& b) {
  Unifier u;
  if (!u.unify(a, b)) return std::nullopt;
  return std::move(u).substitution();
}

std::optional<Substitution> unify_pairs(
    std::span<const std::pair<Atom, Atom>> pairs) {
  Unifier u;
  for (const auto& [a, b] : pairs) {
    if (!u.unify(a, b)) return std::nullopt;
  }
  return std::move(u).substitution();
}

std::string NameSupply::fresh() {
  for (;;) {
    std::string name = prefix_ + std::to_string(next_++);
    if (!reserved_.contains(name)) return name;
  }
}

}  // namespace horn
