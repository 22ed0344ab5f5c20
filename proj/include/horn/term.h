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

// First-order terms and atoms over an unranked signature, substitutions and
// most general unifiers.

#ifndef HORN_TERM_H_
#define HORN_TERM_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace horn {

// Functor of list cells; `[H|T]` is the compound `.(H, T)`.
inline constexpr std::string_view kConsFunctor = ".";
// The empty list `[]` is an ordinary constant.
inline constexpr std::string_view kNilConstant = "[]";

class Term {
 public:
  enum class Kind : std::uint8_t { kVariable, kConstant, kCompound };

  static Term variable(std::string name);
  static Term constant(std::string name);
  // A compound with no arguments is represented as a constant.
  static Term compound(std::string functor, std::vector<Term> args);

  static Term nil();
  static Term cons(Term head, Term tail);
  // [items... | tail]
  static Term list(std::vector<Term> items, Term tail = nil());

  Kind kind() const { return kind_; }
  bool is_variable() const { return kind_ == Kind::kVariable; }
  bool is_constant() const { return kind_ == Kind::kConstant; }
  bool is_compound() const { return kind_ == Kind::kCompound; }

  // Variable name, constant symbol or functor symbol.
  const std::string& name() const { return name_; }
  const std::vector<Term>& args() const { return args_; }
  std::size_t arity() const { return args_.size(); }

  bool is_ground() const;
  // Constants have depth 0, f(t1..tn) has 1 + max depth(ti). Variables count
  // as depth 0.
  std::size_t depth() const;
  bool occurs(std::string_view var) const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  Term(Kind kind, std::string name, std::vector<Term> args)
      : kind_(kind), name_(std::move(name)), args_(std::move(args)) {}

  Kind kind_;
  std::string name_;
  std::vector<Term> args_;
};

class Atom {
 public:
  Atom() = default;
  explicit Atom(std::string predicate, std::vector<Term> args = {})
      : predicate_(std::move(predicate)), args_(std::move(args)) {}

  const std::string& predicate() const { return predicate_; }
  const std::vector<Term>& args() const { return args_; }
  std::size_t arity() const { return args_.size(); }
  bool is_propositional() const { return args_.empty(); }
  bool is_ground() const;
  bool occurs(std::string_view var) const;

  friend bool operator==(const Atom& a, const Atom& b) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);

 private:
  std::string predicate_;
  std::vector<Term> args_;
};

// Order on variable names used by every comparison: shorter names first, so
// that V2 sorts before V10.
std::strong_ordering compare_variable_names(std::string_view a,
                                            std::string_view b);

// Structural order that treats all variables as equal. Used to group body
// atoms before variable names are fixed.
std::strong_ordering compare_ignoring_variables(const Term& a, const Term& b);
std::strong_ordering compare_ignoring_variables(const Atom& a, const Atom& b);

// Appends the variables of `t` not yet in `out`, in order of first occurrence.
void collect_variables(const Term& t, std::vector<std::string>& out);
void collect_variables(const Atom& a, std::vector<std::string>& out);
std::set<std::string> variable_set(const Atom& a);

class Substitution {
 public:
  using Map = std::map<std::string, Term, std::less<>>;

  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const std::string, Term>> init)
      : bindings_(init) {}

  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const Map& bindings() const { return bindings_; }
  const Term* lookup(std::string_view var) const;

  // Raw insertion; does not maintain idempotence.
  void bind(std::string var, Term t) { bindings_.insert_or_assign(std::move(var), std::move(t)); }

  Term apply(const Term& t) const;
  Atom apply(const Atom& a) const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  friend class Unifier;
  Map bindings_;
};

inline Term apply(const Substitution& s, const Term& t) { return s.apply(t); }
inline Atom apply(const Substitution& s, const Atom& a) { return s.apply(a); }

// Most general unifier with occurs check. The result is idempotent.
std::optional<Substitution> unify(const Atom& a, const Atom& b);
std::optional<Substitution> unify(const Term& a, const Term& b);
// Single substitution unifying every pair simultaneously.
std::optional<Substitution> unify_pairs(
    std::span<const std::pair<Atom, Atom>> pairs);

// Incremental unifier; extends one idempotent substitution pair by pair.
class Unifier {
 public:
  Unifier() = default;
  explicit Unifier(Substitution start) : subst_(std::move(start)) {}

  // On failure the unifier is left in an unspecified but valid state.
  bool unify(const Term& a, const Term& b);
  bool unify(const Atom& a, const Atom& b);

  const Substitution& substitution() const& { return subst_; }
  Substitution substitution() && { return std::move(subst_); }

 private:
  bool bind(const std::string& var, const Term& t);

  Substitution subst_;
};

// Generator of variable names unused anywhere in one computation. Names have
// the form `<prefix><n>`; names registered with reserve() are skipped.
class NameSupply {
 public:
  explicit NameSupply(std::string prefix = "_G") : prefix_(std::move(prefix)) {}

  void reserve(std::string name) { reserved_.insert(std::move(name)); }
  std::string fresh();

 private:
  std::string prefix_;
  std::uint64_t next_ = 1;
  std::set<std::string, std::less<>> reserved_;
};

}  // namespace horn

#endif  // HORN_TERM_H_
