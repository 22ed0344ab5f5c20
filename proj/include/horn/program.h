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

#ifndef HORN_PROGRAM_H_
#define HORN_PROGRAM_H_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "horn/rule.h"
#include "horn/term.h"

namespace horn {

// A finite set of rules. Every rule is stored in canonical form, so two
// programs are equal iff their rules agree up to variable renaming. Rules
// remember the order in which they were first inserted; SLD resolution
// tries them in that order.
class Program {
 public:
  Program() = default;
  Program(std::initializer_list<Rule> rules);
  explicit Program(const std::vector<Rule>& rules);

  // Returns false if an alpha-variant was already present.
  bool insert(const Rule& r);
  void insert_all(const Program& p);

  const std::vector<Rule>& rules() const { return rules_; }
  // Rules in canonical order; this is the printed order.
  const std::set<Rule>& sorted() const { return index_; }

  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  bool contains(const Rule& r) const;
  bool is_ground() const;
  // Ground and built from propositional atoms only.
  bool is_propositional() const;

  auto begin() const { return rules_.begin(); }
  auto end() const { return rules_.end(); }

  friend bool operator==(const Program& a, const Program& b) {
    return a.index_ == b.index_;
  }

 private:
  std::vector<Rule> rules_;
  std::set<Rule> index_;
};

Program program_union(const Program& a, const Program& b);
// Rules of `a` that have no variant in `b`.
Program program_difference(const Program& a, const Program& b);
bool is_subset(const Program& a, const Program& b);

// A finite set of ground atoms.
class Interpretation {
 public:
  Interpretation() = default;
  Interpretation(std::initializer_list<Atom> atoms);
  explicit Interpretation(const std::set<Atom>& atoms);

  // Throws NotGroundError for atoms with variables.
  void insert(const Atom& a);

  const std::set<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  bool contains(const Atom& a) const { return atoms_.contains(a); }
  bool includes(const Interpretation& other) const;

  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }

  // The interpretation as a program of facts.
  Program to_program() const;

  friend bool operator==(const Interpretation&,
                         const Interpretation&) = default;

 private:
  std::set<Atom> atoms_;
};

// Some(I) iff `p` consists of ground facts only.
std::optional<Interpretation> as_interpretation(const Program& p);

// A goal list `?- A1, ..., Ak.`; the leftmost goal is selected first. The
// empty query is □.
struct Query {
  std::vector<Atom> goals;

  bool empty() const { return goals.empty(); }
  friend bool operator==(const Query&, const Query&) = default;
};

// The symbols of a language: predicates and function symbols with their
// arities, and constants.
struct Signature {
  using Symbol = std::pair<std::string, std::size_t>;

  std::set<Symbol> predicates;
  std::set<Symbol> functions;
  std::set<std::string> constants;

  void add(const Term& t);
  void add(const Atom& a);
  void add(const Rule& r);
  void add(const Program& p);
  void merge(const Signature& other);

  static Signature of(const Program& p);
  static Signature of(std::initializer_list<const Program*> programs);

  friend bool operator==(const Signature&, const Signature&) = default;
};

}  // namespace horn

#endif  // HORN_PROGRAM_H_
