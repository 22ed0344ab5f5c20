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

#ifndef HORN_RULE_H_
#define HORN_RULE_H_

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "horn/term.h"

namespace horn {

// A Horn rule `head :- body`. The body is a set of atoms, kept sorted and
// duplicate-free. A rule with an empty body is a fact.
class Rule {
 public:
  Rule() = default;
  explicit Rule(Atom head, std::vector<Atom> body = {});

  const Atom& head() const { return head_; }
  const std::vector<Atom>& body() const { return body_; }
  std::size_t size() const { return body_.size(); }
  bool is_fact() const { return body_.empty(); }
  bool is_proper() const { return !body_.empty(); }
  bool is_ground() const;

  // Variables in order of first occurrence in head, then body.
  std::vector<std::string> variables() const;
  // Number of variables occurring both in the head and in the body.
  std::size_t width() const;

  friend bool operator==(const Rule&, const Rule&) = default;
  friend std::strong_ordering operator<=>(const Rule& a, const Rule& b);

 private:
  Atom head_;
  std::vector<Atom> body_;
};

Rule apply(const Substitution& s, const Rule& r);

// Variant of `r` whose variables are all drawn from `names`.
Rule rename_fresh(const Rule& r, NameSupply& names);

// Canonical representative of the alpha-equivalence class of `r`. Variables
// are renamed V1, V2, ... in order of first occurrence in the head followed
// by the body, and among all body orders compatible with the
// variable-blind atom order the lexicographically least result is chosen.
Rule canonicalize(const Rule& r);

// Prefix of canonical variable names.
inline constexpr char kCanonicalVariablePrefix = 'V';

}  // namespace horn

#endif  // HORN_RULE_H_
