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

#include "horn/rule.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>

namespace horn {

namespace {

// Above this many tie-group orderings canonicalize() falls back to iterated
// sort-and-rename, which is stable but not guaranteed canonical.
constexpr std::size_t kMaxCanonicalOrderings = 40320;

std::vector<Atom> sorted_unique(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

Substitution first_occurrence_renaming(const Atom& head,
                                       const std::vector<const Atom*>& body) {
  std::vector<std::string> vars;
  collect_variables(head, vars);
  for (const Atom* a : body) collect_variables(*a, vars);
  Substitution s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    s.bind(vars[i], Term::variable(std::string(1, kCanonicalVariablePrefix) +
                                   std::to_string(i + 1)));
  }
  return s;
}

Rule renamed(const Rule& r, const std::vector<const Atom*>& order) {
  Substitution s = first_occurrence_renaming(r.head(), order);
  std::vector<Atom> body;
  body.reserve(order.size());
  for (const Atom* a : order) body.push_back(s.apply(*a));
  return Rule(s.apply(r.head()), std::move(body));
}

Rule iterate_to_fixpoint(Rule current) {
  for (int round = 0; round < 32; ++round) {
    std::vector<const Atom*> order;
    for (const Atom& a : current.body()) order.push_back(&a);
    Rule next = renamed(current, order);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

}  // namespace

Rule::Rule(Atom head, std::vector<Atom> body)
    : head_(std::move(head)), body_(sorted_unique(std::move(body))) {}

bool Rule::is_ground() const {
  return head_.is_ground() &&
         std::all_of(body_.begin(), body_.end(),
                     [](const Atom& a) { return a.is_ground(); });
}

std::vector<std::string> Rule::variables() const {
  std::vector<std::string> vars;
  collect_variables(head_, vars);
  for (const Atom& a : body_) collect_variables(a, vars);
  return vars;
}

std::size_t Rule::width() const {
  if (body_.empty()) return 0;
  std::set<std::string> head_vars = variable_set(head_);
  std::set<std::string> body_vars;
  for (const Atom& a : body_) {
    std::set<std::string> vs = variable_set(a);
    body_vars.insert(vs.begin(), vs.end());
  }
  return static_cast<std::size_t>(std::count_if(
      head_vars.begin(), head_vars.end(),
      [&](const std::string& v) { return body_vars.contains(v); }));
}

std::strong_ordering operator<=>(const Rule& a, const Rule& b) {
  if (auto c = a.head_ <=> b.head_; c != 0) return c;
  if (auto c = a.body_.size() <=> b.body_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.body_.size(); ++i) {
    if (auto c = a.body_[i] <=> b.body_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Rule apply(const Substitution& s, const Rule& r) {
  std::vector<Atom> body;
  body.reserve(r.size());
  for (const Atom& a : r.body()) body.push_back(s.apply(a));
  return Rule(s.apply(r.head()), std::move(body));
}

Rule rename_fresh(const Rule& r, NameSupply& names) {
  std::vector<std::string> vars = r.variables();
  if (vars.empty()) return r;
  Substitution s;
  for (const std::string& v : vars) s.bind(v, Term::variable(names.fresh()));
  return apply(s, r);
}

Rule canonicalize(const Rule& r) {
  if (r.is_ground()) return r;

  std::vector<const Atom*> order;
  order.reserve(r.size());
  for (const Atom& a : r.body()) order.push_back(&a);
  std::stable_sort(order.begin(), order.end(),
                   [](const Atom* x, const Atom* y) {
                     return compare_ignoring_variables(*x, *y) < 0;
                   });

  // Runs of atoms that are equal up to variable names; only their relative
  // order is undetermined.
  std::vector<std::pair<std::size_t, std::size_t>> ties;
  std::size_t orderings = 1;
  bool capped = false;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    while (j < order.size() &&
           compare_ignoring_variables(*order[i], *order[j]) == 0) {
      ++j;
    }
    if (j - i > 1) {
      ties.emplace_back(i, j);
      for (std::size_t k = 2; k <= j - i && !capped; ++k) {
        orderings *= k;
        capped = orderings > kMaxCanonicalOrderings;
      }
    }
    i = j;
  }

  if (capped) return iterate_to_fixpoint(renamed(r, order));

  std::vector<std::size_t> idx(order.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::optional<Rule> best;
  std::vector<const Atom*> candidate(order.size());
  for (;;) {
    for (std::size_t i = 0; i < idx.size(); ++i) candidate[i] = order[idx[i]];
    Rule c = renamed(r, candidate);
    if (!best || c < *best) best = std::move(c);

    std::size_t t = 0;
    for (; t < ties.size(); ++t) {
      auto [b, e] = ties[t];
      if (std::next_permutation(idx.begin() + static_cast<std::ptrdiff_t>(b),
                                idx.begin() + static_cast<std::ptrdiff_t>(e))) {
        break;
      }
    }
    if (t == ties.size()) break;
  }
  return *std::move(best);
}

}  // namespace horn
