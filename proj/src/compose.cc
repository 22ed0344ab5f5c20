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

#include "horn/compose.h"

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "horn/error.h"

namespace horn {

namespace {

using Key = std::pair<std::string, std::size_t>;

void check_budget(const std::vector<std::size_t>& counts,
                  const ComposeOptions& options) {
  double total = 1;
  for (std::size_t c : counts) total *= static_cast<double>(c);
  if (total > static_cast<double>(options.max_assignments_per_rule)) {
    throw ResourceLimitError(
        "composition would enumerate more than " +
        std::to_string(options.max_assignments_per_rule) +
        " body assignments for one rule");
  }
}

class RuleComposer {
 public:
  RuleComposer(const Rule& rule,
               const std::vector<const std::vector<const Rule*>*>& candidates,
               Program& out)
      : rule_(rule), candidates_(candidates), out_(out) {}

  void run() { extend(0, Unifier()); }

 private:
  void extend(std::size_t i, const Unifier& u) {
    if (i == rule_.size()) {
      emit(u.substitution());
      return;
    }
    const Atom& goal = rule_.body()[i];
    for (const Rule* candidate : *candidates_[i]) {
      Rule variant = rename_fresh(*candidate, names_);
      Unifier next = u;
      if (!next.unify(goal, variant.head())) continue;
      selected_.push_back(std::move(variant));
      extend(i + 1, next);
      selected_.pop_back();
    }
  }

  void emit(const Substitution& theta) {
    std::set<Atom> heads;
    std::vector<Atom> body;
    for (const Rule& s : selected_) {
      heads.insert(theta.apply(s.head()));
      for (const Atom& a : s.body()) body.push_back(theta.apply(a));
    }
    std::set<Atom> goals;
    for (const Atom& a : rule_.body()) goals.insert(theta.apply(a));
    // head(Sθ) = body(rθ) as sets; holds by construction of θ.
    if (heads != goals) return;
    out_.insert(Rule(theta.apply(rule_.head()), std::move(body)));
  }

  const Rule& rule_;
  const std::vector<const std::vector<const Rule*>*>& candidates_;
  Program& out_;
  NameSupply names_{"_C"};
  std::vector<Rule> selected_;
};

}  // namespace

Program compose(const Program& p, const Program& r,
                const ComposeOptions& options) {
  std::map<Key, std::vector<const Rule*>> by_head;
  for (const Rule& rule : r) {
    by_head[{rule.head().predicate(), rule.head().arity()}].push_back(&rule);
  }
  static const std::vector<const Rule*> kNone;

  Program out;
  for (const Rule& rule : p) {
    if (rule.is_fact()) {
      out.insert(rule);
      continue;
    }
    std::vector<const std::vector<const Rule*>*> candidates;
    std::vector<std::size_t> counts;
    bool dead = false;
    for (const Atom& a : rule.body()) {
      auto it = by_head.find({a.predicate(), a.arity()});
      const auto* c = it == by_head.end() ? &kNone : &it->second;
      dead = dead || c->empty();
      candidates.push_back(c);
      counts.push_back(c->size());
    }
    if (dead) continue;
    check_budget(counts, options);
    RuleComposer(rule, candidates, out).run();
  }
  return out;
}

Program compose_ground(const Program& p, const Program& r,
                       const ComposeOptions& options) {
  if (!p.is_ground() || !r.is_ground()) {
    throw NotGroundError("compose_ground requires ground programs");
  }
  std::map<Atom, std::vector<const std::vector<Atom>*>> bodies_by_head;
  for (const Rule& rule : r) bodies_by_head[rule.head()].push_back(&rule.body());

  Program out;
  for (const Rule& rule : p) {
    if (rule.is_fact()) {
      out.insert(rule);
      continue;
    }
    std::vector<const std::vector<const std::vector<Atom>*>*> choices;
    std::vector<std::size_t> counts;
    bool dead = false;
    for (const Atom& a : rule.body()) {
      auto it = bodies_by_head.find(a);
      if (it == bodies_by_head.end()) {
        dead = true;
        break;
      }
      choices.push_back(&it->second);
      counts.push_back(it->second.size());
    }
    if (dead) continue;
    check_budget(counts, options);

    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
      std::vector<Atom> body;
      for (std::size_t k = 0; k < choices.size(); ++k) {
        const auto& b = *(*choices[k])[pick[k]];
        body.insert(body.end(), b.begin(), b.end());
      }
      out.insert(Rule(rule.head(), std::move(body)));
      std::size_t i = 0;
      for (; i < choices.size(); ++i) {
        if (++pick[i] < choices[i]->size()) break;
        pick[i] = 0;
      }
      if (i == choices.size()) break;
    }
  }
  return out;
}

}  // namespace horn
