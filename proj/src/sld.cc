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

#include "horn/sld.h"

#include <sstream>
#include <utility>

#include "horn/syntax.h"

namespace horn {

std::optional<Resolvent> resolve(const Query& q, const Rule& r,
                                 std::size_t selected) {
  if (selected >= q.goals.size()) return std::nullopt;
  std::optional<Substitution> theta = unify(q.goals[selected], r.head());
  if (!theta) return std::nullopt;
  Resolvent out;
  out.query.goals.reserve(q.goals.size() + r.size());
  for (std::size_t i = 0; i < q.goals.size(); ++i) {
    if (i != selected) {
      out.query.goals.push_back(theta->apply(q.goals[i]));
      continue;
    }
    for (const Atom& a : r.body()) out.query.goals.push_back(theta->apply(a));
  }
  out.unifier = *std::move(theta);
  return out;
}

namespace {

NameSupply supply_for(const Query& q) {
  NameSupply names("_G");
  for (const Atom& a : q.goals) {
    std::vector<std::string> vars;
    collect_variables(a, vars);
    for (std::string& v : vars) names.reserve(std::move(v));
  }
  return names;
}

class Search {
 public:
  Search(const Query& q, std::size_t depth_limit)
      : names_(supply_for(q)), limit_(depth_limit) {}

  // Tries every rule of `program` on goal `selected`; `next` continues the
  // search from the resolvent and returns true once a refutation is found.
  template <typename Next>
  bool branch(const Program& program, Phase phase, const Query& q,
              std::size_t selected, Next&& next) {
    for (const Rule& rule : program.rules()) {
      Rule variant = rename_fresh(rule, names_);
      std::optional<Resolvent> res = resolve(q, variant, selected);
      if (!res) continue;
      steps_.push_back({q, rule, std::move(variant), phase, selected,
                        std::move(res->unifier), res->query});
      if (next(res->query, rule.size())) return true;
      steps_.pop_back();
    }
    return false;
  }

  Derivation finish(bool found, std::size_t length) {
    Derivation d;
    if (found) {
      d.outcome = Outcome::kRefutation;
      d.steps = std::move(steps_);
      d.length = length;
    } else {
      d.outcome = depth_hit_ ? Outcome::kDepthExceeded : Outcome::kFailed;
    }
    return d;
  }

  bool at_limit(std::size_t depth) {
    if (depth < limit_) return false;
    depth_hit_ = true;
    return true;
  }

 private:
  NameSupply names_;
  std::size_t limit_;
  bool depth_hit_ = false;
  std::vector<DerivationStep> steps_;
};

class PlainSearch {
 public:
  PlainSearch(const Program& p, const Query& q, std::size_t limit)
      : program_(p), search_(q, limit) {}

  Derivation run(const Query& q) {
    bool found = descend(q, 0);
    return search_.finish(found, length_);
  }

 private:
  bool descend(const Query& q, std::size_t depth) {
    if (q.empty()) {
      length_ = depth;
      return true;
    }
    if (search_.at_limit(depth)) return false;
    return search_.branch(program_, Phase::kP, q, 0,
                          [&](const Query& next, std::size_t) {
                            return descend(next, depth + 1);
                          });
  }

  const Program& program_;
  Search search_;
  std::size_t length_ = 0;
};

class TranslatedSearch {
 public:
  TranslatedSearch(const Program& prefix, const Program& base,
                   const Program& suffix, const Query& q, std::size_t limit)
      : prefix_(prefix), base_(base), suffix_(suffix), search_(q, limit) {}

  Derivation run(const Query& q) {
    bool found = macro_step(q, 0);
    return search_.finish(found, length_);
  }

 private:
  bool macro_step(const Query& q, std::size_t depth) {
    if (q.empty()) {
      length_ = depth;
      return true;
    }
    if (search_.at_limit(depth)) return false;
    return search_.branch(
        prefix_, Phase::kQ, q, 0, [&](const Query& next, std::size_t k) {
          if (k == 0) return macro_step(next, depth + 1);
          return base_phase(next, 0, k, {}, depth);
        });
  }

  // Resolves the `remaining` prefix-introduced atoms starting at `pos`.
  // `introduced` collects positions of atoms the base rules put in.
  bool base_phase(const Query& q, std::size_t pos, std::size_t remaining,
                  std::vector<std::size_t> introduced, std::size_t depth) {
    if (remaining == 0) return suffix_phase(q, introduced, 0, 0, depth);
    return search_.branch(
        base_, Phase::kR, q, pos, [&](const Query& next, std::size_t m) {
          std::vector<std::size_t> more = introduced;
          for (std::size_t j = 0; j < m; ++j) more.push_back(pos + j);
          return base_phase(next, pos + m, remaining - 1, std::move(more),
                            depth);
        });
  }

  // Resolves introduced[index..] with suffix rules; `shift` accounts for
  // the growth of the query caused by earlier suffix steps.
  bool suffix_phase(const Query& q, const std::vector<std::size_t>& introduced,
                    std::size_t index, std::ptrdiff_t shift,
                    std::size_t depth) {
    if (index == introduced.size()) return macro_step(q, depth + 1);
    std::size_t pos = static_cast<std::size_t>(
        static_cast<std::ptrdiff_t>(introduced[index]) + shift);
    return search_.branch(
        suffix_, Phase::kS, q, pos, [&](const Query& next, std::size_t n) {
          return suffix_phase(next, introduced, index + 1,
                              shift + static_cast<std::ptrdiff_t>(n) - 1,
                              depth);
        });
  }

  const Program& prefix_;
  const Program& base_;
  const Program& suffix_;
  Search search_;
  std::size_t length_ = 0;
};

}  // namespace

Derivation sld(const Program& p, const Query& q, std::size_t depth_limit) {
  return PlainSearch(p, q, depth_limit).run(q);
}

Derivation translated_sld(const Program& prefix, const Program& base,
                          const Program& suffix, const Query& q,
                          std::size_t depth_limit) {
  return TranslatedSearch(prefix, base, suffix, q, depth_limit).run(q);
}

const std::string& PhaseLabels::operator()(Phase phase) const {
  switch (phase) {
    case Phase::kP: return p;
    case Phase::kQ: return q;
    case Phase::kR: return r;
    case Phase::kS: return s;
  }
  return p;
}

std::string render_trace(const Query& initial, const Derivation& d,
                         const PhaseLabels& labels) {
  std::ostringstream os;
  os << to_string(initial) << '\n';
  for (const DerivationStep& step : d.steps) {
    os << labels(step.phase) << ' ' << to_string(step.rule) << " ⊢ "
       << goals_to_string(step.after.goals) << '\n';
  }
  return os.str();
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kRefutation: return "refutation";
    case Outcome::kFailed: return "failed";
    case Outcome::kDepthExceeded: return "depth-exceeded";
  }
  return "?";
}

}  // namespace horn
