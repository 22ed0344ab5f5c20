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

// SLD resolution with leftmost selection, and derivations of a program P
// routed through a decomposition P = (Q∘R)∘S.

#ifndef HORN_SLD_H_
#define HORN_SLD_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "horn/program.h"

namespace horn {

enum class Phase { kP, kQ, kR, kS };

struct DerivationStep {
  Query before;
  // The rule as stored in its program, and the renamed-apart variant that
  // was actually resolved against.
  Rule rule;
  Rule variant;
  Phase phase = Phase::kP;
  // Index of the selected goal in `before`.
  std::size_t selected = 0;
  Substitution unifier;
  Query after;
};

enum class Outcome { kRefutation, kFailed, kDepthExceeded };

struct Derivation {
  // Steps of the first refutation found; empty unless outcome is
  // kRefutation.
  std::vector<DerivationStep> steps;
  Outcome outcome = Outcome::kFailed;
  // Resolution steps (or macro-steps for translated derivations) on the
  // refutation.
  std::size_t length = 0;
};

struct Resolvent {
  Query query;
  Substitution unifier;
};

// Resolves goal `selected` of `q` with `r`, which must not share variables
// with `q`. The selected goal is replaced by the body of `r` and the mgu is
// applied to the whole query.
std::optional<Resolvent> resolve(const Query& q, const Rule& r,
                                 std::size_t selected = 0);

inline constexpr std::size_t kDefaultDepthLimit = 1000;

// Depth-first search for a refutation: leftmost selection, rules tried in
// program order. `depth_limit` bounds the number of resolution steps on a
// branch; kDepthExceeded is reported when no refutation was found and some
// branch was cut.
Derivation sld(const Program& p, const Query& q,
               std::size_t depth_limit = kDefaultDepthLimit);

// Answers `q` against (prefix∘base)∘suffix without building it. Each
// macro-step resolves the leftmost goal with a prefix rule, every atom it
// introduced with a base rule, and every atom those introduced with a suffix
// rule, left to right. `depth_limit` bounds macro-steps. All choice points
// backtrack.
Derivation translated_sld(const Program& prefix, const Program& base,
                          const Program& suffix, const Query& q,
                          std::size_t depth_limit = kDefaultDepthLimit);

struct PhaseLabels {
  std::string p = "P";
  std::string q = "Q";
  std::string r = "R";
  std::string s = "S";

  const std::string& operator()(Phase phase) const;
};

// First line `?- <query>.`, then one line `<phase> <rule> ⊢ <resolvent>` per
// step, with □ for the empty resolvent. Every line ends in '\n'.
std::string render_trace(const Query& initial, const Derivation& d,
                         const PhaseLabels& labels = {});

const char* outcome_name(Outcome o);

}  // namespace horn

#endif  // HORN_SLD_H_
