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

// One-step reductions P ≲ R (P = (Q∘R)∘S for some prefix Q and suffix S)
// and syntactic similarity P ≈ R (reductions both ways).

#ifndef HORN_DECOMPOSITION_H_
#define HORN_DECOMPOSITION_H_

#include <chrono>
#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "horn/compose.h"
#include "horn/program.h"

namespace horn {

struct ReductionCertificate {
  Program target;
  Program base;
  Program prefix;
  Program suffix;

  friend bool operator==(const ReductionCertificate&,
                         const ReductionCertificate&) = default;
};

struct VerifyResult {
  bool valid = false;
  // (prefix∘base)∘suffix
  Program computed;
  // Rules of the target that were not produced, and produced rules that
  // are not in the target.
  Program missing;
  Program extra;

  std::string diagnostic() const;
};

// Propagates ResourceLimitError from composition.
VerifyResult verify(const ReductionCertificate& cert,
                    const ComposeOptions& options = {});

// width(P) > width(R). This rules out P ≲ R only in restricted settings:
// {p(X,Y) :- r(X), r(Y)} ≲ {q(Z) :- r(Z)} although the widths are 2 and 1.
bool width_blocks(const Program& p, const Program& r);

struct SearchBounds {
  // Atoms allowed in prefix and suffix bodies; defaults to the atoms of
  // both programs.
  std::optional<std::set<Atom>> atom_universe;
  std::size_t max_body = std::numeric_limits<std::size_t>::max();
  std::size_t max_rules_q = std::numeric_limits<std::size_t>::max();
  std::size_t max_rules_s = std::numeric_limits<std::size_t>::max();
  std::chrono::milliseconds time_budget{10'000};
};

enum class SearchStatus { kFound, kNotFound, kTimeExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::kNotFound;
  std::optional<ReductionCertificate> certificate;
  // Set when kNotFound proves that no reduction exists, i.e. the bounds
  // were exhaustive.
  bool exhaustive = false;
  std::string reason;
};

// Looks for a prefix and suffix with P = (Q∘R)∘S. P and R must be ground
// (DomainError otherwise). Every returned certificate has passed verify().
SearchResult search_reduction(const Program& p, const Program& r,
                              const SearchBounds& bounds = {});

enum class Similarity {
  kSimilar,       // P ≲ R and R ≲ P
  kBelow,         // P < R: P ≲ R only
  kAbove,         // R < P: R ≲ P only
  kIncomparable,  // neither direction found within the bounds
};

struct SimilarityResult {
  Similarity verdict = Similarity::kIncomparable;
  SearchResult forward;   // P ≲ R
  SearchResult backward;  // R ≲ P
};

SimilarityResult similar(const Program& p, const Program& r,
                         const SearchBounds& bounds = {});

const char* similarity_name(Similarity s);
const char* search_status_name(SearchStatus s);

// Four program sections, each introduced by a line `%% TARGET`, `%% BASE`,
// `%% PREFIX` or `%% SUFFIX`. Since `%` starts a comment, every section is
// an ordinary program text.
std::string to_string(const ReductionCertificate& cert);
// Throws SyntaxError for missing or duplicate sections and malformed rules.
ReductionCertificate parse_certificate(std::string_view text);

}  // namespace horn

#endif  // HORN_DECOMPOSITION_H_
