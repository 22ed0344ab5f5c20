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

// Search for one-step reductions P = (Q∘R)∘S between ground programs in
// bitset form.
//
// Every rule r of P is produced by some prefix rule q whose body atoms are
// heads of R, one R-rule per body atom of q, and one suffix rule per atom in
// the union M of the chosen R-bodies; the suffix bodies cover body(r)
// exactly. The search picks such a witness (q, S_r) for each proper rule of
// P, facts of P go straight into Q, and a partial choice is abandoned as
// soon as (Q∘R)∘S produces a rule outside P. Composition is monotone in
// both arguments, so the pruning never discards a completion, and
// restricting the suffix to ⋃ S_r loses no solutions.

#ifndef HORN_REDUCTION_SEARCH_H_
#define HORN_REDUCTION_SEARCH_H_

#include <chrono>
#include <cstddef>
#include <limits>
#include <optional>

#include "horn/propositional.h"

namespace horn::prop {

struct BitSearchBounds {
  // Atoms allowed in prefix and suffix bodies.
  Mask universe = ~Mask{0};
  std::size_t max_body = std::numeric_limits<std::size_t>::max();
  std::size_t max_rules_q = std::numeric_limits<std::size_t>::max();
  std::size_t max_rules_s = std::numeric_limits<std::size_t>::max();
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

enum class BitSearchStatus { kFound, kNotFound, kTimeExceeded };

struct BitSearchResult {
  BitSearchStatus status = BitSearchStatus::kNotFound;
  BitProgram prefix;
  BitProgram suffix;
  // Search-tree nodes visited.
  std::size_t nodes = 0;
};

BitSearchResult find_reduction(const BitProgram& p, const BitProgram& r,
                               std::size_t atom_count,
                               const BitSearchBounds& bounds = {});

// True when the bounds cannot cut off any candidate that find_reduction
// would otherwise consider, so kNotFound proves that P ≲ R fails.
bool bounds_are_exhaustive(const BitProgram& p, const BitProgram& r,
                           std::size_t atom_count,
                           const BitSearchBounds& bounds);

}  // namespace horn::prop

#endif  // HORN_REDUCTION_SEARCH_H_
