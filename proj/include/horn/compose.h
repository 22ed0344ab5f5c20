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

// Sequential composition of Horn programs.
//
// P∘R resolves, for every rule r of P, all body atoms of r simultaneously
// against heads of fresh variants of rules of R, and keeps
//   head(r)θ :- body(S)θ
// where S is the selected list of variants and θ the simultaneous mgu.
// Facts of P pass through unchanged.

#ifndef HORN_COMPOSE_H_
#define HORN_COMPOSE_H_

#include <cstddef>

#include "horn/program.h"

namespace horn {

struct ComposeOptions {
  // Upper bound on the number of body-atom-to-rule assignments enumerated for
  // a single rule of the left operand. Exceeding it raises
  // ResourceLimitError.
  std::size_t max_assignments_per_rule = 1'000'000;
};

Program compose(const Program& p, const Program& r,
                const ComposeOptions& options = {});

// Composition of ground programs by head lookup, without unification. Equal
// to compose() on ground input; throws NotGroundError otherwise.
Program compose_ground(const Program& p, const Program& r,
                       const ComposeOptions& options = {});

}  // namespace horn

#endif  // HORN_COMPOSE_H_
