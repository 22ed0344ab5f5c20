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

#ifndef HORN_SEMANTICS_H_
#define HORN_SEMANTICS_H_

#include <set>

#include "horn/program.h"

namespace horn {

// I ⊨ x. All arguments must be ground (NotGroundError otherwise).
bool entails(const Interpretation& i, const Atom& a);
bool entails(const Interpretation& i, const std::set<Atom>& atoms);
bool entails(const Interpretation& i, const Rule& r);
bool entails(const Interpretation& i, const Program& p);

// Immediate consequence operator: heads of rules whose body holds in I.
Interpretation tp(const Program& p, const Interpretation& i);

// Least fixpoint of tp, by iteration from the empty interpretation.
Interpretation least_model(const Program& p);

bool logically_equivalent(const Program& p, const Program& r);

}  // namespace horn

#endif  // HORN_SEMANTICS_H_
