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

#include "horn/semantics.h"

#include <algorithm>

#include "horn/error.h"

namespace horn {

namespace {

void require_ground(const Atom& a) {
  if (!a.is_ground()) throw NotGroundError("entailment needs ground atoms");
}

void require_ground(const Program& p) {
  if (!p.is_ground()) throw NotGroundError("semantics needs a ground program");
}

bool holds(const Interpretation& i, const std::vector<Atom>& body) {
  return std::all_of(body.begin(), body.end(),
                     [&](const Atom& a) { return i.contains(a); });
}

}  // namespace

bool entails(const Interpretation& i, const Atom& a) {
  require_ground(a);
  return i.contains(a);
}

bool entails(const Interpretation& i, const std::set<Atom>& atoms) {
  return std::all_of(atoms.begin(), atoms.end(),
                     [&](const Atom& a) { return entails(i, a); });
}

bool entails(const Interpretation& i, const Rule& r) {
  if (!r.is_ground()) throw NotGroundError("entailment needs a ground rule");
  return !holds(i, r.body()) || i.contains(r.head());
}

bool entails(const Interpretation& i, const Program& p) {
  require_ground(p);
  return std::all_of(p.begin(), p.end(),
                     [&](const Rule& r) { return entails(i, r); });
}

Interpretation tp(const Program& p, const Interpretation& i) {
  require_ground(p);
  Interpretation out;
  for (const Rule& r : p) {
    if (holds(i, r.body())) out.insert(r.head());
  }
  return out;
}

Interpretation least_model(const Program& p) {
  require_ground(p);
  Interpretation current;
  for (;;) {
    Interpretation next = tp(p, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

bool logically_equivalent(const Program& p, const Program& r) {
  return least_model(p) == least_model(r);
}

}  // namespace horn
