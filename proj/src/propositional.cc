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

#include "horn/propositional.h"

#include <algorithm>

#include "horn/error.h"

namespace horn::prop {

void normalize(BitProgram& p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
}

bool contains(const BitProgram& p, const BitRule& r) {
  return std::binary_search(p.begin(), p.end(), r);
}

AtomTable::AtomTable(const std::set<Atom>& atoms) {
  if (atoms.size() > kMaxAtoms) {
    throw DomainError("bitset encoding supports at most 64 distinct atoms");
  }
  for (const Atom& a : atoms) {
    if (!a.is_ground()) throw NotGroundError("atom table needs ground atoms");
    ids_.emplace(a, static_cast<std::uint32_t>(atoms_.size()));
    atoms_.push_back(a);
  }
}

std::uint32_t AtomTable::id(const Atom& a) const {
  auto it = ids_.find(a);
  if (it == ids_.end()) throw DomainError("atom outside the atom table");
  return it->second;
}

Mask AtomTable::mask(const std::set<Atom>& atoms) const {
  Mask m = 0;
  for (const Atom& a : atoms) m |= Mask{1} << id(a);
  return m;
}

Mask AtomTable::all() const {
  return atoms_.size() == 64 ? ~Mask{0} : (Mask{1} << atoms_.size()) - 1;
}

BitProgram AtomTable::encode(const Program& p) const {
  if (!p.is_ground()) throw NotGroundError("bitset encoding needs ground rules");
  BitProgram out;
  out.reserve(p.size());
  for (const Rule& r : p) {
    BitRule b{id(r.head()), 0};
    for (const Atom& a : r.body()) b.body |= Mask{1} << id(a);
    out.push_back(b);
  }
  normalize(out);
  return out;
}

Program AtomTable::decode(const BitProgram& p) const {
  Program out;
  for (const BitRule& r : p) {
    std::vector<Atom> body;
    for (Mask m = r.body; m; m &= m - 1) {
      body.push_back(atoms_[static_cast<std::size_t>(std::countr_zero(m))]);
    }
    out.insert(Rule(atoms_[r.head], std::move(body)));
  }
  return out;
}

HeadIndex::HeadIndex(const BitProgram& p, std::size_t atom_count)
    : bodies_(atom_count) {
  for (const BitRule& r : p) {
    bodies_[r.head].push_back(r.body);
    heads_ |= Mask{1} << r.head;
  }
}

void HeadIndex::push(std::uint32_t head, Mask body) {
  bodies_[head].push_back(body);
  heads_ |= Mask{1} << head;
}

void HeadIndex::pop(std::uint32_t head) {
  bodies_[head].pop_back();
  if (bodies_[head].empty()) heads_ &= ~(Mask{1} << head);
}

BitProgram compose(const BitProgram& p, const HeadIndex& r) {
  BitProgram out;
  for (const BitRule& rule : p) {
    if (rule.is_fact()) {
      out.push_back(rule);
      continue;
    }
    for_each_composed_body(rule.body, r, [&](Mask b) {
      out.push_back({rule.head, b});
      return true;
    });
  }
  normalize(out);
  return out;
}

BitProgram compose(const BitProgram& p, const BitProgram& r,
                   std::size_t atom_count) {
  return compose(p, HeadIndex(r, atom_count));
}

}  // namespace horn::prop
