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

// Ground programs over at most 64 distinct atoms, with bodies encoded as
// bitsets. Used by the reduction search, where composition runs in the
// innermost loop.

#ifndef HORN_PROPOSITIONAL_H_
#define HORN_PROPOSITIONAL_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "horn/program.h"

namespace horn::prop {

using Mask = std::uint64_t;
inline constexpr std::size_t kMaxAtoms = 64;

struct BitRule {
  std::uint32_t head = 0;
  Mask body = 0;

  bool is_fact() const { return body == 0; }
  friend auto operator<=>(const BitRule&, const BitRule&) = default;
};

// Sorted and duplicate-free.
using BitProgram = std::vector<BitRule>;

void normalize(BitProgram& p);
bool contains(const BitProgram& p, const BitRule& r);

// Bijection between ground atoms and bit positions, assigned in sorted
// atom order.
class AtomTable {
 public:
  // Throws DomainError for non-ground atoms or more than kMaxAtoms atoms.
  explicit AtomTable(const std::set<Atom>& atoms);

  std::size_t size() const { return atoms_.size(); }
  const Atom& atom(std::uint32_t id) const { return atoms_[id]; }
  std::uint32_t id(const Atom& a) const;
  bool has(const Atom& a) const { return ids_.contains(a); }
  Mask mask(const std::set<Atom>& atoms) const;
  Mask all() const;

  // Throws NotGroundError for non-ground programs and DomainError for atoms
  // outside the table.
  BitProgram encode(const Program& p) const;
  Program decode(const BitProgram& p) const;

 private:
  std::vector<Atom> atoms_;
  std::map<Atom, std::uint32_t> ids_;
};

// Rules of a program grouped by head atom.
class HeadIndex {
 public:
  HeadIndex(const BitProgram& p, std::size_t atom_count);

  const std::vector<Mask>& bodies(std::uint32_t head) const {
    return bodies_[head];
  }
  Mask heads() const { return heads_; }

  void push(std::uint32_t head, Mask body);
  // Removes the most recently pushed body of `head`.
  void pop(std::uint32_t head);

 private:
  std::vector<std::vector<Mask>> bodies_;
  Mask heads_ = 0;
};

namespace detail {

template <typename Emit>
bool extend_bodies(Mask remaining, Mask acc, const HeadIndex& r, Emit& emit) {
  if (remaining == 0) return emit(acc);
  auto atom = static_cast<std::uint32_t>(std::countr_zero(remaining));
  Mask rest = remaining & (remaining - 1);
  for (Mask b : r.bodies(atom)) {
    if (!extend_bodies(rest, acc | b, r, emit)) return false;
  }
  return true;
}

}  // namespace detail

// Calls `emit` with the body of every rule of {head :- body}∘R, i.e. for
// every choice of one R-rule per body atom the union of their bodies. Stops
// early and returns false as soon as `emit` returns false.
template <typename Emit>
bool for_each_composed_body(Mask body, const HeadIndex& r, Emit&& emit) {
  if ((body & ~r.heads()) != 0) return true;
  return detail::extend_bodies(body, 0, r, emit);
}

BitProgram compose(const BitProgram& p, const HeadIndex& r);
BitProgram compose(const BitProgram& p, const BitProgram& r,
                   std::size_t atom_count);

inline int popcount(Mask m) { return std::popcount(m); }

}  // namespace horn::prop

#endif  // HORN_PROPOSITIONAL_H_
