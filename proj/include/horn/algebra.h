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

// Structural operators on programs: heads and bodies, duals, widths,
// depth-bounded grounding, unit programs, reducts, and the body-editing
// programs I⊖ and I⊕.

#ifndef HORN_ALGEBRA_H_
#define HORN_ALGEBRA_H_

#include <cstddef>
#include <set>
#include <vector>

#include "horn/program.h"

namespace horn {

std::set<Atom> head_of(const Program& p);
std::set<Atom> body_of(const Program& p);
// Every atom occurring in `p`.
std::set<Atom> atoms_of(const Program& p);
Program facts(const Program& p);
Program proper(const Program& p);

// One fact per atom.
Program as_facts(const std::set<Atom>& atoms);

// facts(P) ∪ { A :- head(r) | r ∈ proper(P), A ∈ body(r) }
Program dual(const Program& p);

// Largest number of head-and-body variables of any rule; 0 for empty or
// ground programs.
std::size_t width(const Program& p);

// Ground terms of nesting depth <= `depth`, in sorted order. Throws
// DomainError when the signature has function symbols but no constants.
std::vector<Term> ground_terms(const Signature& sig, std::size_t depth);

// Ground atoms over `sig` whose arguments have depth <= `depth`.
std::set<Atom> herbrand_base(const Signature& sig, std::size_t depth);

// Ground instances of the rules of `p` all of whose atoms lie in
// herbrand_base(sig, depth). Exact for function-free signatures.
Program gnd(const Program& p, const Signature& sig, std::size_t depth);

// { p(V1..Vn) :- p(V1..Vn) | p/n ∈ sig.predicates }
Program unit_program(const Signature& sig);

// { A :- A | A ∈ atoms }, written 1^I.
Program unit_restricted(const std::set<Atom>& atoms);
Program unit_restricted(const Interpretation& i);

// 1^{HB - I} ∪ I. Composing a ground program with it on the right removes
// the atoms of I from every body. Throws DomainError unless I ⊆ HB.
Program body_minus(const Interpretation& i, const std::set<Atom>& hb);

// { A :- {A} ∪ I | A ∈ HB }. Composing with it on the right adds I to the
// body of every proper rule. Throws DomainError unless I ⊆ HB.
Program body_plus(const Interpretation& i, const std::set<Atom>& hb);

// Rules of ground `p` whose head (left) or body (right) holds in `i`.
// Throw NotGroundError for non-ground programs.
Program left_reduct(const Program& p, const Interpretation& i);
Program right_reduct(const Program& p, const Interpretation& i);

}  // namespace horn

#endif  // HORN_ALGEBRA_H_
