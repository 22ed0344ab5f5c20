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

#include "horn/reduction_search.h"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "horn/error.h"

namespace horn::prop {

namespace {

constexpr std::size_t kMaxCandidates = 1'000'000;

Mask bit(std::uint32_t atom) { return Mask{1} << atom; }

// Subsets of `available` with 1..max_size atoms, smallest first. If
// `preferred` is one of them it comes first.
std::vector<Mask> subsets(Mask available, std::size_t max_size,
                          bool allow_empty, Mask preferred) {
  std::vector<Mask> out;
  std::vector<std::uint32_t> atoms;
  for (Mask m = available; m; m &= m - 1) {
    atoms.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
  }
  std::size_t limit = std::min(max_size, atoms.size());
  if (allow_empty) out.push_back(0);
  // Combinations by size through an index vector.
  for (std::size_t size = 1; size <= limit; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      Mask m = 0;
      for (std::size_t i : idx) m |= bit(atoms[i]);
      out.push_back(m);
      if (out.size() > kMaxCandidates) {
        throw ResourceLimitError("reduction search candidate set too large");
      }
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == atoms.size() - size + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  auto it = std::find(out.begin(), out.end(), preferred);
  if (it != out.end()) std::rotate(out.begin(), it, it + 1);
  return out;
}

// Distinct bodies of {h :- body}∘R, built one body atom at a time. A
// partial body failing `keep` is dropped, or ends the call with false when
// `strict` is set. With at most six atoms every body is below 64 and the
// set of bodies fits in one word.
template <typename Keep>
bool composed_bodies(Mask body, const HeadIndex& r, bool strict, bool small,
                     Keep&& keep, std::vector<Mask>& out,
                     std::vector<Mask>& next) {
  out.clear();
  if ((body & ~r.heads()) != 0) return true;
  if (small) {
    std::uint64_t set = 1;
    for (Mask rest = body; rest; rest &= rest - 1) {
      auto atom = static_cast<std::uint32_t>(std::countr_zero(rest));
      std::uint64_t grown = 0;
      for (std::uint64_t s = set; s; s &= s - 1) {
        Mask acc = static_cast<Mask>(std::countr_zero(s));
        for (Mask b : r.bodies(atom)) {
          Mask m = acc | b;
          if (grown >> m & 1) continue;
          if (keep(m)) {
            grown |= std::uint64_t{1} << m;
          } else if (strict) {
            return false;
          }
        }
      }
      set = grown;
    }
    for (; set; set &= set - 1) {
      out.push_back(static_cast<Mask>(std::countr_zero(set)));
    }
    return true;
  }
  out.push_back(0);
  for (Mask rest = body; rest; rest &= rest - 1) {
    auto atom = static_cast<std::uint32_t>(std::countr_zero(rest));
    next.clear();
    for (Mask acc : out) {
      for (Mask b : r.bodies(atom)) {
        Mask m = acc | b;
        if (keep(m)) {
          next.push_back(m);
        } else if (strict) {
          return false;
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.swap(next);
  }
  return true;
}

struct Witness {
  BitRule q;
  BitProgram suffix;        // sorted
  std::uint32_t mids = 0;   // index of the bodies of {q}∘R
  Mask reach = 0;           // their union
};

struct TimeExceeded {};

class Searcher {
 public:
  Searcher(const BitProgram& p, const BitProgram& r, std::size_t atom_count,
           const BitSearchBounds& bounds)
      : p_(p),
        r_index_(r, atom_count),
        s_index_(BitProgram{}, atom_count),
        scratch_(BitProgram{}, atom_count),
        bounds_(bounds),
        atom_count_(atom_count),
        small_(atom_count <= 6) {}

  BitSearchResult run() {
    BitSearchResult result;
    p_bodies_.assign(atom_count_, {});
    for (const BitRule& rule : p_) p_bodies_[rule.head].push_back(rule.body);
    for (auto& bodies : p_bodies_) std::sort(bodies.begin(), bodies.end());
    for (const BitRule& rule : p_) {
      if (rule.is_fact()) {
        facts_.push_back(rule);
      } else {
        proper_.push_back(rule);
      }
    }
    if (facts_.size() > bounds_.max_rules_q) return result;

    witnesses_.resize(proper_.size());
    for (std::size_t k = 0; k < proper_.size(); ++k) {
      witnesses_[k] = witnesses_for(proper_[k]);
      if (witnesses_[k].empty()) return result;
    }
    std::vector<std::vector<std::uint32_t>> candidates(proper_.size());
    for (std::size_t k = 0; k < proper_.size(); ++k) {
      for (std::uint32_t i = 0; i < witnesses_[k].size(); ++i) {
        candidates[k].push_back(i);
      }
    }
    assigned_.assign(proper_.size(), false);

    try {
      // Every witness is admissible, i.e. compatible with the empty choice.
      if (dfs(candidates, 0, kNone)) {
        result.status = BitSearchStatus::kFound;
        result.prefix = facts_;
        result.prefix.insert(result.prefix.end(), q_.begin(), q_.end());
        normalize(result.prefix);
        result.suffix = s_;
        normalize(result.suffix);
      }
    } catch (const TimeExceeded&) {
      result.status = BitSearchStatus::kTimeExceeded;
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  std::vector<Witness> witnesses_for(const BitRule& r) {
    std::vector<Witness> out;
    if ((r.body & ~bounds_.universe) != 0) return out;
    std::vector<Mask> prefix_bodies =
        subsets(r_index_.heads() & bounds_.universe, bounds_.max_body, false,
                bit(r.head));
    for (Mask x : prefix_bodies) {
      auto [it, inserted] = mid_index_.try_emplace(
          x, static_cast<std::uint32_t>(mid_sets_.size()));
      if (inserted) {
        mid_sets_.emplace_back();
        composed_bodies(x, r_index_, false, small_, [](Mask) { return true; },
                        mid_sets_.back(), next_);
      }
      const std::vector<Mask>& mids = mid_sets_[it->second];
      Mask reach = 0;
      for (Mask m : mids) reach |= m;
      // Distinct bodies give suffixes with distinct heads, so no witness
      // is produced twice.
      std::size_t first = out.size();
      for (Mask mid : mids) {
        if (mid == 0) continue;
        for_each_cover(r.head, mids, mid, r.body,
                       [&](const BitProgram& suffix) {
                         out.push_back({{r.head, x}, suffix, it->second, reach});
                       });
      }
      // A certificate containing the suffix of a witness also contains the
      // suffix of any witness with the same q and fewer suffix rules, so
      // only the minimal ones are kept.
      std::vector<bool> dominated(out.size() - first, false);
      for (std::size_t i = first; i < out.size(); ++i) {
        for (std::size_t j = first; j < out.size(); ++j) {
          if (i != j && out[j].suffix.size() < out[i].suffix.size() &&
              std::includes(out[i].suffix.begin(), out[i].suffix.end(),
                            out[j].suffix.begin(), out[j].suffix.end())) {
            dominated[i - first] = true;
            break;
          }
        }
      }
      std::size_t kept = first;
      for (std::size_t i = first; i < out.size(); ++i) {
        if (dominated[i - first]) continue;
        if (kept != i) out[kept] = std::move(out[i]);
        ++kept;
      }
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(kept), out.end());
    }
    return out;
  }

  // Calls `emit` with every suffix {A :- Y_A | A ∈ mid} whose bodies are
  // subsets of `target` with union exactly `target` and for which
  // ({head :- x}∘R)∘suffix ⊆ P, where `mids` are the bodies of {head :- x}∘R.
  // A partial suffix producing a rule outside P is abandoned, since more
  // suffix rules only add to the composition.
  template <typename Emit>
  void for_each_cover(std::uint32_t head, const std::vector<Mask>& mids,
                      Mask mid, Mask target, Emit&& emit) {
    std::vector<std::uint32_t> atoms;
    for (Mask m = mid; m; m &= m - 1) {
      atoms.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
    }
    if (cover_target_ != target) {
      cover_target_ = target;
      cover_bodies_ = subsets(target, bounds_.max_body, true, 0);
    }
    std::vector<std::vector<Mask>> options;
    for (std::uint32_t a : atoms) {
      options.push_back(cover_bodies_);
      auto it = std::find(options.back().begin(), options.back().end(),
                          (target & bit(a)) ? bit(a) : 0);
      if (it != options.back().end()) {
        std::rotate(options.back().begin(), it, it + 1);
      }
    }
    BitProgram suffix(atoms.size());
    cover(head, mids, atoms, options, 0, 0, target, suffix, emit);
  }

  template <typename Emit>
  void cover(std::uint32_t head, const std::vector<Mask>& mids,
             const std::vector<std::uint32_t>& atoms,
             const std::vector<std::vector<Mask>>& options, std::size_t i,
             Mask acc, Mask target, BitProgram& suffix, Emit& emit) {
    if (i == atoms.size()) {
      if (acc != target) return;
      BitProgram sorted = suffix;
      normalize(sorted);
      emit(sorted);
      return;
    }
    for (Mask y : options[i]) {
      suffix[i] = {atoms[i], y};
      scratch_.push(atoms[i], y);
      if (produces_only_p(head, mids, scratch_)) {
        cover(head, mids, atoms, options, i + 1, acc | y, target, suffix,
              emit);
      }
      scratch_.pop(atoms[i]);
    }
  }

  bool produces_only_p(std::uint32_t head, const std::vector<Mask>& mids,
                       const HeadIndex& s) {
    const std::vector<Mask>& allowed = p_bodies_[head];
    auto fits = [&](Mask m) {
      return std::any_of(allowed.begin(), allowed.end(),
                         [m](Mask a) { return (m & ~a) == 0; });
    };
    for (Mask mid : mids) {
      if (!composed_bodies(mid, s, true, small_, fits, fins_, next_)) return false;
      for (Mask fin : fins_) {
        if (!std::binary_search(allowed.begin(), allowed.end(), fin)) {
          return false;
        }
      }
    }
    return true;
  }

  bool covered(const BitRule& r) {
    auto fits = [&](Mask m) { return (m & ~r.body) == 0; };
    for (std::size_t i = 0; i < q_.size(); ++i) {
      if (q_[i].head != r.head) continue;
      for (Mask mid : mid_sets_[mids_[i]]) {
        composed_bodies(mid, s_index_, false, small_, fits, fins_, next_);
        if (std::binary_search(fins_.begin(), fins_.end(), r.body)) {
          return true;
        }
      }
    }
    return false;
  }

  void tick() {
    ++nodes_;
    if (bounds_.deadline && (nodes_ & 0x3ff) == 0 &&
        std::chrono::steady_clock::now() > *bounds_.deadline) {
      throw TimeExceeded{};
    }
  }

  // Adds the witness to the current choice, returning how many suffix rules
  // were new. They are the last ones in s_.
  std::size_t apply(const Witness& w, bool& new_q) {
    new_q = std::find(q_.begin(), q_.end(), w.q) == q_.end();
    if (new_q) {
      q_.push_back(w.q);
      mids_.push_back(w.mids);
      reach_.push_back(w.reach);
    }
    std::size_t added = 0;
    for (const BitRule& s : w.suffix) {
      if (std::find(s_.begin(), s_.end(), s) == s_.end()) {
        ++added;
        s_.push_back(s);
        s_index_.push(s.head, s.body);
      }
    }
    return added;
  }

  void undo(std::size_t added, bool new_q) {
    for (; added > 0; --added) {
      s_index_.pop(s_.back().head);
      s_.pop_back();
    }
    if (new_q) {
      q_.pop_back();
      mids_.pop_back();
      reach_.pop_back();
    }
  }

  // Whether the witness can join the current choice within the bounds and
  // without producing rules outside P. Once false it stays false further
  // down the tree, because composition is monotone.
  //
  // The witness is known to be compatible with the choice before the last
  // step, which added suffix heads `step_heads` and, unless `step_q` is
  // npos, the prefix rule q_[step_q]. A prefix rule only needs a new check
  // if the last step and this witness both add suffix rules it reaches.
  bool compatible(const Witness& w, Mask step_heads, std::size_t step_q) {
    bool new_q = false;
    std::size_t added = apply(w, new_q);
    Mask added_heads = 0;
    for (std::size_t i = s_.size() - added; i < s_.size(); ++i) {
      added_heads |= bit(s_[i].head);
    }
    bool ok = facts_.size() + q_.size() <= bounds_.max_rules_q &&
              s_.size() <= bounds_.max_rules_s;
    for (std::size_t i = 0; ok && i < q_.size(); ++i) {
      bool from_witness = new_q && i + 1 == q_.size();
      Mask seen_by_step = from_witness ? ~Mask{0} : added_heads;
      Mask seen_by_witness = i == step_q ? ~Mask{0} : step_heads;
      if (from_witness) seen_by_witness = step_heads;
      if (i == step_q) seen_by_step = added_heads;
      if ((reach_[i] & seen_by_step) != 0 &&
          (reach_[i] & seen_by_witness) != 0) {
        ok = produces_only_p(q_[i].head, mid_sets_[mids_[i]], s_index_);
      }
    }
    undo(added, new_q);
    return ok;
  }

  // Forward checking: every proper rule not yet produced keeps the
  // witnesses compatible with the current choice, and the rule with the
  // fewest of them is branched on next.
  bool dfs(const std::vector<std::vector<std::uint32_t>>& candidates,
           Mask step_heads, std::size_t step_q) {
    tick();
    std::vector<std::vector<std::uint32_t>> next(candidates.size());
    std::size_t best = candidates.size();
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (assigned_[k] || covered(proper_[k])) continue;
      for (std::uint32_t i : candidates[k]) {
        if (compatible(witnesses_[k][i], step_heads, step_q)) {
          next[k].push_back(i);
        }
      }
      if (next[k].empty()) return false;
      if (best == candidates.size() || next[k].size() < next[best].size()) {
        best = k;
      }
    }
    if (best == candidates.size()) return true;

    assigned_[best] = true;
    for (std::uint32_t i : next[best]) {
      bool new_q = false;
      std::size_t added = apply(witnesses_[best][i], new_q);
      Mask heads = 0;
      for (std::size_t j = s_.size() - added; j < s_.size(); ++j) {
        heads |= bit(s_[j].head);
      }
      bool done = dfs(next, heads, new_q ? q_.size() - 1 : kNone);
      if (done) return true;
      undo(added, new_q);
    }
    assigned_[best] = false;
    return false;
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  const BitProgram& p_;
  HeadIndex r_index_;
  HeadIndex s_index_;
  HeadIndex scratch_;
  const BitSearchBounds& bounds_;
  std::size_t atom_count_;
  bool small_;

  BitProgram facts_;
  BitProgram proper_;
  std::vector<std::vector<Witness>> witnesses_;
  std::vector<bool> assigned_;
  std::vector<BitRule> q_;
  std::vector<std::uint32_t> mids_;
  std::map<Mask, std::uint32_t> mid_index_;
  std::vector<std::vector<Mask>> mid_sets_;
  std::vector<Mask> reach_;
  std::vector<std::vector<Mask>> p_bodies_;
  std::vector<Mask> fins_;
  std::vector<Mask> next_;
  std::optional<Mask> cover_target_;
  std::vector<Mask> cover_bodies_;
  std::vector<BitRule> s_;
  std::size_t nodes_ = 0;
};

}  // namespace

BitSearchResult find_reduction(const BitProgram& p, const BitProgram& r,
                               std::size_t atom_count,
                               const BitSearchBounds& bounds) {
  return Searcher(p, r, atom_count, bounds).run();
}

bool bounds_are_exhaustive(const BitProgram& p, const BitProgram& r,
                           std::size_t atom_count,
                           const BitSearchBounds& bounds) {
  HeadIndex r_index(r, atom_count);
  Mask p_bodies = 0;
  std::size_t proper = 0;
  std::size_t widest_p_body = 0;
  for (const BitRule& rule : p) {
    p_bodies |= rule.body;
    if (!rule.is_fact()) ++proper;
    widest_p_body = std::max<std::size_t>(widest_p_body,
                                          static_cast<std::size_t>(popcount(rule.body)));
  }
  Mask r_bodies = 0;
  for (const BitRule& rule : r) r_bodies |= rule.body;

  if ((p_bodies & ~bounds.universe) != 0) return false;
  if ((r_index.heads() & ~bounds.universe) != 0) return false;
  std::size_t widest = std::max(
      widest_p_body, static_cast<std::size_t>(popcount(r_index.heads())));
  if (bounds.max_body < widest) return false;
  if (bounds.max_rules_q < p.size()) return false;
  // Each witness adds at most |body(R)| suffix rules.
  std::size_t r_body_atoms = static_cast<std::size_t>(popcount(r_bodies));
  if (r_body_atoms > 0 &&
      bounds.max_rules_s / r_body_atoms < proper) {
    return false;
  }
  return true;
}

}  // namespace horn::prop
