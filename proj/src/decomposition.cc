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

#include "horn/decomposition.h"

#include <array>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "horn/algebra.h"
#include "horn/error.h"
#include "horn/propositional.h"
#include "horn/reduction_search.h"
#include "horn/syntax.h"

namespace horn {

std::string VerifyResult::diagnostic() const {
  if (valid) return "certificate verified";
  std::ostringstream os;
  os << "certificate rejected: (prefix∘base)∘suffix differs from target\n";
  if (!missing.empty()) os << "missing rules:\n" << to_string(missing);
  if (!extra.empty()) os << "extra rules:\n" << to_string(extra);
  return os.str();
}

VerifyResult verify(const ReductionCertificate& cert,
                    const ComposeOptions& options) {
  VerifyResult out;
  out.computed = compose(compose(cert.prefix, cert.base, options), cert.suffix,
                         options);
  out.missing = program_difference(cert.target, out.computed);
  out.extra = program_difference(out.computed, cert.target);
  out.valid = out.missing.empty() && out.extra.empty();
  return out;
}

bool width_blocks(const Program& p, const Program& r) {
  return width(p) > width(r);
}

SearchResult search_reduction(const Program& p, const Program& r,
                              const SearchBounds& bounds) {
  SearchResult out;
  if (!p.is_ground() || !r.is_ground()) {
    throw DomainError(
        "reduction search covers ground programs; first-order reductions "
        "can only be verified");
  }

  std::set<Atom> atoms = atoms_of(p);
  std::set<Atom> r_atoms = atoms_of(r);
  atoms.insert(r_atoms.begin(), r_atoms.end());
  if (bounds.atom_universe) {
    for (const Atom& a : *bounds.atom_universe) {
      if (!a.is_ground()) throw NotGroundError("atom universe must be ground");
    }
    atoms.insert(bounds.atom_universe->begin(), bounds.atom_universe->end());
  }
  prop::AtomTable table(atoms);
  prop::BitProgram bp = table.encode(p);
  prop::BitProgram br = table.encode(r);

  prop::BitSearchBounds bit_bounds;
  bit_bounds.universe = bounds.atom_universe
                            ? table.mask(*bounds.atom_universe)
                            : table.all();
  bit_bounds.max_body = bounds.max_body;
  bit_bounds.max_rules_q = bounds.max_rules_q;
  bit_bounds.max_rules_s = bounds.max_rules_s;
  bit_bounds.deadline = std::chrono::steady_clock::now() + bounds.time_budget;

  prop::BitSearchResult found =
      prop::find_reduction(bp, br, table.size(), bit_bounds);
  switch (found.status) {
    case prop::BitSearchStatus::kFound: {
      ReductionCertificate cert{p, r, table.decode(found.prefix),
                                table.decode(found.suffix)};
      VerifyResult v = verify(cert);
      if (!v.valid) {
        throw std::logic_error("reduction search produced a certificate "
                               "that does not verify:\n" + v.diagnostic());
      }
      out.status = SearchStatus::kFound;
      out.certificate = std::move(cert);
      out.reason = "certificate found";
      return out;
    }
    case prop::BitSearchStatus::kTimeExceeded:
      out.status = SearchStatus::kTimeExceeded;
      out.reason = "time budget exceeded";
      return out;
    case prop::BitSearchStatus::kNotFound:
      out.status = SearchStatus::kNotFound;
      out.exhaustive =
          prop::bounds_are_exhaustive(bp, br, table.size(), bit_bounds);
      out.reason = out.exhaustive ? "no reduction exists"
                                  : "not found within bounds";
      return out;
  }
  return out;
}

SimilarityResult similar(const Program& p, const Program& r,
                         const SearchBounds& bounds) {
  SimilarityResult out;
  out.forward = search_reduction(p, r, bounds);
  out.backward = search_reduction(r, p, bounds);
  bool fwd = out.forward.status == SearchStatus::kFound;
  bool bwd = out.backward.status == SearchStatus::kFound;
  if (fwd && bwd) {
    out.verdict = Similarity::kSimilar;
  } else if (fwd) {
    out.verdict = Similarity::kBelow;
  } else if (bwd) {
    out.verdict = Similarity::kAbove;
  } else {
    out.verdict = Similarity::kIncomparable;
  }
  return out;
}

const char* similarity_name(Similarity s) {
  switch (s) {
    case Similarity::kSimilar: return "similar";
    case Similarity::kBelow: return "P<R";
    case Similarity::kAbove: return "R<P";
    case Similarity::kIncomparable: return "incomparable-within-bounds";
  }
  return "?";
}

const char* search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kNotFound: return "not-found";
    case SearchStatus::kTimeExceeded: return "time-exceeded";
  }
  return "?";
}

namespace {

constexpr std::array<const char*, 4> kSections = {"TARGET", "BASE", "PREFIX",
                                                  "SUFFIX"};

// Index into kSections if `line` is a section header, -1 otherwise.
int section_of(std::string_view line) {
  if (!line.starts_with("%%")) return -1;
  line.remove_prefix(2);
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
    line.remove_prefix(1);
  }
  while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                           line.back() == '\r')) {
    line.remove_suffix(1);
  }
  for (std::size_t i = 0; i < kSections.size(); ++i) {
    if (line == kSections[i]) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

std::string to_string(const ReductionCertificate& cert) {
  std::ostringstream os;
  const Program* parts[] = {&cert.target, &cert.base, &cert.prefix,
                            &cert.suffix};
  for (std::size_t i = 0; i < kSections.size(); ++i) {
    os << "%% " << kSections[i] << '\n' << to_string(*parts[i]);
  }
  return os.str();
}

ReductionCertificate parse_certificate(std::string_view text) {
  std::array<std::string, 4> sections;
  std::array<bool, 4> seen{};
  int current = -1;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    int header = section_of(line);
    if (header >= 0) {
      if (seen[static_cast<std::size_t>(header)]) {
        throw SyntaxError(line_no, 1,
                          std::string("duplicate section ") + kSections[static_cast<std::size_t>(header)]);
      }
      seen[static_cast<std::size_t>(header)] = true;
      current = header;
    }
    for (std::size_t i = 0; i < sections.size(); ++i) {
      if (header < 0 && current == static_cast<int>(i)) {
        sections[i].append(line);
      }
      sections[i].push_back('\n');
    }
    if (header < 0 && current < 0) {
      std::string_view rest = line;
      while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t' ||
                               rest.front() == '\r')) {
        rest.remove_prefix(1);
      }
      if (!rest.empty() && rest.front() != '%') {
        throw SyntaxError(line_no, 1, "text before the first section header");
      }
    }
    start = end + 1;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      throw SyntaxError(line_no, 1,
                        std::string("missing section ") + kSections[i]);
    }
  }
  return {parse_program(sections[0]), parse_program(sections[1]),
          parse_program(sections[2]), parse_program(sections[3])};
}

}  // namespace horn
