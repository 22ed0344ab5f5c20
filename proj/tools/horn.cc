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

// Command-line front end: composition, structural operators, semantics,
// SLD derivations and reduction certificates over program files.
//
// Exit status: 0 for success or a true answer, 1 for a false answer or
// nothing found, 2 for usage and input errors, 3 when a resource limit or
// time budget is hit.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "horn/algebra.h"
#include "horn/compose.h"
#include "horn/decomposition.h"
#include "horn/error.h"
#include "horn/semantics.h"
#include "horn/sld.h"
#include "horn/syntax.h"

namespace {

using namespace horn;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kLimit = 3;

// Raised for unreadable or malformed input files; already formatted.
struct InputError {
  std::string message;
};

Program load(const std::string& path) {
  SourceDocument doc = load_program_file(path);
  if (!doc.ok()) {
    const Diagnostic& d = doc.diagnostics.front();
    throw InputError{path + ":" + std::to_string(d.line) + ":" +
                     std::to_string(d.column) + ": " + d.message};
  }
  return std::get<Program>(doc.parsed);
}

Query load_query(const std::string& text) {
  SourceDocument doc = load_query_text(text);
  if (!doc.ok()) {
    const Diagnostic& d = doc.diagnostics.front();
    throw InputError{"query:" + std::to_string(d.line) + ":" +
                     std::to_string(d.column) + ": " + d.message};
  }
  return std::get<Query>(doc.parsed);
}

Interpretation load_interpretation(const std::string& path) {
  std::optional<Interpretation> i = as_interpretation(load(path));
  if (!i) throw InputError{path + ": expected ground facts only"};
  return *i;
}

int print_derivation(const Query& q, const Derivation& d, bool trace,
                     const PhaseLabels& labels) {
  if (d.outcome == Outcome::kRefutation && trace) {
    std::cout << render_trace(q, d, labels);
  } else if (d.outcome == Outcome::kRefutation) {
    std::cout << outcome_name(d.outcome) << " in " << d.length
              << (d.length == 1 ? " step\n" : " steps\n");
  } else {
    if (trace) std::cout << to_string(q) << "\n";
    std::cout << outcome_name(d.outcome) << "\n";
  }
  return d.outcome == Outcome::kRefutation ? kOk : kNo;
}

SearchBounds search_bounds(std::optional<std::size_t> max_body,
                           double budget_seconds) {
  SearchBounds bounds;
  if (max_body) bounds.max_body = *max_body;
  bounds.time_budget = std::chrono::milliseconds(
      static_cast<long long>(budget_seconds * 1000.0));
  return bounds;
}

void describe(const char* direction, const SearchResult& r) {
  std::cout << direction << ": " << search_status_name(r.status);
  if (r.status == SearchStatus::kNotFound) {
    std::cout << (r.exhaustive ? " (exhaustive)" : " (within bounds)");
  }
  std::cout << "\n";
  if (r.certificate) std::cout << to_string(*r.certificate);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequential composition and decomposition of Horn programs"};
  app.require_subcommand(1);

  int status = kOk;
  std::string a_path, b_path, goal;
  std::string target_path, base_path, prefix_path, suffix_path, facts_path;
  std::size_t depth = 0;
  std::size_t sld_depth = kDefaultDepthLimit;
  std::optional<std::size_t> max_body;
  double budget = 10.0;
  bool trace = false;
  std::string base_label = "R";

  auto* compose_cmd = app.add_subcommand("compose", "Print P∘R");
  compose_cmd->add_option("P", a_path)->required();
  compose_cmd->add_option("R", b_path)->required();
  compose_cmd->callback([&] {
    std::cout << to_string(compose(load(a_path), load(b_path)));
  });

  auto* dual_cmd = app.add_subcommand("dual", "Print the dual program");
  dual_cmd->add_option("P", a_path)->required();
  dual_cmd->callback([&] { std::cout << to_string(dual(load(a_path))); });

  auto* width_cmd = app.add_subcommand("width", "Print the width");
  width_cmd->add_option("P", a_path)->required();
  width_cmd->callback([&] { std::cout << width(load(a_path)) << "\n"; });

  auto* gnd_cmd = app.add_subcommand(
      "gnd", "Print the ground instances with terms up to a nesting depth");
  gnd_cmd->add_option("P", a_path)->required();
  gnd_cmd->add_option("--depth", depth, "Term depth bound")->required();
  gnd_cmd->callback([&] {
    Program p = load(a_path);
    std::cout << to_string(gnd(p, Signature::of(p), depth));
  });

  auto* lm_cmd = app.add_subcommand(
      "lm", "Print the least model of the depth-bounded grounding");
  lm_cmd->add_option("P", a_path)->required();
  lm_cmd->add_option("--depth", depth, "Term depth bound")->required();
  lm_cmd->callback([&] {
    Program p = load(a_path);
    std::cout << to_string(
        least_model(gnd(p, Signature::of(p), depth)).to_program());
  });

  auto* tp_cmd = app.add_subcommand("tp", "Print T_P(I)");
  tp_cmd->add_option("P", a_path)->required();
  tp_cmd->add_option("--facts", facts_path, "File with the interpretation I")
      ->required();
  tp_cmd->add_option("--depth", depth, "Term depth bound for grounding P");
  tp_cmd->callback([&] {
    Program p = load(a_path);
    Interpretation i = load_interpretation(facts_path);
    Program i_program = i.to_program();
    Signature sig = Signature::of({&p, &i_program});
    std::cout << to_string(tp(gnd(p, sig, depth), i).to_program());
  });

  auto* sld_cmd = app.add_subcommand("sld", "SLD resolution");
  sld_cmd->add_option("P", a_path)->required();
  sld_cmd->add_option("query", goal, "Query such as \"?- p(X).\"")->required();
  sld_cmd->add_option("--depth", sld_depth, "Resolution step limit");
  sld_cmd->add_flag("--trace", trace, "Print the derivation");
  sld_cmd->callback([&] {
    Query q = load_query(goal);
    status = print_derivation(q, sld(load(a_path), q, sld_depth), trace, {});
  });

  auto* xsld_cmd = app.add_subcommand(
      "xsld", "SLD resolution translated through prefix, base and suffix");
  xsld_cmd->add_option("--prefix", prefix_path)->required();
  xsld_cmd->add_option("--base", base_path)->required();
  xsld_cmd->add_option("--suffix", suffix_path)->required();
  xsld_cmd->add_option("query", goal)->required();
  xsld_cmd->add_option("--depth", sld_depth, "Macro-step limit");
  xsld_cmd->add_option("--base-label", base_label,
                       "Trace label for base steps");
  xsld_cmd->add_flag("--trace", trace, "Print the derivation");
  xsld_cmd->callback([&] {
    Query q = load_query(goal);
    PhaseLabels labels;
    labels.r = base_label;
    Derivation d = translated_sld(load(prefix_path), load(base_path),
                                  load(suffix_path), q, sld_depth);
    status = print_derivation(q, d, trace, labels);
  });

  auto* verify_cmd = app.add_subcommand(
      "verify", "Check target = (prefix∘base)∘suffix");
  verify_cmd->add_option("--target", target_path)->required();
  verify_cmd->add_option("--base", base_path)->required();
  verify_cmd->add_option("--prefix", prefix_path)->required();
  verify_cmd->add_option("--suffix", suffix_path)->required();
  verify_cmd->callback([&] {
    VerifyResult v = verify({load(target_path), load(base_path),
                             load(prefix_path), load(suffix_path)});
    std::cout << v.diagnostic();
    if (v.valid) std::cout << "\n";
    status = v.valid ? kOk : kNo;
  });

  auto* search_cmd = app.add_subcommand(
      "search", "Look for a prefix and suffix reducing a ground target");
  search_cmd->add_option("--target", target_path)->required();
  search_cmd->add_option("--base", base_path)->required();
  search_cmd->add_option("--max-body", max_body, "Largest body size");
  search_cmd->add_option("--budget", budget, "Time budget in seconds");
  search_cmd->callback([&] {
    SearchResult r = search_reduction(load(target_path), load(base_path),
                                      search_bounds(max_body, budget));
    if (r.status == SearchStatus::kFound) {
      std::cout << to_string(*r.certificate);
      return;
    }
    describe("P ≲ R", r);
    status = r.status == SearchStatus::kTimeExceeded ? kLimit : kNo;
  });

  auto* similar_cmd = app.add_subcommand(
      "similar", "Search for reductions in both directions");
  similar_cmd->add_option("P", a_path)->required();
  similar_cmd->add_option("R", b_path)->required();
  similar_cmd->add_option("--max-body", max_body, "Largest body size");
  similar_cmd->add_option("--budget", budget,
                          "Time budget in seconds for each direction");
  similar_cmd->callback([&] {
    SimilarityResult s = similar(load(a_path), load(b_path),
                                 search_bounds(max_body, budget));
    std::cout << similarity_name(s.verdict) << "\n";
    describe("P ≲ R", s.forward);
    describe("R ≲ P", s.backward);
    if (s.verdict == Similarity::kSimilar) {
      status = kOk;
    } else if (s.forward.status == SearchStatus::kTimeExceeded ||
               s.backward.status == SearchStatus::kTimeExceeded) {
      status = kLimit;
    } else {
      status = kNo;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << e.message << "\n";
    return kUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kLimit;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  std::cout.flush();
  return status;
}
