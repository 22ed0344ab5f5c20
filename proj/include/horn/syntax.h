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

// Surface syntax for programs and queries.
//
//   rule   ::= atom [ ":-" atom { "," atom } ] "."
//   query  ::= [ "?-" ] atom { "," atom } "."
//   atom   ::= name [ "(" term { "," term } ")" ]
//   term   ::= Variable | name [ "(" term { "," term } ")" ] | list
//   list   ::= "[" "]" | "[" term { "," term } [ "|" term ] "]"
//
// Names start with a lowercase letter or a digit, variables with an
// uppercase letter or `_`; a lone `_` is a fresh variable at each
// occurrence. `%` starts a comment that runs to the end of the line.

#ifndef HORN_SYNTAX_H_
#define HORN_SYNTAX_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "horn/program.h"

namespace horn {

// Throw SyntaxError with the line and column of the first offending token.
Program parse_program(std::string_view text);
Query parse_query(std::string_view text);
Atom parse_atom(std::string_view text);
Term parse_term(std::string_view text);
Rule parse_rule(std::string_view text);

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
// `h :- b1, b2` without the terminating period.
std::string to_string(const Rule& r);
// One rule per line in canonical order, each terminated by ".\n".
std::string to_string(const Program& p);
// `?- g1, g2.`
std::string to_string(const Query& q);
// `g1, g2`, or □ for the empty query.
std::string goals_to_string(const std::vector<Atom>& goals);

struct Diagnostic {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;
};

// A parsed input file. `parsed` holds a Program or a Query depending on
// how the document was loaded; on a syntax error it is left empty and the
// error is recorded in `diagnostics`.
struct SourceDocument {
  std::string path;
  std::string text;
  std::variant<std::monostate, Program, Query> parsed;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

SourceDocument load_program_file(const std::string& path);
SourceDocument load_query_text(const std::string& text);

}  // namespace horn

#endif  // HORN_SYNTAX_H_
