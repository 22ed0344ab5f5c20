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

#include "horn/syntax.h"

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

#include "horn/error.h"

namespace horn {

namespace {

enum class Tok {
  kName,
  kVariable,
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kBar,
  kComma,
  kDot,
  kNeck,
  kQuery,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t{Tok::kEnd, "", line_, column_};
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      if (std::islower(static_cast<unsigned char>(c)) ||
          std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::kName;
        t.text = identifier();
      } else if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::kVariable;
        t.text = identifier();
      } else if (c == ':' && peek(1) == '-') {
        t.kind = Tok::kNeck;
        advance(2);
      } else if (c == '?' && peek(1) == '-') {
        t.kind = Tok::kQuery;
        advance(2);
      } else {
        switch (c) {
          case '(': t.kind = Tok::kLParen; break;
          case ')': t.kind = Tok::kRParen; break;
          case '[': t.kind = Tok::kLBracket; break;
          case ']': t.kind = Tok::kRBracket; break;
          case '|': t.kind = Tok::kBar; break;
          case ',': t.kind = Tok::kComma; break;
          case '.': t.kind = Tok::kDot; break;
          default:
            throw SyntaxError(line_, column_,
                              std::string("unexpected character '") + c + "'");
        }
        advance(1);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char peek(std::size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n && pos_ < text_.size(); ++k) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else {
        return;
      }
    }
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      advance(1);
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::kName: return "a name";
    case Tok::kVariable: return "a variable";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kLBracket: return "'['";
    case Tok::kRBracket: return "']'";
    case Tok::kBar: return "'|'";
    case Tok::kComma: return "','";
    case Tok::kDot: return "'.'";
    case Tok::kNeck: return "':-'";
    case Tok::kQuery: return "'?-'";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  Program program() {
    Program p;
    while (!at(Tok::kEnd)) {
      if (at(Tok::kQuery)) fail("queries are not allowed in a program");
      p.insert(rule());
    }
    return p;
  }

  Query query() {
    accept(Tok::kQuery);
    Query q;
    q.goals.push_back(atom());
    while (accept(Tok::kComma)) q.goals.push_back(atom());
    expect(Tok::kDot);
    expect(Tok::kEnd);
    return q;
  }

  Rule single_rule() {
    Rule r = rule();
    expect(Tok::kEnd);
    return r;
  }

  Atom single_atom() {
    Atom a = atom();
    accept(Tok::kDot);
    expect(Tok::kEnd);
    return a;
  }

  Term single_term() {
    Term t = term();
    expect(Tok::kEnd);
    return t;
  }

 private:
  const Token& current() const { return tokens_[pos_]; }
  bool at(Tok k) const { return current().kind == k; }

  bool accept(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }

  const Token& expect(Tok k) {
    if (!at(k)) {
      fail(std::string("expected ") + describe(k) + ", found " +
           describe(current().kind));
    }
    return tokens_[pos_++];
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(current().line, current().column, message);
  }

  Rule rule() {
    Atom head = atom();
    std::vector<Atom> body;
    if (accept(Tok::kNeck)) {
      body.push_back(atom());
      while (accept(Tok::kComma)) body.push_back(atom());
    }
    expect(Tok::kDot);
    return Rule(std::move(head), std::move(body));
  }

  Atom atom() {
    if (!at(Tok::kName)) {
      fail(std::string("expected an atom, found ") + describe(current().kind));
    }
    std::string pred = tokens_[pos_++].text;
    return Atom(std::move(pred), arguments());
  }

  std::vector<Term> arguments() {
    std::vector<Term> args;
    if (!accept(Tok::kLParen)) return args;
    args.push_back(term());
    while (accept(Tok::kComma)) args.push_back(term());
    expect(Tok::kRParen);
    return args;
  }

  Term term() {
    if (at(Tok::kVariable)) {
      std::string name = tokens_[pos_++].text;
      if (name == "_") name = "_A" + std::to_string(++anonymous_);
      return Term::variable(std::move(name));
    }
    if (at(Tok::kName)) {
      std::string name = tokens_[pos_++].text;
      return Term::compound(std::move(name), arguments());
    }
    if (accept(Tok::kLBracket)) {
      if (accept(Tok::kRBracket)) return Term::nil();
      std::vector<Term> items;
      items.push_back(term());
      while (accept(Tok::kComma)) items.push_back(term());
      Term tail = Term::nil();
      if (accept(Tok::kBar)) tail = term();
      expect(Tok::kRBracket);
      return Term::list(std::move(items), std::move(tail));
    }
    fail(std::string("expected a term, found ") + describe(current().kind));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t anonymous_ = 0;
};

bool is_cons(const Term& t) {
  return t.is_compound() && t.arity() == 2 && t.name() == kConsFunctor;
}

void write(std::ostream& os, const Term& t) {
  if (is_cons(t)) {
    os << '[';
    const Term* cell = &t;
    bool first = true;
    while (is_cons(*cell)) {
      if (!first) os << ',';
      first = false;
      write(os, cell->args()[0]);
      cell = &cell->args()[1];
    }
    if (!(cell->is_constant() && cell->name() == kNilConstant)) {
      os << '|';
      write(os, *cell);
    }
    os << ']';
    return;
  }
  os << t.name();
  if (t.is_compound()) {
    os << '(';
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (i) os << ',';
      write(os, t.args()[i]);
    }
    os << ')';
  }
}

void write(std::ostream& os, const Atom& a) {
  os << a.predicate();
  if (a.arity() == 0) return;
  os << '(';
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (i) os << ',';
    write(os, a.args()[i]);
  }
  os << ')';
}

void write_atoms(std::ostream& os, const std::vector<Atom>& atoms) {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) os << ", ";
    write(os, atoms[i]);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).program(); }
Query parse_query(std::string_view text) { return Parser(text).query(); }
Atom parse_atom(std::string_view text) { return Parser(text).single_atom(); }
Term parse_term(std::string_view text) { return Parser(text).single_term(); }
Rule parse_rule(std::string_view text) { return Parser(text).single_rule(); }

std::string to_string(const Term& t) {
  std::ostringstream os;
  write(os, t);
  return os.str();
}

std::string to_string(const Atom& a) {
  std::ostringstream os;
  write(os, a);
  return os.str();
}

std::string to_string(const Rule& r) {
  std::ostringstream os;
  write(os, r.head());
  if (r.is_proper()) {
    os << " :- ";
    write_atoms(os, r.body());
  }
  return os.str();
}

std::string to_string(const Program& p) {
  std::string out;
  for (const Rule& r : p.sorted()) {
    out += to_string(r);
    out += ".\n";
  }
  return out;
}

std::string to_string(const Query& q) {
  std::ostringstream os;
  os << "?- ";
  write_atoms(os, q.goals);
  os << '.';
  return os.str();
}

std::string goals_to_string(const std::vector<Atom>& goals) {
  if (goals.empty()) return "□";
  std::ostringstream os;
  write_atoms(os, goals);
  return os.str();
}

SourceDocument load_program_file(const std::string& path) {
  SourceDocument doc;
  doc.path = path;
  try {
    doc.text = read_file(path);
  } catch (const Error& e) {
    doc.diagnostics.push_back({0, 0, e.what()});
    return doc;
  }
  try {
    doc.parsed = parse_program(doc.text);
  } catch (const SyntaxError& e) {
    doc.diagnostics.push_back({e.line(), e.column(), e.message()});
  }
  return doc;
}

SourceDocument load_query_text(const std::string& text) {
  SourceDocument doc;
  doc.path = "<query>";
  doc.text = text;
  try {
    doc.parsed = parse_query(text);
  } catch (const SyntaxError& e) {
    doc.diagnostics.push_back({e.line(), e.column(), e.message()});
  }
  return doc;
}

}  // namespace horn
