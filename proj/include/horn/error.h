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

#ifndef HORN_ERROR_H_
#define HORN_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace horn {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation that requires ground input received a rule with variables.
class NotGroundError : public Error {
 public:
  using Error::Error;
};

// Malformed arguments: an interpretation outside the Herbrand base, an empty
// ground term universe, a program that is too large for a bitset encoding.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured enumeration cap was hit. Callers see this instead of a hang.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace horn

#endif  // HORN_ERROR_H_
