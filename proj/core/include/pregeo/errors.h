// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PREGEO_ERRORS_H_
#define PREGEO_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace pregeo {

// Base of every error thrown by the library. The CLI maps all of them to
// exit code 3 except where a subclass is reported as a property failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: out-of-range indices, duplicate lines, p == q, ...
class InputError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed a documented bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A closure table handed to Matroid::Validate violates an axiom.
class AxiomError : public Error {
 public:
  using Error::Error;
};

// Wrong rank for a plane, empty geometry where points are needed.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A plane requested in projective mode has a pair of parallel lines.
class NotProjectiveError : public Error {
 public:
  NotProjectiveError(std::string message, std::string first_line,
                     std::string second_line)
      : Error(std::move(message)),
        first_line_(std::move(first_line)),
        second_line_(std::move(second_line)) {}

  const std::string& first_line() const { return first_line_; }
  const std::string& second_line() const { return second_line_; }

 private:
  std::string first_line_;
  std::string second_line_;
};

// meet() on two parallel lines of an affine-mode plane.
class NoIntersectionError : public Error {
 public:
  using Error::Error;
};

// A ground map that does not send flats to flats.
class NotAnAutomorphismError : public Error {
 public:
  NotAnAutomorphismError(std::string message, std::string violated_flat)
      : Error(std::move(message)), violated_flat_(std::move(violated_flat)) {}

  const std::string& violated_flat() const { return violated_flat_; }

 private:
  std::string violated_flat_;
};

// Group tables that break a group law.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Text-format errors. The message already carries the line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace pregeo

#endif  // PREGEO_ERRORS_H_
