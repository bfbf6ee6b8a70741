// Copyright 2026 The bsa-synth Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An angle left the dyadic family or was otherwise malformed.
class AngleError : public Error {
 public:
  using Error::Error;
};

/// A circuit or gate violated a structural invariant.
class CircuitError : public Error {
 public:
  using Error::Error;
};

/// Text input (circuit, layout or basis file) could not be parsed.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Simulation precondition or verification failure.
class SimulationError : public Error {
 public:
  using Error::Error;
};

/// Synthesis could not produce a circuit for the request.
class SynthesisError : public Error {
 public:
  using Error::Error;
};

/// A gate has no rewrite chain into the requested basis, or a non-native
/// gate reached native-only code.
class TranspileError : public Error {
 public:
  using Error::Error;
};

/// Placement or routing failed on the given coupling graph.
class LayoutError : public Error {
 public:
  using Error::Error;
};

}  // namespace bsa
