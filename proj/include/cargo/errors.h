// Copyright 2026 The cargo-triangles Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CARGO_ERRORS_H_
#define CARGO_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cargo {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file or CSV text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Invalid argument: non-positive budget, bad split, unsupported size.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Function evaluated outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A protocol rule was violated, e.g. a multiplication group was reused.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// File could not be opened or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cargo

#endif  // CARGO_ERRORS_H_
