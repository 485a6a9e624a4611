// Copyright 2026 The owc Authors.
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

#ifndef OWC_ERROR_HPP_
#define OWC_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace owc {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid graph construction: self-loops, out-of-range ids, bad parameters.
class GraphError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input. `position` is a byte offset for graph6 and a
// 1-based line number for line-oriented formats.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An operation needed a path between two vertices and none exists.
class DisconnectedError : public Error {
 public:
  using Error::Error;
};

// Exact search refused because the order exceeds the configured cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

// A construction was asked to run on inputs that do not satisfy its
// hypotheses.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace owc

#endif  // OWC_ERROR_HPP_
