// Copyright 2026 The simplicial-lines Authors
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

#ifndef SIMPLICIAL_LINES_ERROR_HPP_
#define SIMPLICIAL_LINES_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace simplicial_lines {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphError : public Error {
 public:
  enum class Kind {
    kLoopEdge,
    kDuplicateEdge,
    kVertexOutOfRange,
    kInvalidParameter,
    kTooLarge,
  };

  GraphError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Malformed edge-list or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Operation requires a non-void complex, or a generator was empty.
class ComplexError : public Error {
 public:
  using Error::Error;
};

// A theorem check was invoked on a graph outside its hypotheses.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class MonomialError : public Error {
 public:
  using Error::Error;
};

class ShellingError : public Error {
 public:
  enum class Kind {
    kInvalidOrdering,
    kBoundExceeded,
    kNonMinimalSystem,
    kIndexOutOfRange,
    kEmptyPrefix,
  };

  ShellingError(Kind kind, const std::string& what)
      : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace simplicial_lines

#endif  // SIMPLICIAL_LINES_ERROR_HPP_
