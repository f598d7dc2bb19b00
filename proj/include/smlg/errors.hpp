// Copyright 2026 The smlg Authors
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

#ifndef SMLG_ERRORS_HPP
#define SMLG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smlg {

/// Input file/text could not be parsed. `line` is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Edge set contains a directed cycle.
class NotADagError : public std::runtime_error {
 public:
  explicit NotADagError(const std::string& what) : std::runtime_error(what) {}
};

/// Graph is acyclic but some edge does not advance the level by exactly one.
class NotLevelDagError : public std::runtime_error {
 public:
  explicit NotLevelDagError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A gate that requires a clean (all-zero) target found a dirty one.
class ScratchNotCleanError : public std::logic_error {
 public:
  explicit ScratchNotCleanError(const std::string& what)
      : std::logic_error(what) {}
};

/// Simulator state failed an internal consistency requirement.
class StateCorruptionError : public std::logic_error {
 public:
  explicit StateCorruptionError(const std::string& what)
      : std::logic_error(what) {}
};

/// Random instance generation exhausted its retry budget.
class GenerationError : public std::runtime_error {
 public:
  explicit GenerationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace smlg

#endif
