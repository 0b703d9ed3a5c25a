// Copyright 2026 The jrg Authors.
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

#include <stdexcept>
#include <string>

namespace jrg {

// Base of every error thrown by the library. `code()` is a stable,
// machine-parsable token used by the CLI on its single-line error output.
class Error : public std::runtime_error {
 public:
  Error(const char* code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  const char* code() const noexcept { return code_; }

 private:
  const char* code_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error("E_USAGE", what) {}
};

class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what) : Error("E_PARAM", what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error("E_VALIDATION", what) {}
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what)
      : Error("E_CAPACITY", what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("E_IO", what) {}
};

}  // namespace jrg
