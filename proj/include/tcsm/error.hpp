// Copyright 2026 The tcsm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TCSM_ERROR_HPP_
#define TCSM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace tcsm {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration or out-of-range parameter.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Array shape does not match what the operation requires.
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& msg) : Error(msg) {}
};

// Filesystem / decoding problem.
class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

// Corrupt or truncated persisted state (checksum mismatch etc).
class IntegrityError : public Error {
 public:
  explicit IntegrityError(const std::string& msg) : Error(msg) {}
};

// Refusal to clobber existing results without an explicit overwrite flag.
class StateError : public Error {
 public:
  explicit StateError(const std::string& msg) : Error(msg) {}
};

}  // namespace tcsm

#endif  // TCSM_ERROR_HPP_
