// Copyright 2026 The lenskit Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace lenskit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input. Maps to CLI exit code 2.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Input the float arrangement engine cannot resolve (tangencies, clustered
// vertices). The exact census is the fallback.
class DegenerateInput : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// A computed object contradicts a published bound or structure theorem.
// Carries a JSON witness. Maps to CLI exit code 3.
class Falsification : public Error {
 public:
  Falsification(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

// Two internal computations disagree. Maps to CLI exit code 4.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace lenskit
