// Copyright 2026 The bireg Authors.
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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace bireg {

// Base of everything thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller handed us something outside an operation's domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine would exceed its configured work bound.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t progress)
      : Error(what), progress_(progress) {}
  std::uint64_t progress() const noexcept { return progress_; }

 private:
  std::uint64_t progress_;
};

// (n, k) outside every class the constructive solvers know how to handle.
class UncoveredParameters : public Error {
 public:
  using Error::Error;
};

// A construction whose success is guaranteed by a proven lemma failed.
// Carries the full state so the instance can be studied offline.
class LemmaViolation : public Error {
 public:
  LemmaViolation(const std::string& what, nlohmann::json artifact)
      : Error(what), artifact_(std::move(artifact)) {}
  const nlohmann::json& artifact() const noexcept { return artifact_; }

 private:
  nlohmann::json artifact_;
};

}  // namespace bireg
