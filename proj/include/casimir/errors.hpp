/*
 * Copyright 2026 The casimir-engine Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Argument outside the mathematical domain of an operation (T <= 0, xi <= 0, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed input data: optical tables, mode bases, configuration values.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// The round-trip operator of a cavity has a non-positive determinant.
/// Signals |r| > 1 physics or a basis too coarse to resolve the operator.
class UnstableRoundTrip : public std::runtime_error {
 public:
  explicit UnstableRoundTrip(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace casimir
