// Copyright 2026 The noonqfi Authors
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

/**
 * @file
 * Exception types thrown by the library. Everything derives from
 * noonqfi::Error so callers can catch at whatever granularity they need.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace noonqfi {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Truncation too small to hold the state, or mismatched dimensions.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// A density matrix with a significantly negative eigenvalue.
class InvalidStateError : public Error {
  public:
    using Error::Error;
};

/// Operands expressed in incompatible bases or otherwise violating a call
/// contract.
class ContractError : public Error {
  public:
    using Error::Error;
};

class InsufficientDataError : public Error {
  public:
    using Error::Error;
};

/// Optimal-N search requested where the optimum does not exist (r = 0).
class DivergentOptimumError : public Error {
  public:
    using Error::Error;
};

/// Zero Fisher information: the phase cannot be estimated at all.
class UnboundedUncertaintyError : public Error {
  public:
    using Error::Error;
};

struct TruncationStep {
    int dim = 0;
    double qfi = 0.0;
    double trace = 0.0;
};

class ConvergenceError : public Error {
  public:
    ConvergenceError(const std::string &what, std::vector<TruncationStep> history)
        : Error(what), history_(std::move(history)) {}

    [[nodiscard]] const std::vector<TruncationStep> &history() const noexcept {
        return history_;
    }

  private:
    std::vector<TruncationStep> history_;
};

/// Optimal-N scan hit its upper bound; carries the QFI values seen so far
/// (index i holds N = i + 1).
class ScanCapError : public Error {
  public:
    ScanCapError(const std::string &what, std::vector<double> partial)
        : Error(what), partial_(std::move(partial)) {}

    [[nodiscard]] const std::vector<double> &partial() const noexcept {
        return partial_;
    }

  private:
    std::vector<double> partial_;
};

class ParseError : public Error {
  public:
    ParseError(const std::string &what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace noonqfi
