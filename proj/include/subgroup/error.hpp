/*
 * Copyright 2026 The sgmine Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SUBGROUP_ERROR_HPP_
#define SUBGROUP_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subgroup {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// A performance measure was requested on a multiset that violates its
// definedness constraint (e.g. ROC AUC on a single-class cover).
class UndefinedMeasure : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "undefined_measure"; }
};

// Malformed input data. Row and column are 1-based; 0 means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t row = 0,
             std::size_t column = 0)
      : Error(Describe(what, row, column)), row_(row), column_(column) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }
  const char* kind() const noexcept override { return "parse_error"; }

 private:
  static std::string Describe(const std::string& what, std::size_t row,
                              std::size_t column) {
    std::string out = what;
    if (row != 0) out += " (row " + std::to_string(row);
    if (column != 0) {
      out += row != 0 ? ", column " : " (column ";
      out += std::to_string(column);
    }
    if (row != 0 || column != 0) out += ")";
    return out;
  }

  std::size_t row_;
  std::size_t column_;
};

// Invalid configuration or violated operation precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid_argument"; }
};

}  // namespace subgroup

#endif  // SUBGROUP_ERROR_HPP_
