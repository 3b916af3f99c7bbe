// SPDX-License-Identifier: Apache-2.0
//
// oamcap: electromagnetic capacity analysis of UCA-based OAM links
// Copyright (C) 2026 The oamcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace oamcap {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition on an argument does not hold.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Source and field point closer than the kernel's singular radius.
class SingularSeparation : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class NonHermitianInput : public Error {
public:
    using Error::Error;
};

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& what)
        : Error(format(source, line, column, what)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& source, std::size_t line, std::size_t column,
                              const std::string& what) {
        std::string msg = source;
        if (line > 0) {
            msg += ":" + std::to_string(line);
            if (column > 0) msg += ":" + std::to_string(column);
        }
        return msg + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

/// Field-export groups disagree on their sample positions.
class InconsistentGrid : public Error {
public:
    using Error::Error;
};

/// Run-configuration problem tied to one key.
class ConfigError : public Error {
public:
    ConfigError(std::string key, const std::string& what) : Error(what), key_(std::move(key)) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

class MissingKey : public ConfigError {
public:
    explicit MissingKey(const std::string& key) : ConfigError(key, "missing required key '" + key + "'") {}
};

class BadUnit : public ConfigError {
public:
    BadUnit(const std::string& key, const std::string& what)
        : ConfigError(key, "bad unit for '" + key + "': " + what) {}
};

class RangeError : public ConfigError {
public:
    RangeError(const std::string& key, const std::string& what)
        : ConfigError(key, "value out of range for '" + key + "': " + what) {}
};

}  // namespace oamcap
