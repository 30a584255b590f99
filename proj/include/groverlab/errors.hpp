// Copyright 2026 The groverlab Authors
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

namespace groverlab {

// Invalid arguments use std::invalid_argument directly. The types below
// distinguish the remaining failure classes surfaced by the library.

// A required column/field is missing or an input file has the wrong shape.
class SchemaError : public std::runtime_error {
  public:
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed content (non-numeric cell, bad label, ...) with a location.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation needs inputs that were not supplied (e.g. a missing
// tomography setting or Pauli expectation).
class IncompleteDataError : public std::runtime_error {
  public:
    explicit IncompleteDataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Supplied data is present but violates a quality gate (e.g. a raw
// tomography matrix whose trace is far from one).
class DataQualityError : public std::runtime_error {
  public:
    explicit DataQualityError(const std::string& msg) : std::runtime_error(msg) {}
};

// The request exceeds a configured width/memory cap.
class ResourceError : public std::runtime_error {
  public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Fewer samples than the statistic requires.
class InsufficientDataError : public std::runtime_error {
  public:
    explicit InsufficientDataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace groverlab
