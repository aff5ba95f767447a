// Copyright 2026 The Hydrotwin Authors
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

namespace hydrotwin {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input outside the mathematical/physical domain of an operation
/// (out-of-limit joint state, negative pressure, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Value outside a representable/feasible range (e.g. cylinder length
/// violating the linkage triangle inequality).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration (geometry, plant, CLI options).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed file contents: missing columns, bad headers, unparsable cells.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Non-uniform or non-increasing timestamps in a signal log.
class TimingError : public Error {
 public:
  using Error::Error;
};

/// Numerical conditioning failure (Cholesky did not succeed after the
/// maximum jitter escalation).
class ConditioningError : public Error {
 public:
  using Error::Error;
};

/// Too few rows to train a model partition; message names the partition.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Kinematic singularity guard (linkage gain below threshold).
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// A model bundle was produced with a different geometry than the one
/// supplied for featurization.
class GeometryMismatchError : public Error {
 public:
  using Error::Error;
};

/// Persisted artifact has an unsupported format version.
class VersionError : public Error {
 public:
  using Error::Error;
};

}  // namespace hydrotwin
