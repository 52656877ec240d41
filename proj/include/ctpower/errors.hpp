// Copyright 2026 The ctpower Authors
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

namespace ctpower {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Amplitudes or channel parameters do not satisfy their unit-norm constraint.
class NormalizationError : public Error {
   public:
    using Error::Error;
};

class DimensionError : public Error {
   public:
    using Error::Error;
};

class IndexError : public Error {
   public:
    using Error::Error;
};

/// A scalar parameter lies outside its admissible interval.
class RangeError : public Error {
   public:
    using Error::Error;
};

/// A controller measurement vector has zero norm before normalization.
class DegenerateBasis : public Error {
   public:
    using Error::Error;
};

/// The receiver's corrected states differ across the sender's outcomes.
class CorrectionMismatch : public Error {
   public:
    using Error::Error;
};

/// A mismatched-channel query was made with identical channel and input families.
class MatchedFamiliesError : public Error {
   public:
    using Error::Error;
};

class ConvergenceError : public Error {
   public:
    using Error::Error;
};

/// A raw channel was used for controlled teleportation without a controller basis.
class MissingControllerBasis : public Error {
   public:
    using Error::Error;
};

/// Malformed channel config text.
class ParseError : public Error {
   public:
    using Error::Error;
};

}  // namespace ctpower
