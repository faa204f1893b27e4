// Copyright 2026 The QARN Authors
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

namespace qarn {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range caller input.
class InputError : public Error {
  public:
    using Error::Error;
};

/// Requested state would exceed the configured amplitude cap.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Numerical invariant violated inside a kernel (e.g. norm drift).
class NumericError : public Error {
  public:
    using Error::Error;
};

} // namespace qarn
