/*
   Copyright 2026 The gkmcoh Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace gkm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// mismatched variable counts, vector lengths, matrix shapes
struct DimensionError : Error {
    using Error::Error;
};

// malformed input data: bad graphs, labels, serialized payloads
struct ValidationError : Error {
    using Error::Error;
};

// an operation was called outside its stated precondition
struct PreconditionError : Error {
    using Error::Error;
};

// moduli of a congruence system are linearly dependent where
// independence is required
struct IndependenceError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// collinear or otherwise degenerate vertex configurations
struct DegenerateGeometryError : PreconditionError {
    using PreconditionError::PreconditionError;
};

} // namespace gkm
