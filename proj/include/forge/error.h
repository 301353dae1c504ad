// Copyright 2026 The Authors.
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

#ifndef FORGE_ERROR_H_
#define FORGE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace forge {

enum class ErrorKind {
  // matroid core
  kEmptyCircuit,
  kNonAntichain,
  kEliminationFailure,
  kGroundCapExceeded,
  kDuplicateLabel,
  kUnknownElement,
  kOverlappingSets,
  kNotABase,
  kDisconnected,
  kDecompositionRequestedOnOddSet,
  // cyclic orders
  kCyclicityViolation,
  kAsymmetryViolation,
  kTransitivityViolation,
  kTotalityViolation,
  kNotASubset,
  kSingletonOrder,
  kEmptySelection,
  // signings and frameworks
  kDomainMismatch,
  kInconsistentTraversal,
  kInconsistentBondSides,
  kNoWitnessCocircuit,
  kNotACyclicOrder,
  // realizer
  kLabelMismatch,
  kNotConnected,
  kNotAVertex,
  kNotACut,
  // bridges
  kNotACircuit,
  kNoBridge,
  kNotThreeConnected,
  kNotABridge,
  kNotGraphic,
  kCertificateFailure,
  // input
  kParseError,
  kInvalidArgument,
};

std::string_view ErrorKindName(ErrorKind kind);

// Every failure raised by the library. The message carries the witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace forge

#endif  // FORGE_ERROR_H_
