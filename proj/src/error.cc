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

#include "forge/error.h"

namespace forge {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyCircuit:
      return "EmptyCircuit";
    case ErrorKind::kNonAntichain:
      return "NonAntichain";
    case ErrorKind::kEliminationFailure:
      return "EliminationFailure";
    case ErrorKind::kGroundCapExceeded:
      return "GroundCapExceeded";
    case ErrorKind::kDuplicateLabel:
      return "DuplicateLabel";
    case ErrorKind::kUnknownElement:
      return "UnknownElement";
    case ErrorKind::kOverlappingSets:
      return "OverlappingSets";
    case ErrorKind::kNotABase:
      return "NotABase";
    case ErrorKind::kDisconnected:
      return "Disconnected";
    case ErrorKind::kDecompositionRequestedOnOddSet:
      return "DecompositionRequestedOnOddSet";
    case ErrorKind::kCyclicityViolation:
      return "CyclicityViolation";
    case ErrorKind::kAsymmetryViolation:
      return "AsymmetryViolation";
    case ErrorKind::kTransitivityViolation:
      return "TransitivityViolation";
    case ErrorKind::kTotalityViolation:
      return "TotalityViolation";
    case ErrorKind::kNotASubset:
      return "NotASubset";
    case ErrorKind::kSingletonOrder:
      return "SingletonOrder";
    case ErrorKind::kEmptySelection:
      return "EmptySelection";
    case ErrorKind::kDomainMismatch:
      return "DomainMismatch";
    case ErrorKind::kInconsistentTraversal:
      return "InconsistentTraversal";
    case ErrorKind::kInconsistentBondSides:
      return "InconsistentBondSides";
    case ErrorKind::kNoWitnessCocircuit:
      return "NoWitnessCocircuit";
    case ErrorKind::kNotACyclicOrder:
      return "NotACyclicOrder";
    case ErrorKind::kLabelMismatch:
      return "LabelMismatch";
    case ErrorKind::kNotConnected:
      return "NotConnected";
    case ErrorKind::kNotAVertex:
      return "NotAVertex";
    case ErrorKind::kNotACut:
      return "NotACut";
    case ErrorKind::kNotACircuit:
      return "NotACircuit";
    case ErrorKind::kNoBridge:
      return "NoBridge";
    case ErrorKind::kNotThreeConnected:
      return "NotThreeConnected";
    case ErrorKind::kNotABridge:
      return "NotABridge";
    case ErrorKind::kNotGraphic:
      return "NotGraphic";
    case ErrorKind::kCertificateFailure:
      return "CertificateFailure";
    case ErrorKind::kParseError:
      return "ParseError";
    case ErrorKind::kInvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace forge
