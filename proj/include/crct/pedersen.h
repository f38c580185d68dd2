// Copyright 2026 The crct Authors.
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

// Pedersen commitments C(a, x) = xG + aH and Schnorr proofs that a point is a
// commitment to zero (knowledge of x with C = xG).

#include <span>

#include "crct/group.h"

namespace crct::pedersen {

struct Commitment {
  Point point;

  friend bool operator==(const Commitment&, const Commitment&) = default;
};

/// The (value, blinding) pair that opens a commitment.
struct Opening {
  Scalar value;
  Scalar blinding;

  friend bool operator==(const Opening&, const Opening&) = default;
};

/// 64 bytes on the wire: challenge || response.
struct SchnorrProof {
  Scalar challenge;
  Scalar response;

  friend bool operator==(const SchnorrProof&, const SchnorrProof&) = default;
};

inline constexpr std::size_t kSchnorrProofBytes = 64;

Commitment commit(const Scalar& value, const Scalar& blinding);
inline Commitment commit(const Opening& o) { return commit(o.value, o.blinding); }

/// Sum of `positives` minus sum of `negatives`.
Commitment combine(std::span<const Commitment> positives, std::span<const Commitment> negatives);

bool verify_opening(const Commitment& c, const Opening& o);

/// Schnorr signature on `msg` under public key `c` with base G. Only verifies
/// when c == blinding * G, i.e. the committed value is zero.
SchnorrProof prove_zero(const Commitment& c, const Scalar& blinding, ByteView msg, Rng& rng);
bool verify_zero(const Commitment& c, const SchnorrProof& proof, ByteView msg);

}  // namespace crct::pedersen
