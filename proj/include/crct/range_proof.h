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

// Bit-decomposition range proof.
//
// An amount a < 2^W with blinding b is split into bits a_k. Each bit gets a
// commitment B_k = r_k G + a_k H with sum_k 2^k r_k = b, so that
// sum_k 2^k B_k equals the amount commitment. Every B_k carries a two-key
// ring signature over {B_k, B_k - H}, which shows B_k commits to 0 or 1
// without saying which.
//
// Wire format: varint W || W bit commitments || W bit proofs (c0 || s0 || s1).

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "crct/pedersen.h"

namespace crct::tx {

inline constexpr std::size_t kMaxRangeBits = 64;
inline constexpr std::size_t kDefaultRangeBits = 64;

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// One-of-two ring signature for a single bit commitment.
struct BitProof {
  Scalar c0;
  Scalar s0;
  Scalar s1;

  friend bool operator==(const BitProof&, const BitProof&) = default;
};

struct RangeProof {
  std::vector<pedersen::Commitment> bit_commitments;
  std::vector<BitProof> bit_proofs;

  std::size_t width() const { return bit_commitments.size(); }
  friend bool operator==(const RangeProof&, const RangeProof&) = default;
};

/// Throws RangeError unless 1 <= width <= 64 and amount < 2^width.
RangeProof range_prove(std::uint64_t amount, const Scalar& blinding, std::size_t width, Rng& rng);
bool range_verify(const pedersen::Commitment& amount_commitment, const RangeProof& proof);

std::size_t range_proof_wire_size(std::size_t width);

}  // namespace crct::tx
