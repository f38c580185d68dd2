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

#include "crct/range_proof.h"

#include "crct/wire.h"

#include <string>

namespace crct::tx {
namespace {

Scalar bit_challenge(const Point& bit_commitment, const Point& l) {
  ByteWriter w;
  w.str("crct/bit");
  w.point(bit_commitment);
  w.point(l);
  return hash_to_scalar(w.bytes());
}

BitProof prove_bit(const Point& commitment, bool bit, const Scalar& blinding, Rng& rng) {
  const Point keys[2] = {commitment, commitment - params().H};
  const std::size_t real = bit ? 1 : 0;
  const std::size_t other = 1 - real;

  Scalar e[2], s[2];
  const Scalar alpha = rng.scalar();
  e[other] = bit_challenge(commitment, mul_base(alpha));
  s[other] = rng.scalar();
  e[real] = bit_challenge(commitment, mul_base(s[other]) + e[other] * keys[other]);
  s[real] = alpha - e[real] * blinding;
  return {e[0], s[0], s[1]};
}

bool verify_bit(const Point& commitment, const BitProof& p) {
  const Point l0 = mul_base(p.s0) + p.c0 * commitment;
  const Scalar c1 = bit_challenge(commitment, l0);
  const Point l1 = mul_base(p.s1) + c1 * (commitment - params().H);
  return bit_challenge(commitment, l1) == p.c0;
}

}  // namespace

RangeProof range_prove(std::uint64_t amount, const Scalar& blinding, std::size_t width,
                       Rng& rng) {
  if (width == 0 || width > kMaxRangeBits) throw RangeError("range proof width must be 1..64");
  if (width < 64 && (amount >> width) != 0)
    throw RangeError("amount does not fit in " + std::to_string(width) + " bits");

  // Pick bit blindings so that sum_k 2^k r_k == blinding.
  std::vector<Scalar> r(width);
  Scalar acc;
  Scalar pow2 = Scalar::one();
  const Scalar two = Scalar::from_u64(2);
  for (std::size_t k = 0; k + 1 < width; ++k) {
    r[k] = rng.scalar();
    acc += pow2 * r[k];
    pow2 = pow2 * two;
  }
  r[width - 1] = (blinding - acc) * pow2.invert();

  RangeProof proof;
  for (std::size_t k = 0; k < width; ++k) {
    const bool bit = (amount >> k) & 1;
    auto c = pedersen::commit(Scalar::from_u64(bit), r[k]);
    proof.bit_proofs.push_back(prove_bit(c.point, bit, r[k], rng));
    proof.bit_commitments.push_back(c);
  }
  return proof;
}

bool range_verify(const pedersen::Commitment& amount_commitment, const RangeProof& proof) {
  const std::size_t width = proof.width();
  if (width == 0 || width > kMaxRangeBits || proof.bit_proofs.size() != width) return false;
  Point sum = proof.bit_commitments[width - 1].point;
  for (std::size_t k = width - 1; k-- > 0;) sum = sum + sum + proof.bit_commitments[k].point;
  if (sum != amount_commitment.point) return false;
  for (std::size_t k = 0; k < width; ++k)
    if (!verify_bit(proof.bit_commitments[k].point, proof.bit_proofs[k])) return false;
  return true;
}

std::size_t range_proof_wire_size(std::size_t width) {
  return varint_size(width) + width * (kPointBytes + 3 * kScalarBytes);
}

}  // namespace crct::tx
