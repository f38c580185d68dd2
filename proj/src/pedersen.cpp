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

#include "crct/pedersen.h"

#include "crct/wire.h"

namespace crct::pedersen {
namespace {

constexpr std::string_view kZeroProofTag = "crct/zero";

Scalar zero_challenge(const Point& key, const Point& nonce_point, ByteView msg) {
  ByteWriter w;
  w.str(kZeroProofTag);
  w.point(key);
  w.point(nonce_point);
  w.raw(msg);
  return hash_to_scalar(w.bytes());
}

}  // namespace

Commitment commit(const Scalar& value, const Scalar& blinding) {
  return {mul_base(blinding) + value * params().H};
}

Commitment combine(std::span<const Commitment> positives, std::span<const Commitment> negatives) {
  Point acc;
  for (const auto& c : positives) acc += c.point;
  for (const auto& c : negatives) acc -= c.point;
  return {acc};
}

bool verify_opening(const Commitment& c, const Opening& o) { return commit(o) == c; }

SchnorrProof prove_zero(const Commitment& c, const Scalar& blinding, ByteView msg, Rng& rng) {
  const Scalar k = rng.scalar();
  const Scalar e = zero_challenge(c.point, mul_base(k), msg);
  return {e, k - e * blinding};
}

bool verify_zero(const Commitment& c, const SchnorrProof& proof, ByteView msg) {
  // R = sG + eC reproduces kG exactly when C = xG and s = k - e x.
  const Point r = mul_base(proof.response) + proof.challenge * c.point;
  return zero_challenge(c.point, r, msg) == proof.challenge;
}

}  // namespace crct::pedersen
