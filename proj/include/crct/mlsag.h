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

// Multilayered Linkable Spontaneous Ad-hoc Group signatures (MLSAG).
//
// A ring is an n x M matrix of public keys. The signer knows the secret key
// of every entry in one row (the secret index). The first d columns are
// linkable: each of them carries a key image I_j = x_j * Hp(P_pi^j) and two
// points (L, R) enter the challenge hash. The remaining M - d columns only
// contribute L and carry no key image. Plain MLSAG is the case d = M.
//
// Challenge for row i+1 (rows wrap mod n):
//   c_{i+1} = Hs(msg || L_i^1 || R_i^1 || ... || L_i^d || R_i^d || L_i^{d+1} || ... || L_i^M)
//   L_i^j = s_i^j G + c_i P_i^j,  R_i^j = s_i^j Hp(P_i^j) + c_i I_j
//
// Wire format: c1 || s (row-major, n*M scalars) || key images (d points),
// i.e. exactly (n*M + 1 + d) * 32 bytes.

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "crct/group.h"
#include "crct/matrix.h"

namespace crct::mlsag {

/// Raised when the supplied secrets do not open the claimed ring row.
class SigningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when ring, signature and secrets disagree on dimensions.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct KeyVector {
  std::vector<Point> publics;
  /// Empty for decoy vectors.
  std::vector<Scalar> secrets;

  bool has_secrets() const { return !secrets.empty(); }
};

struct Ring {
  Matrix<Point> matrix;
  std::optional<std::size_t> secret_index;
  /// One per linkable column.
  std::vector<Point> key_images;
};

struct Signature {
  Scalar c1;
  Matrix<Scalar> responses;
  std::vector<Point> key_images;

  friend bool operator==(const Signature&, const Signature&) = default;
};

KeyVector keygen(std::size_t m, Rng& rng);

Point key_image(const Scalar& secret, const Point& public_key);

/// Inserts `own` at a uniformly random row among the decoys and computes the
/// key images. Requires at least one decoy and equal vector lengths.
Ring keyselect(const KeyVector& own, std::span<const KeyVector> decoys, Rng& rng);

/// Builds a ring over an existing matrix. Key images are computed for the
/// first `linkable_columns` columns of row `secret_index`.
Ring make_ring(Matrix<Point> matrix, std::size_t secret_index, std::span<const Scalar> secrets,
               std::size_t linkable_columns);

/// Checks every secret against its public key (and key image) before signing.
Signature sign(ByteView msg, const Ring& ring, std::span<const Scalar> secrets, Rng& rng);

/// Same algorithm without the secret/public consistency check. The result only
/// verifies if the secrets are in fact correct; used to demonstrate rejection
/// of dishonest signers.
Signature sign_unchecked(ByteView msg, const Ring& ring, std::span<const Scalar> secrets,
                         Rng& rng);

/// Reads only (msg, sig, matrix); the secret index is never needed.
bool verify(ByteView msg, const Signature& sig, const Matrix<Point>& matrix);

/// True iff the key-image sets intersect.
bool link(const Signature& a, const Signature& b);

std::size_t wire_size(std::size_t rows, std::size_t cols, std::size_t linkable_columns);
Bytes encode(const Signature& sig);
Signature decode(ByteView bytes, std::size_t rows, std::size_t cols, std::size_t linkable_columns);

}  // namespace crct::mlsag
